#include "support/oracles.hpp"

#include "semicond/lattice.hpp"

#include <algorithm>
#include <set>

namespace semicond::testing::oracle {

std::vector<Vec> brute_force_conductor_generators(const SaturationResult& sat, int slack) {
    const AffineSemigroup& S = sat.base;
    if (sat.module_generators.size() == 1) return {zero_vec(S.ambient_dim())};
    Int bound = 2 * degree(conductor_element(sat)) + slack;
    std::vector<Vec> members;
    for (const Vec& v : box_points_up_to_degree(S.ambient_dim(), bound))
        if (S.contains(v) && in_conductor(sat, v)) members.push_back(v);
    std::vector<Vec> minimal;
    for (const Vec& x : members) {
        bool dominated = false;
        for (const Vec& y : members) {
            if (y == x) continue;
            Vec diff = sub(x, y);
            if (!is_zero(diff) && S.contains_clipped(diff)) { dominated = true; break; }
        }
        if (!dominated) minimal.push_back(x);
    }
    return minimal;
}

std::vector<Vec> brute_force_module_generators(const SaturationResult& sat, const Int& bound) {
    std::vector<Vec> gens;
    for (const Vec& v : box_points_up_to_degree(sat.base.ambient_dim(), bound)) {
        if (!sat.saturation_contains(v)) continue;
        bool covered = false;
        for (const Vec& g : gens)
            if (sat.base.contains_clipped(sub(v, g))) { covered = true; break; }
        if (!covered) gens.push_back(v);
    }
    return gens;
}

std::vector<Vec> rank_method_facets(const std::vector<Vec>& gens_in) {
    std::vector<Vec> gens;
    for (const Vec& g : gens_in) gens.push_back(primitive(g));
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    const std::size_t n = gens.size();
    const std::size_t d = gens[0].size();
    std::vector<Vec> eqs = integer_column_kernel(gens);
    const std::size_t span_dim = d - eqs.size();

    std::set<Vec> found;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        std::vector<Vec> constraints = eqs;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t{1} << i)) constraints.push_back(gens[i]);
        std::vector<Vec> kernel;
        if (constraints.empty()) {
            if (d != 1) continue;
            kernel = {Vec{Int(1)}};
        } else {
            kernel = integer_column_kernel(constraints);
        }
        if (kernel.size() != 1) continue;
        Vec normal = primitive(kernel[0]);
        for (int sign = 0; sign < 2; ++sign) {
            if (sign) for (Int& c : normal) c = -c;
            bool nonneg = true, positive = false;
            std::vector<Vec> vanish;
            for (const Vec& g : gens) {
                Int s = dot(normal, g);
                if (s < 0) nonneg = false;
                if (s > 0) positive = true;
                if (s == 0) vanish.push_back(g);
            }
            if (nonneg && positive && matrix_rank(vanish) == span_dim - 1) found.insert(normal);
        }
    }
    return std::vector<Vec>(found.begin(), found.end());
}

namespace {

// Affine row: coeffs . lambda + constant (>= 0 for inequalities).
struct AffRow {
    std::vector<Rat> coeffs;
    Rat constant;
};

}  // namespace

bool zonotope_member_by_elimination(const std::vector<Vec>& rays, const Vec& point) {
    const std::size_t k = rays.size();
    const std::size_t d = point.size();
    std::vector<AffRow> ineqs, eqs;
    for (std::size_t i = 0; i < k; ++i) {
        AffRow low{std::vector<Rat>(k, Rat(0)), Rat(0)};
        low.coeffs[i] = 1;  // lambda_i >= 0
        ineqs.push_back(low);
        AffRow high{std::vector<Rat>(k, Rat(0)), Rat(1)};
        high.coeffs[i] = -1;  // 1 - lambda_i >= 0
        ineqs.push_back(high);
    }
    for (std::size_t r = 0; r < d; ++r) {
        AffRow eq{std::vector<Rat>(k, Rat(0)), Rat(-Int(point[r]))};
        for (std::size_t i = 0; i < k; ++i) eq.coeffs[i] = Rat(rays[i][r]);
        eqs.push_back(eq);  // sum_i lambda_i rays_i[r] - point[r] = 0
    }

    for (std::size_t v = 0; v < k; ++v) {
        std::size_t pick = eqs.size();
        for (std::size_t e = 0; e < eqs.size(); ++e)
            if (eqs[e].coeffs[v] != 0) { pick = e; break; }
        if (pick != eqs.size()) {
            AffRow e = eqs[pick];
            eqs.erase(eqs.begin() + static_cast<std::ptrdiff_t>(pick));
            auto substitute = [&](AffRow& r) {
                if (r.coeffs[v] == 0) return;
                Rat f = r.coeffs[v] / e.coeffs[v];
                for (std::size_t j = 0; j < k; ++j) r.coeffs[j] -= f * e.coeffs[j];
                r.constant -= f * e.constant;
            };
            for (AffRow& r : ineqs) substitute(r);
            for (AffRow& r : eqs) substitute(r);
        } else {
            std::vector<AffRow> zero, pos, neg;
            for (AffRow& r : ineqs) {
                if (r.coeffs[v] == 0)
                    zero.push_back(std::move(r));
                else if (r.coeffs[v] > 0)
                    pos.push_back(std::move(r));
                else
                    neg.push_back(std::move(r));
            }
            for (const AffRow& p : pos)
                for (const AffRow& q : neg) {
                    AffRow r{std::vector<Rat>(k, Rat(0)), Rat(0)};
                    Rat a = -q.coeffs[v], b = p.coeffs[v];
                    for (std::size_t j = 0; j < k; ++j)
                        r.coeffs[j] = a * p.coeffs[j] + b * q.coeffs[j];
                    r.constant = a * p.constant + b * q.constant;
                    zero.push_back(std::move(r));
                }
            ineqs = std::move(zero);
        }
    }
    for (const AffRow& r : ineqs)
        if (r.constant < 0) return false;
    for (const AffRow& r : eqs)
        if (r.constant != 0) return false;
    return true;
}

}  // namespace semicond::testing::oracle
