#include "semicond/cone.hpp"

#include "semicond/errors.hpp"
#include "semicond/lattice.hpp"

#include <algorithm>
#include <set>
#include <tuple>
#include <utility>

namespace semicond {

namespace {

constexpr std::size_t kFmRowCap = 200000;

// Eliminates the first n_mu variables from { rows . (mu, y) >= 0 } with the
// equalities eqs . (mu, y) = 0 available for substitution. Returns the
// surviving inequality rows restricted to the y block.
std::vector<Vec> fm_project(std::vector<Vec> ineqs, std::vector<Vec> eqs, std::size_t n_mu,
                            std::size_t d) {
    auto normalize = [](std::vector<Vec>& rows) {
        for (Vec& r : rows) r = primitive(r);
        std::sort(rows.begin(), rows.end());
        rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
        rows.erase(std::remove_if(rows.begin(), rows.end(), is_zero), rows.end());
    };

    for (std::size_t v = 0; v < n_mu; ++v) {
        // Prefer substitution through an equality that mentions the variable.
        std::size_t pick = eqs.size();
        for (std::size_t e = 0; e < eqs.size(); ++e)
            if (eqs[e][v] != 0) { pick = e; break; }
        if (pick != eqs.size()) {
            Vec e = eqs[pick];
            eqs.erase(eqs.begin() + static_cast<std::ptrdiff_t>(pick));
            auto substitute = [&](Vec& r) {
                if (r[v] == 0) return;
                // r' = e_v * r - r_v * e, sign chosen to keep the inequality
                // direction (multiply by |e_v|).
                Int ev = e[v], rv = r[v];
                Int a = abs_int(ev);
                Int b = (ev > 0) ? rv : -rv;
                for (std::size_t k = 0; k < r.size(); ++k) r[k] = a * r[k] - b * e[k];
            };
            for (Vec& r : ineqs) substitute(r);
            for (Vec& r : eqs) substitute(r);
            normalize(ineqs);
        } else {
            std::vector<Vec> zero, pos, neg;
            for (Vec& r : ineqs) {
                if (r[v] == 0)
                    zero.push_back(std::move(r));
                else if (r[v] > 0)
                    pos.push_back(std::move(r));
                else
                    neg.push_back(std::move(r));
            }
            for (const Vec& p : pos)
                for (const Vec& q : neg) {
                    Vec r(p.size());
                    Int a = -q[v], b = p[v];
                    for (std::size_t k = 0; k < r.size(); ++k) r[k] = a * p[k] + b * q[k];
                    zero.push_back(std::move(r));
                    if (zero.size() > kFmRowCap)
                        throw BoundExceeded("fm_rows", "Fourier-Motzkin row growth exceeded cap");
                }
            ineqs = std::move(zero);
            normalize(ineqs);
        }
    }

    std::vector<Vec> out;
    for (const Vec& r : ineqs) {
        Vec y(r.begin() + static_cast<std::ptrdiff_t>(n_mu), r.end());
        if (!is_zero(y)) out.push_back(primitive(y));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    (void)d;
    return out;
}

}  // namespace

RationalCone cone_from_generators(const std::vector<Vec>& gens_in) {
    if (gens_in.empty()) throw InvalidInput("cone_from_generators: empty generator list");
    const std::size_t d = gens_in[0].size();
    std::vector<Vec> gens;
    for (const Vec& g : gens_in) {
        if (g.size() != d) throw DimensionMismatch("cone_from_generators: ragged generators");
        if (is_zero(g)) throw InvalidInput("cone_from_generators: zero generator");
        gens.push_back(primitive(g));
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    const std::size_t n = gens.size();

    RationalCone cone;
    cone.ambient_dim = d;
    cone.span_equations = integer_column_kernel(gens);
    const std::size_t span_dim = d - cone.span_equations.size();
    cone.dim = span_dim;

    // Lifted system over (mu, y): mu_i >= 0 and y_j = sum_i mu_i * g_i[j].
    std::vector<Vec> ineqs(n, Vec(n + d, Int(0)));
    for (std::size_t i = 0; i < n; ++i) ineqs[i][i] = 1;
    std::vector<Vec> eqs(d, Vec(n + d, Int(0)));
    for (std::size_t j = 0; j < d; ++j) {
        eqs[j][n + j] = 1;
        for (std::size_t i = 0; i < n; ++i) eqs[j][i] = -gens[i][j];
    }
    std::vector<Vec> candidates = fm_project(std::move(ineqs), std::move(eqs), n, d);

    // Extreme rays: a generator spans one iff its active constraints cut a
    // one-dimensional face.
    std::set<Vec> ray_set;
    for (const Vec& g : gens) {
        std::vector<Vec> active = cone.span_equations;
        for (const Vec& c : candidates)
            if (dot(c, g) == 0) active.push_back(c);
        if (matrix_rank(active) == d - 1) ray_set.insert(primitive(g));
    }
    cone.rays.assign(ray_set.begin(), ray_set.end());
    sort_deg_lex(cone.rays);

    // Facets: candidates whose vanishing rays span a (span_dim - 1)-face,
    // re-normalized to the canonical representative inside the span.
    std::set<Vec> facet_set;
    for (const Vec& c : candidates) {
        std::vector<Vec> vanish;
        for (const Vec& r : cone.rays)
            if (dot(c, r) == 0) vanish.push_back(r);
        if (span_dim == 0) continue;
        if (matrix_rank(vanish) != span_dim - 1) continue;
        // Canonical normal: orthogonal to the vanishing rays and to the span
        // equations' kernel complement, i.e. a generator of the integer
        // kernel of {vanishing rays} ∪ {span equations}.
        std::vector<Vec> constraints = vanish;
        for (const Vec& e : cone.span_equations) constraints.push_back(e);
        std::vector<Vec> kernel;
        if (constraints.empty()) {
            kernel.assign(d, Vec(d, Int(0)));
            for (std::size_t k = 0; k < d; ++k) kernel[k][k] = 1;
        } else {
            kernel = integer_column_kernel(constraints);
        }
        if (kernel.size() != 1) continue;
        Vec normal = primitive(kernel[0]);
        auto orientation = [&](const Vec& f) {
            bool nonneg = true, positive = false;
            for (const Vec& g : gens) {
                Int s = dot(f, g);
                if (s < 0) nonneg = false;
                if (s > 0) positive = true;
            }
            return std::pair<bool, bool>(nonneg, positive);
        };
        auto [nonneg, positive] = orientation(normal);
        if (!nonneg) {
            for (Int& x : normal) x = -x;
            std::tie(nonneg, positive) = orientation(normal);
        }
        if (nonneg && positive) facet_set.insert(normal);
    }
    cone.facets.assign(facet_set.begin(), facet_set.end());

    // Pointedness: the facet normals together with the span equations must
    // pin down the origin.
    std::vector<Vec> all = cone.facets;
    for (const Vec& e : cone.span_equations) all.push_back(e);
    if (span_dim > 0 && matrix_rank(all) != d)
        throw NotPointed("cone_from_generators: generators span a line inside the cone");
    return cone;
}

bool cone_contains(const RationalCone& cone, const Vec& v) {
    if (v.size() != cone.ambient_dim)
        throw DimensionMismatch("cone_contains: vector dimension mismatch");
    for (const Vec& e : cone.span_equations)
        if (dot(e, v) != 0) return false;
    for (const Vec& f : cone.facets)
        if (dot(f, v) < 0) return false;
    return true;
}

std::vector<std::size_t> vanishing_facets(const RationalCone& cone, const Vec& v) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < cone.facets.size(); ++i)
        if (dot(cone.facets[i], v) == 0) idx.push_back(i);
    return idx;
}

}  // namespace semicond
