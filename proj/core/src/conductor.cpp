#include "semicond/conductor.hpp"

#include "semicond/errors.hpp"
#include "semicond/minelements.hpp"

#include <algorithm>
#include <functional>

namespace semicond {

bool in_conductor(const SaturationResult& sat, const Vec& v) {
    for (const Vec& g : sat.module_generators)
        if (!sat.base.contains_clipped(add(v, g))) return false;
    return true;
}

Vec conductor_element(const SaturationResult& sat) {
    const AffineSemigroup& S = sat.base;
    const std::size_t d = S.ambient_dim();
    if (sat.module_generators.size() == 1) return zero_vec(d);

    // Each module generator is a difference of semigroup elements; the
    // negative parts sum to an element of the conductor, bounding the scan.
    HermiteWithTransform ht = hermite_with_transform(S.generators());
    Vec sum_bound = zero_vec(d);
    for (const Vec& g : sat.module_generators) {
        if (is_zero(g)) continue;
        auto coeffs = lattice_solve(ht.lattice, g);
        if (!coeffs) throw InvalidInput("conductor_element: module generator outside group");
        std::vector<Int> gen_coeffs(S.generators().size(), Int(0));
        for (std::size_t i = 0; i < coeffs->size(); ++i)
            for (std::size_t j = 0; j < gen_coeffs.size(); ++j)
                gen_coeffs[j] += (*coeffs)[i] * ht.basis_coeffs[i][j];
        for (std::size_t j = 0; j < gen_coeffs.size(); ++j)
            if (gen_coeffs[j] < 0) sum_bound = add(sum_bound, scale(-gen_coeffs[j], S.generators()[j]));
    }

    for (const Vec& v : box_points_up_to_degree(d, degree(sum_bound)))
        if (S.contains(v) && in_conductor(sat, v)) return v;
    throw InvalidInput("conductor_element: no element found below the certified bound");
}

namespace {

// Pairwise minimalization over a membership order; candidates must contain
// every minimal element of the underlying set.
std::vector<Vec> minimalize(std::vector<Vec> candidates,
                            const std::function<bool(const Vec&)>& order_member) {
    std::sort(candidates.begin(), candidates.end(), DegLexLess{});
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    std::vector<Vec> out;
    for (const Vec& x : candidates) {
        bool dominated = false;
        for (const Vec& y : candidates) {
            if (y == x) continue;
            Vec diff = sub(x, y);
            if (!is_zero(diff) && order_member(diff)) { dominated = true; break; }
        }
        if (!dominated) out.push_back(x);
    }
    return out;
}

// Bounded fallback: scan saturation points by degree and minimalize; used
// only when the certified engine declines, and flagged uncertified.
std::vector<Vec> bounded_rbar_generators(const SaturationResult& sat) {
    std::vector<Vec> hits;
    for (const Vec& v : box_points_up_to_degree(sat.base.ambient_dim(),
                                                Int(sat.base.caps().scan_degree_cap)))
        if (sat.saturation_contains(v) && in_conductor(sat, v)) hits.push_back(v);
    return minimalize(std::move(hits),
                      [&](const Vec& diff) { return sat.saturation_contains(diff); });
}

}  // namespace

ConductorResult conductor_generators(const SaturationResult& sat) {
    const AffineSemigroup& S = sat.base;
    const std::size_t d = S.ambient_dim();
    ConductorResult result{S, {}, {}, zero_vec(d), false, false, false};

    if (sat.module_generators.size() == 1) {
        // Normal semigroup: the conductor is the unit ideal.
        result.r_generators = {zero_vec(d)};
        result.rbar_generators = {zero_vec(d)};
        result.is_unit = true;
        result.certified = true;
        return result;
    }

    result.witness_element = conductor_element(sat);

    // Generators over the saturation, via the certified search: the
    // conductor is { x in saturation : x + g in S for every module
    // generator g }, a translate system over S.
    TranslateSystem system;
    system.phi_gens = S.generators();
    system.universe = sat.lattice;
    for (const Vec& g : sat.module_generators) {
        TranslateRow row;
        row.deltas.push_back(scale(-1, g));
        system.rows.push_back(std::move(row));
    }
    EngineBudget budget{S.caps().certified_search_node_cap};
    try {
        result.rbar_generators = minimal_set_elements(system, budget);
        result.certified = true;
    } catch (const BoundExceeded&) {
        result.rbar_generators = bounded_rbar_generators(sat);
        result.certified = false;
    }

    // Generators over the base semigroup: every conductor element is a
    // saturation-generator plus a module generator plus a semigroup element,
    // so u + g ranges over a complete candidate set.
    std::vector<Vec> candidates;
    for (const Vec& u : result.rbar_generators)
        for (const Vec& g : sat.module_generators) {
            Vec x = add(u, g);
            if (in_conductor(sat, x)) candidates.push_back(x);
        }
    result.r_generators =
        minimalize(std::move(candidates), [&](const Vec& diff) { return S.contains_clipped(diff); });

    result.equals_maximal = result.r_generators == S.minimal_generators();
    return result;
}

std::pair<Int, std::vector<Int>> numerical_conductor(const NumericalSemigroup& N) {
    Int f = N.frobenius();
    if (f < 0) return {Int(0), {Int(0)}};
    Int c = f + 1;
    std::vector<Int> gens;
    for (Int a = c; a < 2 * c; ++a) {
        if (!N.contains(a)) continue;  // a >= c is always inside; kept for clarity
        bool dominated = false;
        for (const Int& b : gens)
            if (N.contains(a - b)) { dominated = true; break; }
        if (!dominated) gens.push_back(a);
    }
    return {c, gens};
}

}  // namespace semicond
