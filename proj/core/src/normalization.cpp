#include "semicond/normalization.hpp"

#include "semicond/errors.hpp"
#include "semicond/zonotope.hpp"

#include <algorithm>
#include <set>

namespace semicond {

bool SaturationResult::saturation_contains(const Vec& v) const {
    return cone_contains(cone, v) && lattice_contains(lattice, v);
}

namespace {

// Fixed-point closure for the module generators, explored deg-lex ascending.
// Every popped point not already covered by union(m + S) is a fresh
// generator; coverage can only come from deg-lex smaller generators, so the
// result is minimal as produced.
std::vector<Vec> closure_module_generators(const SaturationResult& sat) {
    const AffineSemigroup& S = sat.base;
    std::vector<Vec> module_gens;
    module_gens.push_back(zero_vec(S.ambient_dim()));

    auto covered = [&](const Vec& x) {
        for (const Vec& m : module_gens)
            if (S.contains_clipped(sub(x, m))) return true;
        return false;
    };

    std::set<Vec, DegLexLess> frontier;
    for (const Vec& h : sat.hilbert_basis) frontier.insert(h);

    std::int64_t steps = 0;
    while (!frontier.empty()) {
        if (++steps > S.caps().closure_iteration_cap)
            throw BoundExceeded("closure_iterations", "module-generator closure exceeded cap");
        Vec x = *frontier.begin();
        frontier.erase(frontier.begin());
        if (covered(x)) continue;
        module_gens.push_back(x);
        for (const Vec& h : sat.hilbert_basis) frontier.insert(add(x, h));
    }
    sort_deg_lex(module_gens);
    return module_gens;
}

}  // namespace

SaturationResult saturate(const AffineSemigroup& S) {
    SaturationResult sat{S,
                         S.group_lattice(),
                         cone_from_generators(S.generators()),
                         {},
                         {},
                         {}};

    for (const Vec& ray : sat.cone.rays)
        sat.lattice_rays.push_back(lattice_primitive_on_ray(sat.lattice, ray));
    sort_deg_lex(sat.lattice_rays);

    // Hilbert basis: every irreducible point of the saturation lies in the
    // zonotope spanned by the shortest lattice vectors on the extreme rays.
    std::vector<Vec> candidates;
    for (const Vec& p : zonotope_lattice_points(sat.lattice_rays, S.caps()))
        if (lattice_contains(sat.lattice, p) && !is_zero(p)) candidates.push_back(p);

    for (const Vec& x : candidates) {
        bool reducible = false;
        for (const Vec& y : candidates) {
            if (y == x) continue;
            Vec diff = sub(x, y);
            if (is_zero(diff)) continue;
            if (sat.saturation_contains(diff)) { reducible = true; break; }
        }
        if (!reducible) sat.hilbert_basis.push_back(x);
    }
    sort_deg_lex(sat.hilbert_basis);

    sat.module_generators = closure_module_generators(sat);
    return sat;
}

std::vector<Vec> module_generators(const AffineSemigroup& S) {
    return saturate(S).module_generators;
}

bool is_normal(const AffineSemigroup& S) {
    std::vector<Vec> gens = module_generators(S);
    return gens.size() == 1 && is_zero(gens[0]);
}

std::vector<Vec> gaps_bounded(const SaturationResult& sat, const Int& bound) {
    std::vector<Vec> out;
    for (const Vec& v : box_points_up_to_degree(sat.base.ambient_dim(), bound))
        if (sat.saturation_contains(v) && !sat.base.contains(v)) out.push_back(v);
    return out;  // box enumeration is already deg-lex sorted
}

std::vector<Vec> gaps_bounded(const AffineSemigroup& S, const Int& bound) {
    return gaps_bounded(saturate(S), bound);
}

}  // namespace semicond
