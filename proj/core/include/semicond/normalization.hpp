#pragma once

#include "semicond/cone.hpp"
#include "semicond/semigroup.hpp"

#include <vector>

namespace semicond {

// The saturation of an affine semigroup: group(S) intersected with cone(S),
// which is the exponent semigroup of the integral closure of the monomial
// algebra. hilbert_basis generates the saturation as a semigroup;
// module_generators is the minimal set G (containing 0) with
// saturation = union over g in G of (g + S).
struct SaturationResult {
    AffineSemigroup base;
    IntegerLattice lattice;
    RationalCone cone;
    std::vector<Vec> lattice_rays;       // extreme rays, shortest lattice representatives
    std::vector<Vec> hilbert_basis;      // deg-lex sorted
    std::vector<Vec> module_generators;  // deg-lex sorted, first entry 0

    // v in the saturation (lattice and cone membership).
    bool saturation_contains(const Vec& v) const;
};

// Computes lattice, cone, rays, Hilbert basis, and module generators.
// Throws NotPointed / BoundExceeded as the guards dictate.
SaturationResult saturate(const AffineSemigroup& S);

// Convenience accessor matching the operation split: the minimal module
// generators of the saturation over S.
std::vector<Vec> module_generators(const AffineSemigroup& S);

// True iff the semigroup equals its saturation.
bool is_normal(const AffineSemigroup& S);

// All points of saturation \ S with degree <= bound, deg-lex ascending.
// With bound above the largest gap degree this is the full gap set.
std::vector<Vec> gaps_bounded(const AffineSemigroup& S, const Int& bound);
std::vector<Vec> gaps_bounded(const SaturationResult& sat, const Int& bound);

}  // namespace semicond
