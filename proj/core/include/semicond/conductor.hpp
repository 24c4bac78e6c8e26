#pragma once

#include "semicond/normalization.hpp"

#include <utility>
#include <vector>

namespace semicond {

// The conductor ideal of a monomial algebra: the elements whose translates
// carry the whole saturation back into the semigroup. Represented by its
// minimal monomial generators, both over the base semigroup and over the
// saturation.
struct ConductorResult {
    AffineSemigroup semigroup;
    std::vector<Vec> r_generators;     // minimal generators over the base semigroup
    std::vector<Vec> rbar_generators;  // minimal generators over the saturation
    Vec witness_element;               // c0 with c0 + saturation inside the semigroup
    bool equals_maximal = false;       // conductor equals the maximal monomial ideal
    bool is_unit = false;              // conductor is the unit ideal (normal semigroup)
    bool certified = false;            // generator search completed its coverage proof
};

// Membership: v + g lies in the semigroup for every module generator g of
// the saturation (g = 0 included, so v itself must belong). Since the
// saturation is the union of g + S, this finite test is exact. Vectors
// outside N^d are reported as outside the ideal.
bool in_conductor(const SaturationResult& sat, const Vec& v);

// A single conductor element: zero for normal semigroups, otherwise the
// deg-lex least v with in_conductor(v). A terminating search bound comes
// from expressing each module generator as a difference of semigroup
// elements.
Vec conductor_element(const SaturationResult& sat);

// Minimal generators, in both forms. The search runs the certified
// face/level decomposition; if a guard trips it falls back to the bounded
// scan and flags the result certified=false. Normal input yields the unit
// ideal with generators {0} and equals_maximal=false.
ConductorResult conductor_generators(const SaturationResult& sat);

// Classical form for numerical semigroups: the conductor is
// { a in N : a >= F+1 }; returns F+1 and the minimal generators over N.
// Serves as an independent oracle for the d=1 affine encoding.
std::pair<Int, std::vector<Int>> numerical_conductor(const NumericalSemigroup& N);

}  // namespace semicond
