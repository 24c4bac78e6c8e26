#pragma once

#include "semicond/conductor.hpp"
#include "semicond/normalization.hpp"

#include <vector>

// Independent reference implementations used only by tests. Each one takes a
// deliberately different route from the library code it checks: bounded
// enumeration instead of certified search, combinatorial rank search instead
// of projection, and per-point elimination instead of simplex.
namespace semicond::testing::oracle {

// Conductor generators by bounded brute force: test membership on every
// semigroup point up to degree 2*deg(c0) + slack and minimalize.
std::vector<Vec> brute_force_conductor_generators(const SaturationResult& sat, int slack = 6);

// Module generators by greedy covering of the saturation points up to the
// degree bound.
std::vector<Vec> brute_force_module_generators(const SaturationResult& sat, const Int& bound);

// Facet normals of cone(gens) by exhaustive subset search over generator
// incidences (no projection involved).
std::vector<Vec> rank_method_facets(const std::vector<Vec>& gens);

// Zonotope membership by per-point variable elimination over the rationals.
bool zonotope_member_by_elimination(const std::vector<Vec>& rays, const Vec& point);

}  // namespace semicond::testing::oracle
