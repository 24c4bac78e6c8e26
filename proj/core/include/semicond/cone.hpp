#pragma once

#include "semicond/vec.hpp"

#include <vector>

namespace semicond {

// A pointed rational polyhedral cone, possibly of lower dimension than its
// ambient space. The H-form is { x : e.x = 0 for equations, f.x >= 0 for
// facets }; facet normals are primitive, pairwise non-proportional,
// lex-sorted, and chosen inside the cone's linear span so the representation
// is canonical. Extreme rays are primitive integer vectors, deg-lex sorted.
struct RationalCone {
    std::size_t ambient_dim = 0;
    std::size_t dim = 0;               // dimension of the linear span
    std::vector<Vec> facets;           // inequality normals
    std::vector<Vec> span_equations;   // equations cutting the span
    std::vector<Vec> rays;             // extreme ray representatives

    bool operator==(const RationalCone& o) const = default;
};

// Facets via Fourier-Motzkin projection of the generator lift, exact
// rational arithmetic, redundancy removed through the extreme-ray incidence
// test. Throws NotPointed if the generators span a line inside the cone and
// InvalidInput on empty input or a zero generator.
RationalCone cone_from_generators(const std::vector<Vec>& gens);

// True iff v satisfies every span equation and every facet inequality.
bool cone_contains(const RationalCone& cone, const Vec& v);

// Zero-based indices of the facets that vanish on v (v need not lie in the
// cone). Used for face identification.
std::vector<std::size_t> vanishing_facets(const RationalCone& cone, const Vec& v);

}  // namespace semicond
