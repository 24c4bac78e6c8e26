#pragma once

#include "semicond/lattice.hpp"
#include "semicond/vec.hpp"

#include <cstdint>
#include <vector>

namespace semicond {

// One conjunct of a translate system: x satisfies the row iff x - delta lies
// in the working semigroup for at least one delta in the row.
struct TranslateRow {
    std::vector<Vec> deltas;
};

// The sets handled by the minimal-element engine:
//
//   SET = { x in universe ∩ cone(phi) : every row holds at x },
//
// where phi is the semigroup generated by phi_gens (not necessarily
// saturated) and universe is a lattice containing group(phi_gens) with the
// same span. SET is phi-stable, so it is a finitely generated module; the
// engine returns its complete set of minimal elements in the order
// "y <= x iff x - y in universe ∩ cone(phi)".
//
// Method: an anchor element deep in the cone bounds the region via the
// facet-slab argument, each slab level is decomposed into finitely many
// face-module orbits, and the problem recurses onto the face semigroup with
// exactly translated rows, down to the one-dimensional base case.
struct TranslateSystem {
    std::vector<Vec> phi_gens;  // nonzero vectors in N^d
    IntegerLattice universe;
    std::vector<TranslateRow> rows;
};

struct EngineBudget {
    std::int64_t remaining = 500'000;
};

// Complete minimal-element set, deg-lex sorted; empty when SET is empty.
// Throws BoundExceeded when the budget runs out.
std::vector<Vec> minimal_set_elements(const TranslateSystem& system, EngineBudget& budget);

}  // namespace semicond
