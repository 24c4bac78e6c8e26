#pragma once

#include "semicond/vec.hpp"

#include <optional>
#include <vector>

namespace semicond {

// A full sublattice of Z^d in row-style Hermite normal form: pivot columns
// strictly increase, pivots are positive, and entries above each pivot are
// reduced into [0, pivot). Equal lattices have identical representations.
struct IntegerLattice {
    std::size_t ambient_dim = 0;
    std::vector<Vec> basis;  // HNF rows, zero rows removed

    std::size_t rank() const { return basis.size(); }
    bool operator==(const IntegerLattice& o) const = default;
};

// Lattice generated by the rows, in canonical form. Throws DimensionMismatch
// on ragged input and InvalidInput on an empty row list.
IntegerLattice hermite_normal_form(const std::vector<Vec>& rows);

// Canonical form plus the coefficients expressing each basis row as an
// integer combination of the input rows (basis_coeffs[i][j] multiplies
// rows[j]).
struct HermiteWithTransform {
    IntegerLattice lattice;
    std::vector<Vec> basis_coeffs;
};
HermiteWithTransform hermite_with_transform(const std::vector<Vec>& rows);

// True iff v is an integer combination of the basis rows.
bool lattice_contains(const IntegerLattice& L, const Vec& v);

// Coefficients c with sum_i c_i * basis_i = v, when they exist.
std::optional<std::vector<Int>> lattice_solve(const IntegerLattice& L, const Vec& v);

// Basis of {c in Z^n : sum_i c_i * rows_i = 0}, via a unimodular transform
// that triangularizes the matrix. n = rows.size().
std::vector<Vec> integer_row_kernel(const std::vector<Vec>& rows);

// Rank of the rows as rational vectors (exact elimination).
std::size_t matrix_rank(const std::vector<Vec>& rows);

// Rows of the transposed matrix.
std::vector<Vec> transpose(const std::vector<Vec>& rows);

// Basis of {f in Z^d : dot(row, f) = 0 for every row}; kernel on the right.
std::vector<Vec> integer_column_kernel(const std::vector<Vec>& rows);

// The sublattice {v in L : dot(v, f) = 0 for every f in forms}.
IntegerLattice lattice_meet_kernel(const IntegerLattice& L, const std::vector<Vec>& forms);

// Shortest nonzero lattice vector on the ray through `direction`
// (a positive multiple of `direction` that lies in L; the multiplier divides
// the lattice index, found by ascending search). Throws InvalidInput if the
// ray misses L, which cannot happen when direction lies in the span of L.
Vec lattice_primitive_on_ray(const IntegerLattice& L, const Vec& direction);

// Index [U : G] together with coset representatives of G in U, for a
// finite-index sublattice G of U. Representatives are canonical (Smith form
// digits mapped back through the basis). Throws InvalidInput when G is not a
// finite-index sublattice of U.
struct LatticeQuotient {
    Int index;
    std::vector<Vec> representatives;  // index-many, first is the zero class
};
LatticeQuotient lattice_quotient(const IntegerLattice& U, const IntegerLattice& G,
                                 std::int64_t enumeration_cap = 4096);

}  // namespace semicond
