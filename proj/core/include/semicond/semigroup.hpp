#pragma once

#include "semicond/config.hpp"
#include "semicond/lattice.hpp"
#include "semicond/vec.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

namespace semicond {

// Finitely generated subsemigroup of N^d, zero excluded from the generators.
// Values are immutable after construction; the membership cache is shared by
// copies and guarded by a mutex, so instances are safe to use concurrently.
class AffineSemigroup {
public:
    AffineSemigroup(std::size_t dim, std::vector<Vec> generators, Caps caps = {});

    std::size_t ambient_dim() const { return dim_; }
    const std::vector<Vec>& generators() const { return generators_; }
    const Caps& caps() const { return caps_; }

    // True iff v is a sum of generators (the empty sum gives 0). Decided by a
    // memoized dynamic program over the box [0, v]. Throws InvalidInput on a
    // negative coordinate.
    bool contains(const Vec& v) const;

    // contains(), with vectors outside N^d reported as absent instead of an
    // error; the form used on differences.
    bool contains_clipped(const Vec& v) const;

    // The unique minimal generating set, deg-lex sorted.
    std::vector<Vec> minimal_generators() const;

    // Rank of the group generated by the semigroup (the Krull dimension of
    // the monomial algebra).
    std::size_t dimension() const;

    const IntegerLattice& group_lattice() const { return lattice_; }

    // A deterministic expression of v as a multiset of generators (deg-lex
    // smallest summand chosen first); nullopt when v is not in the semigroup.
    std::optional<std::vector<Vec>> factorization(const Vec& v) const;

    bool operator==(const AffineSemigroup& o) const {
        return dim_ == o.dim_ && generators_ == o.generators_;
    }

private:
    std::size_t dim_;
    std::vector<Vec> generators_;  // canonical: deg-lex sorted, unique
    IntegerLattice lattice_;
    Caps caps_;

    struct Memo {
        std::mutex mutex;
        std::map<Vec, bool> table;
    };
    std::shared_ptr<Memo> memo_;

    bool contains_inner(const Vec& v) const;
};

// Numerical semigroup: positive integer generators with gcd 1, so the set of
// gaps is finite. Kept separate from the d=1 affine encoding to expose the
// classical sieve-based algorithms.
class NumericalSemigroup {
public:
    explicit NumericalSemigroup(std::vector<Int> generators);

    const std::vector<Int>& generators() const { return generators_; }
    bool contains(const Int& a) const;

    // Largest integer not in the semigroup; -1 when the semigroup is all
    // of N.
    Int frobenius() const;

    // All gaps, ascending.
    std::vector<Int> gaps() const;

    // Least element per residue class mod n, listed for r = 0..n-1.
    // Requires n > 0 and n in the semigroup.
    std::vector<Int> apery_set(const Int& n) const;

    // Kunz symmetry: every 0 <= a <= F has exactly one of a, F-a inside.
    bool is_symmetric() const;

    AffineSemigroup to_affine(Caps caps = {}) const;

private:
    std::vector<Int> generators_;  // sorted, unique
    // Reachability sieve over [0, limit], extended on demand.
    mutable std::shared_ptr<std::vector<char>> sieve_;
    mutable std::shared_ptr<std::mutex> mutex_;

    const std::vector<char>& sieve_up_to(std::int64_t limit) const;
};

// Reads a d=1 affine semigroup back into numerical form, dividing out the
// common gcd of the generators (the lattice normalization).
NumericalSemigroup numerical_from_affine(const AffineSemigroup& S);

// Enumerates every v in N^d with degree(v) <= bound, deg-lex ascending.
std::vector<Vec> box_points_up_to_degree(std::size_t dim, const Int& bound);

}  // namespace semicond
