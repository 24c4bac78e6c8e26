#pragma once

#include "semicond/errors.hpp"
#include "semicond/ints.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace semicond {

// Exponent vector of a monomial: a point of N^d, or Z^d in lattice contexts.
using Vec = std::vector<Int>;

inline std::size_t dim_of(const Vec& v) { return v.size(); }

inline void require_same_dim(const Vec& a, const Vec& b) {
    if (a.size() != b.size())
        throw DimensionMismatch("vectors of dimension " + std::to_string(a.size()) +
                                " and " + std::to_string(b.size()));
}

inline Vec add(const Vec& a, const Vec& b) {
    require_same_dim(a, b);
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec sub(const Vec& a, const Vec& b) {
    require_same_dim(a, b);
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec scale(const Int& k, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = k * a[i];
    return r;
}

inline Int dot(const Vec& a, const Vec& b) {
    require_same_dim(a, b);
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Total degree |v| = sum of coordinates.
inline Int degree(const Vec& v) {
    Int s = 0;
    for (const Int& c : v) s += c;
    return s;
}

inline bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& c) { return c == 0; });
}

inline bool is_nonnegative(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& c) { return c >= 0; });
}

inline Vec zero_vec(std::size_t d) { return Vec(d, Int(0)); }

// Divide out the gcd of the coordinates; the zero vector is left unchanged.
inline Vec primitive(Vec v) {
    Int g = 0;
    for (const Int& c : v) g = gcd_int(g, c);
    if (g > 1)
        for (Int& c : v) c /= g;
    return v;
}

// Lexicographic order; the canonical key order for sets and maps.
inline bool lex_less(const Vec& a, const Vec& b) { return a < b; }

// Degree first, then lexicographic: the canonical enumeration order.
inline bool deg_lex_less(const Vec& a, const Vec& b) {
    Int da = degree(a), db = degree(b);
    if (da != db) return da < db;
    return a < b;
}

struct DegLexLess {
    bool operator()(const Vec& a, const Vec& b) const { return deg_lex_less(a, b); }
};

inline void sort_deg_lex(std::vector<Vec>& vs) {
    std::sort(vs.begin(), vs.end(), DegLexLess{});
}

inline std::string to_string(const Vec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].str();
    }
    s += ")";
    return s;
}

}  // namespace semicond
