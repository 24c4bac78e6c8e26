#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "semicond/cone.hpp"
#include "semicond/errors.hpp"
#include "semicond/lattice.hpp"
#include "semicond/simplex.hpp"
#include "semicond/zonotope.hpp"
#include "support/builders.hpp"

using namespace semicond;
using namespace semicond::testing;

TEST_CASE("hermite normal form of the full plane") {
    auto L = hermite_normal_form(vecs({{2, 0}, {3, 0}, {1, 1}, {0, 1}}));
    CHECK(L.rank() == 2);
    CHECK(L.basis == vecs({{1, 0}, {0, 1}}));
}

TEST_CASE("hermite normal form keeps a single generator") {
    auto L = hermite_normal_form(vecs({{1, 0}}));
    CHECK(L.rank() == 1);
    CHECK(L.basis == vecs({{1, 0}}));
}

TEST_CASE("hermite normal form of a diagonal sublattice") {
    auto L = hermite_normal_form(vecs({{2, 0}, {0, 2}}));
    CHECK(L.rank() == 2);
    CHECK(L.basis == vecs({{2, 0}, {0, 2}}));
}

TEST_CASE("hermite normal form is independent of row order") {
    auto a = hermite_normal_form(vecs({{2, 0}, {3, 0}, {1, 1}, {0, 1}}));
    auto b = hermite_normal_form(vecs({{0, 1}, {1, 1}, {3, 0}, {2, 0}}));
    CHECK(a == b);
}

TEST_CASE("lattice membership") {
    auto z2 = hermite_normal_form(vecs({{1, 0}, {0, 1}}));
    CHECK(lattice_contains(z2, vec({1, 0})));

    auto even = hermite_normal_form(vecs({{2, 0}, {0, 2}}));
    CHECK_FALSE(lattice_contains(even, vec({1, 1})));

    auto diag = hermite_normal_form(vecs({{1, 1}}));
    CHECK(lattice_contains(diag, vec({2, 2})));
    CHECK_FALSE(lattice_contains(diag, vec({2, 1})));
}

TEST_CASE("hermite rejects bad input") {
    CHECK_THROWS_AS(hermite_normal_form({}), InvalidInput);
    CHECK_THROWS_AS(hermite_normal_form(vecs({{1, 0}, {1}})), DimensionMismatch);
}

TEST_CASE("kernel and meet-kernel") {
    auto L = hermite_normal_form(vecs({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    auto M = lattice_meet_kernel(L, vecs({{1, 1, 1}}));
    CHECK(M.rank() == 2);
    for (const Vec& b : M.basis) CHECK(dot(b, vec({1, 1, 1})) == 0);
}

TEST_CASE("primitive lattice vector on a ray") {
    auto even_sum = hermite_normal_form(vecs({{2, 0, 0}, {1, 1, 0}, {1, 0, 1}}));
    CHECK(lattice_primitive_on_ray(even_sum, vec({1, 0, 0})) == vec({2, 0, 0}));
    CHECK(lattice_primitive_on_ray(even_sum, vec({3, 3, 0})) == vec({1, 1, 0}));
}

TEST_CASE("lattice quotient representatives") {
    auto U = hermite_normal_form(vecs({{1, 0}, {0, 1}}));
    auto G = hermite_normal_form(vecs({{2, 0}, {0, 2}}));
    auto Q = lattice_quotient(U, G);
    CHECK(Q.index == 4);
    CHECK(Q.representatives.size() == 4);
}

TEST_CASE("cone of the first orthant") {
    auto C = cone_from_generators(vecs({{1, 0}, {0, 1}}));
    CHECK(C.facets == vecs({{0, 1}, {1, 0}}));
    CHECK(C.span_equations.empty());
    CHECK(C.rays == vecs({{0, 1}, {1, 0}}));
    CHECK(cone_contains(C, vec({5, 3})));
    CHECK_FALSE(cone_contains(C, vec({-1, 2})));
}

TEST_CASE("cone facets collapse to the orthant") {
    auto C = cone_from_generators(vecs({{2, 0}, {3, 0}, {1, 1}, {0, 1}}));
    CHECK(C.facets == vecs({{0, 1}, {1, 0}}));
    CHECK(C.rays == vecs({{0, 1}, {1, 0}}));
}

TEST_CASE("degree-two generators minus one still span the orthant cone") {
    auto C = cone_from_generators(
        vecs({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 0, 1}, {0, 1, 1}}));
    CHECK(C.facets == vecs({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}));
}

TEST_CASE("skew cone membership") {
    auto C = cone_from_generators(vecs({{1, 0}, {1, 2}}));
    CHECK(cone_contains(C, vec({1, 1})));
    CHECK_FALSE(cone_contains(C, vec({0, 1})));
    CHECK_FALSE(cone_contains(C, vec({1, 3})));
}

TEST_CASE("lower-dimensional cone gets span equations") {
    auto C = cone_from_generators(vecs({{1, 1}}));
    CHECK(C.dim == 1);
    REQUIRE(C.span_equations.size() == 1);
    CHECK(dot(C.span_equations[0], vec({1, 1})) == 0);
    CHECK(cone_contains(C, vec({2, 2})));
    CHECK_FALSE(cone_contains(C, vec({2, 1})));
    CHECK_FALSE(cone_contains(C, vec({-1, -1})));
}

TEST_CASE("non-pointed input is rejected") {
    CHECK_THROWS_AS(cone_from_generators(vecs({{1, 0}, {-1, 0}})), NotPointed);
    CHECK_THROWS_AS(cone_from_generators(vecs({{1, 1}, {-1, -1}})), NotPointed);
    CHECK_THROWS_AS(cone_from_generators(vecs({{0, 0}})), InvalidInput);
}

TEST_CASE("every generator lies in its own cone") {
    auto gens = vecs({{2, 1}, {1, 3}, {4, 1}, {1, 1}});
    auto C = cone_from_generators(gens);
    for (const Vec& g : gens) CHECK(cone_contains(C, g));
}

TEST_CASE("facets vanish on enough independent rays") {
    auto C = cone_from_generators(vecs({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 0, 1}, {0, 1, 1}}));
    for (const Vec& f : C.facets) {
        std::vector<Vec> vanish;
        for (const Vec& r : C.rays)
            if (dot(f, r) == 0) vanish.push_back(r);
        CHECK(matrix_rank(vanish) == C.dim - 1);
    }
}

TEST_CASE("zonotope of the unit square") {
    auto pts = zonotope_lattice_points(vecs({{1, 0}, {0, 1}}));
    CHECK(pts == vecs({{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
}

TEST_CASE("zonotope with an interior point") {
    auto pts = zonotope_lattice_points(vecs({{2, 1}, {1, 2}}));
    bool found = false;
    for (const Vec& p : pts) found = found || p == vec({1, 1});
    CHECK(found);
}

TEST_CASE("zonotope of a segment") {
    CHECK(zonotope_lattice_points(vecs({{1, 0}})) == vecs({{0, 0}, {1, 0}}));
}

TEST_CASE("zonotope guard trips on oversized boxes") {
    Caps caps;
    caps.zonotope_box_cap = 10;
    CHECK_THROWS_AS(zonotope_lattice_points(vecs({{100, 0}, {0, 100}}), caps), BoundExceeded);
}

TEST_CASE("simplex feasibility matches hand checks") {
    CHECK(unit_box_combination_exists(vecs({{2, 1}, {1, 2}}), vec({1, 1})));
    CHECK_FALSE(unit_box_combination_exists(vecs({{2, 1}, {1, 2}}), vec({2, 0})));
    CHECK(nonneg_combination_exists(vecs({{1, 0}, {1, 2}}), vec({1, 1})));
    CHECK_FALSE(nonneg_combination_exists(vecs({{1, 0}, {1, 2}}), vec({0, 1})));
}
