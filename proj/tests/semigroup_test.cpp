#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "semicond/errors.hpp"
#include "semicond/normalization.hpp"
#include "semicond/semigroup.hpp"
#include "support/builders.hpp"

using namespace semicond;
using namespace semicond::testing;

TEST_CASE("membership in the running two-variable example") {
    auto S = s2_s3_st_t();
    CHECK_FALSE(S.contains(vec({1, 0})));
    CHECK(S.contains(vec({1, 1})));
    CHECK(S.contains(vec({0, 0})));
    CHECK_THROWS_AS(S.contains(vec({-1, 0})), InvalidInput);
}

TEST_CASE("membership closure under addition") {
    auto S = quadrics_minus_xy_2vars();
    for (const Vec& u : S.generators())
        for (const Vec& v : S.generators()) CHECK(S.contains(add(u, v)));
}

TEST_CASE("minimal generators of the five-generator example stay minimal") {
    auto S = quadrics_minus_xy_2vars();
    CHECK(S.minimal_generators().size() == 5);
}

TEST_CASE("minimal generators drop a redundant one") {
    auto S = semigroup({{1, 0}, {0, 1}, {1, 1}});
    CHECK(S.minimal_generators() == vecs({{0, 1}, {1, 0}}));
}

TEST_CASE("dimension equals group rank") {
    CHECK(s2_s3_st_t().dimension() == 2);
    CHECK(semigroup({{3}, {4}, {5}}).dimension() == 1);
}

TEST_CASE("numerical semigroup invariants for <3,4,5>") {
    NumericalSemigroup N({3, 4, 5});
    CHECK(N.frobenius() == 2);
    CHECK(N.gaps() == std::vector<Int>{1, 2});
    CHECK(N.apery_set(3) == std::vector<Int>{0, 4, 5});
    CHECK_FALSE(N.is_symmetric());
}

TEST_CASE("numerical semigroup invariants for <2,3>") {
    NumericalSemigroup N({2, 3});
    CHECK(N.frobenius() == 1);
    CHECK(N.apery_set(2) == std::vector<Int>{0, 3});
    CHECK(N.is_symmetric());
    // Symmetric semigroups have gaps filling exactly half of [0, F].
    CHECK(2 * Int(N.gaps().size()) == N.frobenius() + 1);
}

TEST_CASE("the full semigroup of naturals") {
    NumericalSemigroup N({1});
    CHECK(N.frobenius() == -1);
    CHECK(N.gaps().empty());
    CHECK(N.apery_set(1) == std::vector<Int>{0});
    CHECK(N.is_symmetric());
}

TEST_CASE("gcd validation") {
    CHECK_THROWS_AS(NumericalSemigroup({4, 6}), InvalidInput);
    CHECK_THROWS_AS(NumericalSemigroup({0, 3}), InvalidInput);
}

TEST_CASE("apery set preconditions") {
    NumericalSemigroup N({3, 4, 5});
    CHECK_THROWS_AS(N.apery_set(2), InvalidInput);
    CHECK_THROWS_AS(N.apery_set(0), InvalidInput);
}

TEST_CASE("numerical round trip through the affine encoding") {
    NumericalSemigroup N({3, 4, 5});
    auto S = N.to_affine();
    CHECK(S.ambient_dim() == 1);
    auto back = numerical_from_affine(S);
    CHECK(back.generators() == std::vector<Int>{3, 4, 5});
}

TEST_CASE("gcd normalization when reading affine data") {
    auto S = semigroup({{6}, {8}, {10}});
    auto N = numerical_from_affine(S);
    CHECK(N.generators() == std::vector<Int>{3, 4, 5});
}
