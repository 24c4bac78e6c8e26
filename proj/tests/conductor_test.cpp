#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "semicond/conductor.hpp"
#include "support/builders.hpp"
#include "support/oracles.hpp"

using namespace semicond;
using namespace semicond::testing;

TEST_CASE("membership tests from the running two-variable example") {
    auto sat = saturate(s2_s3_st_t());
    CHECK(in_conductor(sat, vec({0, 1})));
    CHECK_FALSE(in_conductor(sat, vec({1, 0})));
}

TEST_CASE("a squared axis generator misses the conductor") {
    auto sat = saturate(quadrics_minus_xy_2vars());
    CHECK_FALSE(in_conductor(sat, vec({2, 0})));
    CHECK(in_conductor(sat, vec({1, 1})));
}

TEST_CASE("conductor element of <3,4,5>") {
    auto sat = saturate(semigroup({{3}, {4}, {5}}));
    CHECK(conductor_element(sat) == vec({3}));
}

TEST_CASE("conductor element of the running two-variable example") {
    auto sat = saturate(s2_s3_st_t());
    CHECK(conductor_element(sat) == vec({0, 1}));
}

TEST_CASE("conductor element of a normal semigroup is zero") {
    auto sat = saturate(semigroup({{1, 0}, {0, 1}}));
    CHECK(conductor_element(sat) == vec({0, 0}));
}

TEST_CASE("conductor generators equal the maximal ideal in the running example") {
    auto sat = saturate(s2_s3_st_t());
    auto c = conductor_generators(sat);
    CHECK(c.certified);
    CHECK_FALSE(c.is_unit);
    CHECK(c.equals_maximal);
    CHECK(c.r_generators == vecs({{0, 1}, {1, 1}, {2, 0}, {3, 0}}));
}

TEST_CASE("conductor of <3,4,5> equals the maximal ideal") {
    auto sat = saturate(semigroup({{3}, {4}, {5}}));
    auto c = conductor_generators(sat);
    CHECK(c.certified);
    CHECK(c.equals_maximal);
    CHECK(c.r_generators == vecs({{3}, {4}, {5}}));
}

TEST_CASE("conductor of the five-generator example is a proper ideal") {
    auto sat = saturate(quadrics_minus_xy_2vars());
    auto c = conductor_generators(sat);
    CHECK(c.certified);
    CHECK_FALSE(c.equals_maximal);
    CHECK(c.r_generators == vecs({{1, 1}, {1, 2}, {2, 1}}));
    CHECK(c.rbar_generators == vecs({{1, 1}}));
}

TEST_CASE("normal input produces the unit ideal") {
    auto sat = saturate(semigroup({{1, 0}, {0, 1}}));
    auto c = conductor_generators(sat);
    CHECK(c.is_unit);
    CHECK(c.r_generators == vecs({{0, 0}}));
    CHECK_FALSE(c.equals_maximal);
    CHECK(c.certified);
}

TEST_CASE("numerical conductor oracle values") {
    CHECK(numerical_conductor(NumericalSemigroup({3, 4, 5})) ==
          std::pair<Int, std::vector<Int>>(3, {3, 4, 5}));
    CHECK(numerical_conductor(NumericalSemigroup({2, 3})) ==
          std::pair<Int, std::vector<Int>>(2, {2, 3}));
    CHECK(numerical_conductor(NumericalSemigroup({1})) ==
          std::pair<Int, std::vector<Int>>(0, {0}));
}

TEST_CASE("conductor ideal property") {
    for (const AffineSemigroup& S : {s2_s3_st_t(), quadrics_minus_xy_2vars()}) {
        auto sat = saturate(S);
        auto c = conductor_generators(sat);
        for (const Vec& v : c.r_generators) {
            for (const Vec& w : S.generators()) CHECK(in_conductor(sat, add(v, w)));
            for (const Vec& h : sat.hilbert_basis) CHECK(in_conductor(sat, add(v, h)));
        }
    }
}

TEST_CASE("certified generators match the bounded brute-force oracle") {
    for (const AffineSemigroup& S :
         {s2_s3_st_t(), quadrics_minus_xy_2vars(), quadrics_minus_xy_3vars(),
          semigroup({{3}, {4}, {5}}), semigroup({{2}, {3}}),
          semigroup({{2, 0}, {3, 0}, {0, 1}})}) {
        auto sat = saturate(S);
        auto c = conductor_generators(sat);
        REQUIRE(c.certified);
        CHECK(c.r_generators == oracle::brute_force_conductor_generators(sat));
    }
}
