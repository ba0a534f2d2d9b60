#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "alexander.hpp"

using namespace cuspidal;

TEST_CASE("candidate tables for a sextic with 8 cusps") {
    auto cands = betti_candidates(1, 8);
    REQUIRE(cands.size() == 2);
    // sorted deterministically: smaller table first
    CHECK(cands[0].syz_degrees == std::vector<int>{5, 5});
    CHECK(cands[0].gen_degrees == std::vector<int>{4, 3, 3});
    CHECK(cands[1].syz_degrees == std::vector<int>{5, 5, 4});
    CHECK(cands[1].gen_degrees == std::vector<int>{4, 4, 3, 3});
    for (const auto& t : cands) {
        CHECK(t.sum_a() == t.sum_b());
        CHECK(t.square_identity() == 16);
        CHECK(t.positionwise_a_below_b());
        // intermediate counts of the elimination argument: r = #{b = 5},
        // A_j = #{b = j} - #{a = j}
        int r = 0, A4 = 0, A3 = 0;
        for (int b : t.syz_degrees) {
            if (b == 5) ++r;
            if (b == 4) ++A4;
            if (b == 3) ++A3;
        }
        for (int a : t.gen_degrees) {
            if (a == 4) --A4;
            if (a == 3) --A3;
        }
        CHECK(r == 2);
        CHECK(A4 == -1);
        CHECK(A3 == -2);
    }
}

TEST_CASE("candidate tables for one cusp") {
    auto cands = betti_candidates(1, 1);
    REQUIRE(cands.size() == 1);
    CHECK(cands[0].syz_degrees == std::vector<int>{2});
    CHECK(cands[0].gen_degrees == std::vector<int>{1, 1});
    for (const auto& t : cands) {
        CHECK(t.square_identity() == 2);
        CHECK(1 <= 3 * t.gen_degrees.back());
        for (int b : t.syz_degrees) CHECK(b <= 5);
    }
}

TEST_CASE("alexander degree of the cuspidal cubic is trivial (degree not 6k)") {
    auto F = Field::prime(457);
    auto f = Poly::parse("v^2*w-u^3", F);
    auto locus = singular_locus(f);
    auto res = alexander_degree(locus, 3);
    CHECK(!res.degree_is_6k);
    CHECK(res.degree_via_hilbert == 0);
    CHECK(res.m == 0);
}

TEST_CASE("six-cusp detection on a conic helper") {
    auto F = Field::prime(457);
    // three collinear-ish points never fill a conic: any finite point set of
    // size <= 4 lies on a conic; check dim I_2 > 0 there
    IdealBasis one_point(F, {Poly::parse("u", F), Poly::parse("v", F)});
    CHECK(cusps_on_conic(one_point));
}
