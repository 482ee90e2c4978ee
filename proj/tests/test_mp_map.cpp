#include "maxpres/mp_map.hpp"
#include "support/generators.hpp"

#include <doctest.h>

using namespace maxpres;
using namespace maxpres::testing;

TEST_CASE("apply") {
    const MpMap a = example_map();
    CHECK(apply(a, vec({1, 1, 1})) == vec({r(1, 2), 2, 3}));
    CHECK(apply(a, NonnegVector::zeros(3)).is_zero());
    const MpMap b = MpMap::from_gains({{0, r(1, 2)}, {r(1, 3), 0}});
    CHECK(apply(b, vec({6, 6})) == vec({3, 2}));
    CHECK_THROWS_AS(apply(a, vec({1, 1})), DimensionMismatch);
}

TEST_CASE("construction validates the grid") {
    CHECK_THROWS_AS(MpMap(2, std::vector<ScalarFn>(3)), DimensionMismatch);
    CHECK_THROWS_AS(MpMap(std::vector<std::vector<ScalarFn>>{{ScalarFn::zero()}, {ScalarFn::zero()}}),
                    DimensionMismatch);
    CHECK_THROWS_AS(NonnegVector({r(1), r(-1)}), Error);
}

TEST_CASE("composition and maximum of maps") {
    const MpMap a = example_map();
    CHECK(structurally_equal(compose_maps(a, MpMap::identity(3)), a));
    CHECK(structurally_equal(compose_maps(MpMap::identity(3), a), a));
    CHECK(compose_maps(a, MpMap::zero(3)) == MpMap::zero(3));
    const MpMap sq = compose_maps(a, a);
    CHECK(sq(2, 0) == ScalarFn::linear(6));
    CHECK(power_map(a, 2)(0, 0) == ScalarFn::linear(r(2, 3)));

    CHECK(structurally_equal(oplus_maps(a, MpMap::zero(3)), a));
    CHECK(structurally_equal(oplus_maps(a, a), a));
    const MpMap ia = oplus_maps(MpMap::identity(3), a);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(ia(i, j) == (i == j ? ScalarFn::identity() : normalize(a(i, j))));

    CHECK(power_map(a, 0) == MpMap::identity(3));
    CHECK(structurally_equal(power_map(a, 1), a));
    CHECK_THROWS_AS(compose_maps(a, MpMap::zero(2)), DimensionMismatch);
    CHECK_THROWS_AS(oplus_maps(a, MpMap::zero(2)), DimensionMismatch);
}

TEST_CASE("compare_vectors and max_norm") {
    CHECK(compare_vectors(vec({1, 2}), vec({1, 2})) == OrderRelation::LessOrEqual);
    CHECK(compare_vectors(vec({r(6, 7), 2, 6}), vec({1, 2, 6})) == OrderRelation::StrictlyLess);
    CHECK(compare_vectors(vec({1, 0}), vec({0, 1})) == OrderRelation::Incomparable);
    CHECK(compare_vectors(vec({0, 0}), vec({1, 1})) == OrderRelation::ComponentwiseStrict);
    CHECK(strictly_less(OrderRelation::ComponentwiseStrict));
    CHECK_FALSE(strictly_less(OrderRelation::LessOrEqual));
    CHECK(max_norm(vec({r(1, 2), 2, 3})) == 3);
    CHECK(max_norm(NonnegVector::zeros(4)) == 0);
    CHECK(max_norm(vec({5, 5})) == 5);
    CHECK_THROWS_AS(compare_vectors(vec({1}), vec({1, 1})), DimensionMismatch);
}

TEST_CASE("max-preservation, monotonicity and the norm identity") {
    Gen g(99);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + g.below(4);
        const MpMap a = random_map(g, n);
        const MpMap b = random_map(g, n);
        const MpMap ab = compose_maps(a, b);
        for (int k = 0; k < 5; ++k) {
            const NonnegVector x = g.vector(n);
            const NonnegVector y = g.vector(n);
            REQUIRE(apply(a, oplus(x, y)) == oplus(apply(a, x), apply(a, y)));
            REQUIRE(apply(ab, x) == apply(a, apply(b, x)));
            const NonnegVector hi = oplus(x, y);
            CHECK(leq(apply(a, x), apply(a, hi)));
            CHECK(max_norm(oplus(x, y)) == max(max_norm(x), max_norm(y)));
        }
    }
}

TEST_CASE("verification grid is deterministic and covers the axes") {
    const auto g1 = verification_grid(3, 64);
    const auto g2 = verification_grid(3, 64);
    CHECK(g1.size() == 64);
    CHECK(g1 == g2);
    CHECK(g1[0].is_zero());
    CHECK(g1[2] == NonnegVector::unit(3, 0));
    const MpMap a = example_map();
    CHECK(pointwise_equal(compose_maps(a, MpMap::identity(3)), a, g1));
    CHECK_FALSE(pointwise_equal(a, MpMap::zero(3), g1));
}

TEST_CASE("semiring laws hold pointwise") {
    Gen g(7);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = 1 + g.below(3);
        const MpMap a = random_map(g, n), b = random_map(g, n), c = random_map(g, n);
        const MpMap id = MpMap::identity(n), zero = MpMap::zero(n);
        const auto grid = verification_grid(n, 20);
        CHECK(pointwise_equal(compose_maps(compose_maps(a, b), c), compose_maps(a, compose_maps(b, c)), grid));
        CHECK(pointwise_equal(oplus_maps(oplus_maps(a, b), c), oplus_maps(a, oplus_maps(b, c)), grid));
        CHECK(pointwise_equal(oplus_maps(a, b), oplus_maps(b, a), grid));
        CHECK(pointwise_equal(compose_maps(a, oplus_maps(b, c)),
                              oplus_maps(compose_maps(a, b), compose_maps(a, c)), grid));
        CHECK(pointwise_equal(compose_maps(oplus_maps(a, b), c),
                              oplus_maps(compose_maps(a, c), compose_maps(b, c)), grid));
        CHECK(pointwise_equal(compose_maps(id, a), a, grid));
        CHECK(pointwise_equal(oplus_maps(zero, a), a, grid));
        CHECK(pointwise_equal(compose_maps(zero, a), zero, grid));
    }
}
