#include <doctest.h>

#include <random>

#include "ndpoly/canonical.hpp"
#include "test_util.hpp"

using namespace ndpoly;

TEST_CASE("canonical form identifies equivalent triangles") {
    LatticePolygon sigma{{{0, 0}, {1, 0}, {0, 1}}};
    LatticePolygon sheared{{{0, 0}, {1, 0}, {1, 1}}};
    CHECK(canonical_form(sigma).first == canonical_form(sheared).first);
    CHECK(is_equivalent(sigma, sheared));

    LatticePolygon two_sigma{{{0, 0}, {2, 0}, {0, 2}}};
    LatticePolygon square{{{0, 0}, {1, 0}, {1, 1}, {0, 1}}};
    CHECK_FALSE(is_equivalent(two_sigma, square));
}

TEST_CASE("canonical form returns a map onto the representative") {
    std::mt19937_64 rng(7);
    for (const auto& p : testutil::sample_polygons()) {
        auto [canon, map] = canonical_form(p);
        CHECK(apply_map(map, p) == canon);
    }
}

TEST_CASE("canonical form is invariant under random unimodular maps") {
    std::mt19937_64 rng(20240401);
    for (const auto& p : testutil::sample_polygons()) {
        auto canon = canonical_form(p).first;
        for (int trial = 0; trial < 60; ++trial) {
            auto m = testutil::random_unimodular(rng);
            CHECK(canonical_form(apply_map(m, p)).first == canon);
        }
    }
}

TEST_CASE("reflections are equivalences") {
    // det -1 maps must be quotiented out.
    LatticePolygon p{{{0, 0}, {3, 0}, {0, 2}}};
    UnimodularAffineMap mirror{0, 1, 1, 0};
    CHECK(is_equivalent(p, apply_map(mirror, p)));
}

TEST_CASE("canonical hulls for degenerate shapes") {
    Hull seg = convex_hull({{2, 3}, {8, 6}});
    Hull canon = canonical_hull(seg);
    REQUIRE(canon.kind() == Hull::Kind::Segment);
    CHECK(canon.segment().a == LatticePoint{0, 0});
    CHECK(canon.segment().b == LatticePoint{3, 0});

    CHECK(canonical_hull(convex_hull({{4, -1}})).point() == LatticePoint{0, 0});
    CHECK(is_equivalent(convex_hull({{0, 0}, {0, 2}}), convex_hull({{5, 5}, {7, 6}})));
    CHECK_FALSE(is_equivalent(convex_hull({{0, 0}, {0, 2}}), convex_hull({{0, 0}, {3, 0}})));
}
