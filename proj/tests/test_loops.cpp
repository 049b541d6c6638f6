#include <doctest.h>

#include "ndpoly/loops.hpp"

using namespace ndpoly;

TEST_CASE("move lengths") {
    CHECK(move_length({1, 0}, {0, 1}) == 1);
    CHECK(move_length({-1, -1}, {2, -1}) == 3);
    CHECK(move_length({0, -1}, {-1, 0}) == -1);
    CHECK_THROWS_AS(move_length({2, 0}, {0, 1}), std::invalid_argument);  // gcd(v) != 1
    CHECK_THROWS_AS(move_length({1, 0}, {-1, 0}), std::invalid_argument); // degenerate
}

TEST_CASE("4*Sigma loop and its dual") {
    LegalLoop loop{{{-1, -1}, {2, -1}, {-1, 2}}};
    CHECK(loop_length(loop) == 9);
    LegalLoop dual = dual_loop(loop);
    CHECK(dual.vectors() == std::vector<LatticePoint>{{1, 0}, {-1, 1}, {0, -1}});
    CHECK(loop_length(dual) == 3);
    CHECK(winding_number(loop) == 1);

    TwelveCheck t = verify_twelve(loop);
    CHECK(t.length == 9);
    CHECK(t.dual_length == 3);
    CHECK(t.winding == 1);
    CHECK(t.holds);
}

TEST_CASE("dual of dual is the original rotated by 180 degrees") {
    LegalLoop loop{{{-1, -1}, {2, -1}, {-1, 2}}};
    LegalLoop dd = dual_loop(dual_loop(loop));
    std::vector<LatticePoint> rotated;
    for (auto v : loop.vectors()) rotated.push_back(-v);
    // Compare as cyclic sequences.
    bool matches = false;
    const auto& got = dd.vectors();
    for (std::size_t shift = 0; shift < rotated.size(); ++shift) {
        bool ok = true;
        for (std::size_t i = 0; i < rotated.size(); ++i)
            if (got[i] != rotated[(i + shift) % rotated.size()]) ok = false;
        matches = matches || ok;
    }
    CHECK(matches);
}

TEST_CASE("winding numbers of diamonds") {
    LegalLoop diamond{{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}};
    CHECK(winding_number(diamond) == 1);
    TwelveCheck t = verify_twelve(diamond);
    CHECK(t.length == 4);
    CHECK(t.dual_length == 8);
    CHECK(t.winding == 1);
    CHECK(t.holds);

    LegalLoop reversed{{{0, -1}, {-1, 0}, {0, 1}, {1, 0}}};
    CHECK(winding_number(reversed) == -1);
}

TEST_CASE("loop of a maximal polytope") {
    LatticePolygon four_sigma{{{0, 0}, {4, 0}, {0, 4}}};
    LegalLoop loop = loop_of_polytope(four_sigma);
    CHECK(loop.vectors() == std::vector<LatticePoint>{{-1, -1}, {2, -1}, {-1, 2}});

    // Quadrilateral with a five-vertex interior hull; one relaxed inequality
    // touches the region in a single point.
    LatticePolygon fig{{{0, 1}, {8, 1}, {8, 3}, {4, 5}}};
    LegalLoop floop = loop_of_polytope(fig);
    CHECK(floop.size() == 5);
    TwelveCheck t = verify_twelve(floop);
    CHECK(t.length == 6);
    CHECK(t.dual_length == 6);
    CHECK(t.winding == 1);
    CHECK(t.holds);
    CHECK(boundary_count(fig) - interior_hull(fig).boundary_point_count() == t.length);

    LatticePolygon square3{{{0, 0}, {3, 0}, {3, 3}, {0, 3}}};
    LegalLoop sloop = loop_of_polytope(square3);
    CHECK(loop_length(sloop) == boundary_count(square3) - 4);

    // Nonmaximal and thin-interior inputs are rejected.
    CHECK_THROWS_AS(loop_of_polytope(LatticePolygon{{{0, 0}, {3, 0}, {3, 2}, {2, 3}, {0, 3}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(loop_of_polytope(LatticePolygon{{{0, 0}, {6, 0}, {0, 2}}}),
                    std::invalid_argument);
}

TEST_CASE("loops validate their invariants") {
    CHECK_THROWS_AS(LegalLoop({{1, 0}, {0, 1}}), std::invalid_argument);
    // (1,0) -> (2,3) spans a triangle with an interior lattice point.
    CHECK_THROWS_AS(LegalLoop({{1, 0}, {2, 3}, {0, 1}}), std::invalid_argument);
    // (1,0),(0,1),(-1,2) lie on one line.
    CHECK_THROWS_AS(LegalLoop({{1, 0}, {0, 1}, {-1, 2}}), std::invalid_argument);
}
