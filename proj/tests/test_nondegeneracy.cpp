#include <doctest.h>

#include <random>

#include "ndpoly/nondegeneracy.hpp"
#include "test_util.hpp"

using namespace ndpoly;

namespace {
LaurentPolynomial poly(const std::string& text) { return LaurentPolynomial::parse(text); }
}  // namespace

TEST_CASE("polynomial text grammar") {
    LaurentPolynomial f = poly("p=7; 1:0,0; 1:1,0; 1:0,1");
    CHECK(f.p() == 7);
    CHECK(f.terms().size() == 3);
    // Duplicates are summed, zero results dropped.
    LaurentPolynomial g = poly("p=5; 2:1,1; 3:1,1");
    CHECK(g.empty());
    LaurentPolynomial h = poly(" p = 11 ; -1 : -2 , 3 ;");
    CHECK(h.coeff({-2, 3}) == 10);
    CHECK(poly(h.to_text()) == h);
    CHECK_THROWS_AS(poly("1:0,0"), std::invalid_argument);
    CHECK_THROWS_AS(poly("p=6; 1:0,0"), std::invalid_argument);  // not prime
}

TEST_CASE("newton polytopes") {
    CHECK(newton_polytope(poly("p=7; 1:0,0; 1:1,0; 1:0,1")).polygon() ==
          LatticePolygon{{{0, 0}, {1, 0}, {0, 1}}});
    // y^2 - x^3 - x - 1 over F5
    CHECK(newton_polytope(poly("p=5; 1:0,2; -1:3,0; -1:1,0; -1:0,0")).polygon() ==
          LatticePolygon{{{0, 0}, {3, 0}, {0, 2}}});
    Hull seg = newton_polytope(poly("p=5; 1:1,0; 1:3,0"));
    CHECK(seg.kind() == Hull::Kind::Segment);
    CHECK_THROWS_AS(newton_polytope(LaurentPolynomial{5}), std::invalid_argument);
}

TEST_CASE("face restrictions") {
    LaurentPolynomial f = poly("p=7; 1:0,0; 1:1,0; 1:0,1");
    LaurentPolynomial r = face_restriction(f, Face::edge({1, 0}, {0, 1}));
    CHECK(r.terms().size() == 2);
    CHECK(r.coeff({1, 0}) == 1);
    CHECK(r.coeff({0, 1}) == 1);
    CHECK(r.coeff({0, 0}) == 0);

    LaurentPolynomial w = poly("p=5; 1:0,2; -1:3,0; -1:1,0; -1:0,0");
    LaurentPolynomial bottom = face_restriction(w, Face::edge({0, 0}, {3, 0}));
    CHECK(bottom.terms().size() == 3);
    LaurentPolynomial top = face_restriction(w, Face::vertex({0, 2}));
    CHECK(top.terms().size() == 1);
    CHECK(top.coeff({0, 2}) == 1);

    CHECK_THROWS_AS(face_restriction(f, Face::vertex({5, 5})), std::invalid_argument);
    CHECK_THROWS_AS(face_restriction(f, Face::edge({0, 0}, {1, 1})), std::invalid_argument);
}

TEST_CASE("nondegeneracy of simple cases") {
    auto [ok1, v1] = is_nondegenerate(poly("p=7; 1:0,0; 1:1,0; 1:0,1"));
    CHECK(ok1);

    // x^2 + 2x + 1 + y: the x-axis edge restriction is (x+1)^2.
    auto [ok2, v2] = is_nondegenerate(poly("p=7; 1:0,0; 2:1,0; 1:2,0; 1:0,1"));
    CHECK_FALSE(ok2);
    bool edge_failed = false;
    for (const auto& fv : v2)
        if (fv.face.kind == Face::Kind::Edge && !fv.nondegenerate) edge_failed = true;
    CHECK(edge_failed);

    // Dense conic over F7: the principal determinant evaluates to 2.
    auto [ok3, v3] = is_nondegenerate(poly("p=7; 1:0,0; 1:1,0; 1:0,1; 1:2,0; 1:1,1; 1:0,2"));
    CHECK(ok3);

    CHECK_THROWS_AS(is_nondegenerate(poly("p=7; 1:0,0")), std::invalid_argument);
    CHECK_THROWS_AS(is_nondegenerate(poly("p=7; 1:1,0; 1:3,0")), std::invalid_argument);
}

TEST_CASE("brute force oracle finds the repeated edge root") {
    LaurentPolynomial f = poly("p=7; 1:0,0; 2:1,0; 1:2,0; 1:0,1");
    auto sol = brute_force_face_check(f, Face::edge({0, 0}, {2, 0}), 1);
    REQUIRE(sol.has_value());
    CHECK(sol->m == 1);
    CHECK(sol->x == std::vector<std::int64_t>{6});  // x = -1

    LaurentPolynomial g = poly("p=7; 1:0,0; 1:1,0; 1:0,1");
    Hull h = newton_polytope(g);
    for (const Face& tau : faces_of(h.polygon()))
        CHECK_FALSE(brute_force_face_check(g, tau, 3).has_value());

    // y^2 - x^3 on its own edge over F5: no solution in degree <= 2.
    LaurentPolynomial e = poly("p=5; 1:0,2; -1:3,0");
    // Build a 2-dim polynomial containing that edge to address the face.
    LaurentPolynomial full = poly("p=5; 1:0,2; -1:3,0; -1:1,0");
    auto edge_sol = brute_force_face_check(full, Face::edge({3, 0}, {0, 2}), 2);
    CHECK_FALSE(edge_sol.has_value());
}

TEST_CASE("conic principal determinant") {
    ConicEA ea = conic_ea(7, 1, 1, 1, 1, 1, 1);
    CHECK(ea.factors == std::array<std::int64_t, 7>{1, 1, 1, 4, 4, 4, 2});
    CHECK(ea.value == 2);

    CHECK(conic_ea(7, 0, 1, 1, 1, 1, 1).value == 0);
    CHECK(conic_ea(7, 1, 1, 1, 1, 2, 1).value == 0);  // c11^2 = 4 c02 c20
    CHECK_THROWS_AS(conic_ea(2, 1, 1, 1, 1, 1, 1), std::invalid_argument);
}

TEST_CASE("conic determinant agrees with the face checker") {
    std::mt19937_64 rng(555);
    std::uniform_int_distribution<std::int64_t> coeff(1, 4);
    for (int trial = 0; trial < 100; ++trial) {
        std::int64_t c00 = coeff(rng), c10 = coeff(rng), c01 = coeff(rng), c20 = coeff(rng),
                     c11 = coeff(rng), c02 = coeff(rng);
        LaurentPolynomial f(5);
        f.add_term({0, 0}, c00);
        f.add_term({1, 0}, c10);
        f.add_term({0, 1}, c01);
        f.add_term({2, 0}, c20);
        f.add_term({1, 1}, c11);
        f.add_term({0, 2}, c02);
        bool ea_nonzero = conic_ea(5, c00, c10, c01, c20, c11, c02).value != 0;
        CHECK(ea_nonzero == is_nondegenerate(f).first);
    }
}

TEST_CASE("translation search") {
    // y^2 - x^3 - x over F5 misses the origin of the triangle.
    LaurentPolynomial f = poly("p=5; 1:0,2; -1:3,0; -1:1,0");
    auto t = find_nondegenerate_translation(f);
    REQUIRE(t.has_value());

    // Already nondegenerate: first hit is the identity translation.
    LaurentPolynomial g = poly("p=7; 1:0,0; 1:1,0; 1:0,1");
    auto tg = find_nondegenerate_translation(g);
    REQUIRE(tg.has_value());
    CHECK(*tg == std::make_pair<std::int64_t, std::int64_t>(0, 0));

    // (x+y)^2 over F3: every translate stays degenerate.
    LaurentPolynomial sq = poly("p=3; 1:2,0; 2:1,1; 1:0,2");
    CHECK_FALSE(find_nondegenerate_translation(sq).has_value());

    CHECK_THROWS_AS(find_nondegenerate_translation(poly("p=5; 1:-1,0; 1:0,1; 1:1,1")),
                    std::invalid_argument);
}

TEST_CASE("genus of nondegenerate models") {
    // Nondegenerate Weierstrass cubic over F5: y^2 - x^3 + x + 1... pick one
    // that passes all faces.
    LaurentPolynomial f = poly("p=5; 1:0,2; -1:3,0; 1:1,0; 1:0,0; 1:2,0; 1:1,1; 1:0,1");
    if (is_nondegenerate(f).first) CHECK(genus_of_model(f) == 1);

    CHECK(genus_of_model(poly("p=7; 1:0,0; 1:1,0; 1:0,1")) == 0);

    LaurentPolynomial deg = poly("p=7; 1:0,0; 2:1,0; 1:2,0; 1:0,1");
    CHECK_THROWS_AS(genus_of_model(deg), std::domain_error);
}

TEST_CASE("verdicts are invariant under exponent equivalences") {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 40; ++trial) {
        std::int64_t p = (trial % 3 == 0) ? 3 : (trial % 3 == 1) ? 5 : 7;
        LaurentPolynomial f = testutil::random_sparse_poly(rng, p);
        auto m = testutil::random_unimodular(rng);
        LaurentPolynomial g = apply_map(m, f);
        CHECK(is_nondegenerate(f).first == is_nondegenerate(g).first);
    }
}

TEST_CASE("checker false implies oracle may find solutions; never the reverse") {
    std::mt19937_64 rng(909);
    for (int trial = 0; trial < 30; ++trial) {
        LaurentPolynomial f = testutil::random_sparse_poly(rng, 3, 3);
        auto [ok, verdicts] = is_nondegenerate(f);
        Hull h = newton_polytope(f);
        for (const Face& tau : faces_of(h.polygon())) {
            auto sol = brute_force_face_check(f, tau, 2);
            if (ok) CHECK_FALSE(sol.has_value());
        }
    }
}
