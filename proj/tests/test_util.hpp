#pragma once

#include <random>
#include <vector>

#include "ndpoly/laurent.hpp"
#include "ndpoly/polygon.hpp"

namespace ndpoly::testutil {

inline UnimodularAffineMap random_unimodular(std::mt19937_64& rng) {
    // Product of random shears and a possible swap/reflection, plus a small
    // translation; keeps entries modest so mapped coordinates stay tame.
    UnimodularAffineMap m;
    std::uniform_int_distribution<int> steps(2, 4), shear(-3, 3), flip(0, 1), tr(-6, 6);
    int n = steps(rng);
    for (int i = 0; i < n; ++i) {
        m = UnimodularAffineMap{1, shear(rng), 0, 1}.compose(m);
        m = UnimodularAffineMap{1, 0, shear(rng), 1}.compose(m);
    }
    if (flip(rng)) m = UnimodularAffineMap{0, 1, 1, 0}.compose(m);  // reflection
    return UnimodularAffineMap::translation(tr(rng), tr(rng)).compose(m);
}

inline std::vector<LatticePolygon> sample_polygons() {
    auto tri = [](Coord ax, Coord ay, Coord bx, Coord by, Coord cx, Coord cy) {
        return LatticePolygon{{{ax, ay}, {bx, by}, {cx, cy}}};
    };
    std::vector<LatticePolygon> out;
    out.push_back(tri(0, 0, 1, 0, 0, 1));                              // Sigma
    out.push_back(tri(0, 0, 2, 0, 0, 2));                              // 2 Sigma
    out.push_back(tri(0, 0, 4, 0, 0, 4));                              // 4 Sigma
    out.push_back(tri(0, 0, 3, 0, 0, 2));                              // Weierstrass
    out.push_back(tri(0, 0, 6, 0, 0, 2));                              // genus-2 strip
    out.push_back(tri(0, 0, 6, 0, 0, 3));                              // genus-4 conical
    out.push_back(LatticePolygon{{{0, 0}, {1, 0}, {1, 1}, {0, 1}}});   // unit square
    out.push_back(LatticePolygon{{{0, 0}, {3, 0}, {3, 3}, {0, 3}}});   // 3x3 square
    out.push_back(LatticePolygon{{{0, 0}, {3, 0}, {3, 2}, {2, 3}, {0, 3}}});  // pruned quintic
    out.push_back(LatticePolygon{{{0, 0}, {4, 0}, {4, 3}, {0, 3}}});   // genus-6 witness
    out.push_back(LatticePolygon{{{0, 0}, {5, 0}, {2, 3}, {0, 3}}});   // genus-5 witness
    out.push_back(LatticePolygon{
        {{1, 0}, {3, 0}, {4, 1}, {4, 3}, {3, 4}, {1, 4}, {0, 3}, {0, 1}}});  // octagon
    out.push_back(LatticePolygon{
        {{2, 0}, {0, 2}, {-2, 2}, {-2, 0}, {0, -2}, {2, -2}}});        // genus-7 hexagon
    out.push_back(LatticePolygon{{{0, 1}, {8, 1}, {8, 3}, {4, 5}}});   // dual-loop example
    return out;
}

inline LaurentPolynomial random_sparse_poly(std::mt19937_64& rng, std::int64_t p,
                                            Coord box = 4) {
    std::uniform_int_distribution<Coord> exp(0, box);
    std::uniform_int_distribution<std::int64_t> coeff(1, p - 1);
    std::uniform_int_distribution<int> nterms(3, 7);
    while (true) {
        LaurentPolynomial f(p);
        int n = nterms(rng);
        for (int i = 0; i < n; ++i) f.add_term({exp(rng), exp(rng)}, coeff(rng));
        if (f.empty()) continue;
        Hull h = newton_polytope(f);
        if (h.kind() == Hull::Kind::Polygon) return f;
    }
}

}  // namespace ndpoly::testutil
