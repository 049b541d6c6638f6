#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ndpoly/laurent.hpp"

namespace ndpoly {

struct FaceVerdict {
    Face face;
    bool nondegenerate = false;
    std::optional<std::string> witness;  // certificate or solution sketch
};

// Face-by-face decision over the algebraic closure of F_p:
//  - vertex faces: coefficient nonzero;
//  - edge faces: after a unimodular map putting the edge on the horizontal
//    axis the restriction is a monomial times u(x); nondegenerate iff u has
//    no repeated root away from 0 (gcd(u,u') a monomial power);
//  - the full face: the ideal <F, x dF/dx, y dF/dy, xyt-1> is the unit ideal.
// Requires a 2-dimensional Newton polytope.
std::pair<bool, std::vector<FaceVerdict>> is_nondegenerate(const LaurentPolynomial& f);

struct TorusSolution {
    int m = 1;                      // extension degree
    std::vector<std::int64_t> x, y; // coefficient vectors over F_p
};

// Direct search of F_{p^m}^{*2}, m = 1..m_max, for a common zero of
// f|_tau, dx f|_tau, dy f|_tau; returns the first solution in (m, x, y)
// enumeration order. A hit certifies degeneracy of the face; exhaustion is
// evidence, not proof.
std::optional<TorusSolution> brute_force_face_check(const LaurentPolynomial& f,
                                                    const Face& tau, int m_max);

struct ConicEA {
    // c00, c02, c20, c11^2-4*c02*c20, c10^2-4*c00*c20, c01^2-4*c00*c02, D.
    std::array<std::int64_t, 7> factors{};
    std::int64_t value = 0;
};

// The principal determinant of the universal conic, via its explicit
// factorization. p must be odd.
ConicEA conic_ea(std::int64_t p, std::int64_t c00, std::int64_t c10, std::int64_t c01,
                 std::int64_t c20, std::int64_t c11, std::int64_t c02);

// First (x0,y0) in F_p^2, lexicographic order, making f(x-x0, y-y0)
// nondegenerate with respect to its Newton polytope; f must be a polynomial
// (support in the nonnegative quadrant).
std::optional<std::pair<std::int64_t, std::int64_t>> find_nondegenerate_translation(
    const LaurentPolynomial& f);

// Interior lattice point count of the Newton polytope; refuses degenerate input.
Coord genus_of_model(const LaurentPolynomial& f);

}  // namespace ndpoly
