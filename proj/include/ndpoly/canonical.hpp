#pragma once

#include <utility>
#include <vector>

#include "ndpoly/polygon.hpp"

namespace ndpoly {

// Canonical representative of the GL2(Z)+translation equivalence class of p,
// together with a map sending p onto it. Two polygons are equivalent iff
// their canonical forms are identical vertex lists.
//
// Algorithm: among all unimodular matrices whose two rows u both satisfy
// width_u(p) <= B(p), where B(p) is the smallest achievable max row width,
// apply the matrix, translate the image into the nonnegative quadrant
// touching both axes, and keep the lexicographically smallest vertex list.
// The row-width bound makes the search finite and is equivalence-covariant,
// so equivalent polygons select identical representatives.
std::pair<LatticePolygon, UnimodularAffineMap> canonical_form(const LatticePolygon& p);

bool is_equivalent(const LatticePolygon& a, const LatticePolygon& b);

// Canonical representative for degenerate hulls too: the empty hull maps to
// itself, a point to (0,0), a segment with n lattice points to (0,0)-(n-1,0).
Hull canonical_hull(const Hull& h);
bool is_equivalent(const Hull& a, const Hull& b);

}  // namespace ndpoly
