#pragma once

#include <optional>
#include <vector>

#include "ndpoly/canonical.hpp"
#include "ndpoly/polygon.hpp"

namespace ndpoly {

// Facet inequality <n,x> <= b with primitive outward normal n.
struct FacetInequality {
    LatticePoint normal;
    Coord rhs;
};

std::vector<FacetInequality> facet_inequalities(const LatticePolygon& p);

// Convex hull of the interior lattice points, dimension-classified.
Hull interior_hull(const LatticePolygon& p);

// Intersection of all facet inequalities moved outward by one lattice unit.
// Returns nullopt ("not_lattice") when the relaxed region is not a lattice
// polygon; by the maximality dichotomy this happens exactly when p is not the
// interior hull of any lattice polygon.
std::optional<LatticePolygon> relax(const LatticePolygon& p);

// Exact intersection point of the two relaxed facet lines adjacent to vertex i.
RationalPoint relaxed_vertex(const LatticePolygon& p, std::size_t vertex_index);

// Definition: not properly contained in a lattice polygon with the same
// interior lattice points. Requires genus >= 1. Nonhyperelliptic polygons use
// the relaxation criterion; polygons with collinear interior points fall back
// to a bounded definitional search over augmentation points.
bool is_maximal(const LatticePolygon& p);

struct ColumnVector {
    LatticePoint v;
    std::vector<std::size_t> base_facets;  // indices into facet_inequalities(p)
};

// All nonzero v admitting a base facet tau with v + ((p \ tau) cap Z^2) inside p.
std::vector<ColumnVector> column_vectors(const LatticePolygon& p);

Coord m_bound(const LatticePolygon& p);   // #(p cap Z^2) - c(p) - 3
Coord dim_aut(const LatticePolygon& p);   // c(p) + 2

// True iff all interior lattice points lie on one line. Requires genus >= 2.
bool is_hyperelliptic_polytope(const LatticePolygon& p);

// #(p cap Z^2) - 1 - dim_aut(p); rejects nonmaximal or hyperelliptic input.
Coord koelman_dim(const LatticePolygon& p);

enum class Genus4Arrangement { A, B, C };

// Matches the four interior points of a nonhyperelliptic genus-4 polygon
// against the three reference configurations.
Genus4Arrangement classify_genus4_hull(const LatticePolygon& p);

struct PolygonReport {
    Coord genus = 0;
    Coord r = 0;
    Coord r1 = 0;
    Coord g1 = 0;
    Coord c = 0;
    Coord m = 0;
    Coord dim_aut = 0;
    Coord dim_M_Delta_upper = 0;            // #(p cap Z^2) - 1
    std::optional<bool> is_maximal;         // absent for genus 0
    std::optional<bool> is_hyperelliptic;   // absent for genus <= 1
    std::optional<Coord> koelman_dim;       // present iff maximal and nonhyperelliptic
};

PolygonReport analyze(const LatticePolygon& p);

}  // namespace ndpoly
