#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "ndpoly/geometry.hpp"

namespace ndpoly {

// Convex lattice polygon, stored counterclockwise, strictly convex (no three
// consecutive collinear vertices), first vertex = lexicographically smallest.
class LatticePolygon {
  public:
    // Vertices must already be in convex position (any cyclic order/orientation);
    // the constructor normalizes to CCW starting at the lex-min vertex and
    // rejects lists that are not strictly convex.
    explicit LatticePolygon(std::vector<LatticePoint> verts);

    const std::vector<LatticePoint>& vertices() const { return verts_; }
    std::size_t size() const { return verts_.size(); }

    LatticePoint vertex(std::size_t i) const { return verts_[i % verts_.size()]; }
    LatticeSegment edge(std::size_t i) const {
        return {verts_[i % verts_.size()], verts_[(i + 1) % verts_.size()]};
    }
    std::vector<LatticeSegment> edges() const;

    // Twice the area (shoelace); always a positive integer.
    Coord twice_area() const;

    bool contains(LatticePoint p) const;           // closed polygon
    bool contains_interior(LatticePoint p) const;  // strict interior
    bool boundary_contains(LatticePoint p) const;

    void bounding_box(Coord& xmin, Coord& xmax, Coord& ymin, Coord& ymax) const;

    friend bool operator==(const LatticePolygon&, const LatticePolygon&) = default;
    friend auto operator<=>(const LatticePolygon& a, const LatticePolygon& b) {
        return a.verts_ <=> b.verts_;
    }

  private:
    std::vector<LatticePoint> verts_;
};

// Convex hull classified by dimension.
struct Hull {
    std::variant<std::monostate, LatticePoint, LatticeSegment, LatticePolygon> value;

    enum class Kind { Empty, Point, Segment, Polygon };
    Kind kind() const { return static_cast<Kind>(value.index()); }

    bool empty() const { return kind() == Kind::Empty; }
    const LatticePoint& point() const { return std::get<LatticePoint>(value); }
    const LatticeSegment& segment() const { return std::get<LatticeSegment>(value); }
    const LatticePolygon& polygon() const { return std::get<LatticePolygon>(value); }

    // Number of lattice points of the hull (= of the generating set's saturation).
    Coord lattice_point_count() const;
    // Lattice points on the boundary (for a point: 1, segment: all its points).
    Coord boundary_point_count() const;
    // Lattice points strictly inside (0 unless 2-dimensional).
    Coord interior_point_count() const;
};

Hull convex_hull(std::vector<LatticePoint> points);

std::vector<LatticePoint> lattice_points(const LatticePolygon& p);
std::vector<LatticePoint> interior_lattice_points(const LatticePolygon& p);
std::vector<LatticePoint> lattice_points(const Hull& h);

// r = number of boundary lattice points = sum of edge lattice lengths.
Coord boundary_count(const LatticePolygon& p);
inline Coord genus(const LatticePolygon& p) {
    return static_cast<Coord>(interior_lattice_points(p).size());
}

LatticePolygon apply_map(const UnimodularAffineMap& m, const LatticePolygon& p);
Hull apply_map(const UnimodularAffineMap& m, const Hull& h);

// Width of p in direction u: max<u,v> - min<u,v> over vertices.
Coord directional_width(const LatticePolygon& p, LatticePoint u);

// Minimum of directional_width over primitive directions; searched over the
// box |u1|,|u2| <= max coordinate spread, which contains the facet normals of
// the difference body p - p.
Coord lattice_width(const LatticePolygon& p);

}  // namespace ndpoly
