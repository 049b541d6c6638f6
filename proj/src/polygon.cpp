#include "ndpoly/polygon.hpp"

#include <algorithm>
#include <limits>

namespace ndpoly {

LatticePolygon::LatticePolygon(std::vector<LatticePoint> verts) : verts_(std::move(verts)) {
    if (verts_.size() < 3)
        throw std::invalid_argument("LatticePolygon: need at least 3 vertices");

    // Normalize orientation to CCW.
    Wide area2 = 0;
    for (std::size_t i = 0; i < verts_.size(); ++i)
        area2 += static_cast<Wide>(cross(verts_[i], verts_[(i + 1) % verts_.size()]));
    if (area2 == 0) throw std::invalid_argument("LatticePolygon: degenerate (zero area)");
    if (area2 < 0) std::reverse(verts_.begin(), verts_.end());

    // Rotate so the lexicographically smallest vertex comes first.
    auto mn = std::min_element(verts_.begin(), verts_.end());
    std::rotate(verts_.begin(), mn, verts_.end());

    // Strict convexity at every vertex (also rules out duplicates and reflex turns).
    const std::size_t n = verts_.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (orient(verts_[i], verts_[(i + 1) % n], verts_[(i + 2) % n]) <= 0)
            throw std::invalid_argument("LatticePolygon: vertices not strictly convex CCW");
    }
}

std::vector<LatticeSegment> LatticePolygon::edges() const {
    std::vector<LatticeSegment> out;
    out.reserve(verts_.size());
    for (std::size_t i = 0; i < verts_.size(); ++i) out.push_back(edge(i));
    return out;
}

Coord LatticePolygon::twice_area() const {
    Wide s = 0;
    for (std::size_t i = 0; i < verts_.size(); ++i)
        s += static_cast<Wide>(cross(verts_[i], verts_[(i + 1) % verts_.size()]));
    return static_cast<Coord>(s);
}

bool LatticePolygon::contains(LatticePoint p) const {
    const std::size_t n = verts_.size();
    for (std::size_t i = 0; i < n; ++i)
        if (orient(verts_[i], verts_[(i + 1) % n], p) < 0) return false;
    return true;
}

bool LatticePolygon::contains_interior(LatticePoint p) const {
    const std::size_t n = verts_.size();
    for (std::size_t i = 0; i < n; ++i)
        if (orient(verts_[i], verts_[(i + 1) % n], p) <= 0) return false;
    return true;
}

bool LatticePolygon::boundary_contains(LatticePoint p) const {
    return contains(p) && !contains_interior(p);
}

void LatticePolygon::bounding_box(Coord& xmin, Coord& xmax, Coord& ymin, Coord& ymax) const {
    xmin = ymin = std::numeric_limits<Coord>::max();
    xmax = ymax = std::numeric_limits<Coord>::min();
    for (auto v : verts_) {
        xmin = std::min(xmin, v.x);
        xmax = std::max(xmax, v.x);
        ymin = std::min(ymin, v.y);
        ymax = std::max(ymax, v.y);
    }
}

Hull convex_hull(std::vector<LatticePoint> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    if (pts.empty()) return Hull{std::monostate{}};
    if (pts.size() == 1) return Hull{pts[0]};

    // Andrew monotone chain, strict turns only (collinear points dropped).
    auto build = [&](bool lower) {
        std::vector<LatticePoint> chain;
        auto scan = [&](LatticePoint p) {
            while (chain.size() >= 2 &&
                   orient(chain[chain.size() - 2], chain[chain.size() - 1], p) <= 0)
                chain.pop_back();
            chain.push_back(p);
        };
        if (lower)
            for (auto p : pts) scan(p);
        else
            for (auto it = pts.rbegin(); it != pts.rend(); ++it) scan(*it);
        return chain;
    };

    std::vector<LatticePoint> lower = build(true), upper = build(false);
    std::vector<LatticePoint> hull(lower.begin(), lower.end() - 1);
    hull.insert(hull.end(), upper.begin(), upper.end() - 1);

    if (hull.size() <= 2) {
        // All points collinear: extremes are the sorted first/last.
        return Hull{LatticeSegment{pts.front(), pts.back()}};
    }
    return Hull{LatticePolygon{std::move(hull)}};
}

std::vector<LatticePoint> lattice_points(const LatticePolygon& p) {
    Coord xmin, xmax, ymin, ymax;
    p.bounding_box(xmin, xmax, ymin, ymax);
    std::vector<LatticePoint> out;
    for (Coord y = ymin; y <= ymax; ++y)
        for (Coord x = xmin; x <= xmax; ++x)
            if (p.contains({x, y})) out.push_back({x, y});
    return out;
}

std::vector<LatticePoint> interior_lattice_points(const LatticePolygon& p) {
    Coord xmin, xmax, ymin, ymax;
    p.bounding_box(xmin, xmax, ymin, ymax);
    std::vector<LatticePoint> out;
    for (Coord y = ymin + 1; y < ymax; ++y)
        for (Coord x = xmin + 1; x < xmax; ++x)
            if (p.contains_interior({x, y})) out.push_back({x, y});
    return out;
}

std::vector<LatticePoint> lattice_points(const Hull& h) {
    switch (h.kind()) {
        case Hull::Kind::Empty: return {};
        case Hull::Kind::Point: return {h.point()};
        case Hull::Kind::Segment: {
            const auto& s = h.segment();
            Coord g = edge_lattice_length(s);
            LatticePoint step{(s.b.x - s.a.x) / g, (s.b.y - s.a.y) / g};
            std::vector<LatticePoint> out;
            for (Coord k = 0; k <= g; ++k) out.push_back(s.a + step * k);
            return out;
        }
        case Hull::Kind::Polygon: return lattice_points(h.polygon());
    }
    return {};
}

Coord Hull::lattice_point_count() const {
    switch (kind()) {
        case Kind::Empty: return 0;
        case Kind::Point: return 1;
        case Kind::Segment: return edge_lattice_length(segment()) + 1;
        case Kind::Polygon: return static_cast<Coord>(lattice_points(polygon()).size());
    }
    return 0;
}

Coord Hull::boundary_point_count() const {
    if (kind() == Kind::Polygon) return boundary_count(polygon());
    return lattice_point_count();
}

Coord Hull::interior_point_count() const {
    if (kind() == Kind::Polygon) return genus(polygon());
    return 0;
}

Coord boundary_count(const LatticePolygon& p) {
    Coord r = 0;
    for (std::size_t i = 0; i < p.size(); ++i) r += edge_lattice_length(p.edge(i));
    return r;
}

LatticePolygon apply_map(const UnimodularAffineMap& m, const LatticePolygon& p) {
    std::vector<LatticePoint> v;
    v.reserve(p.size());
    for (auto q : p.vertices()) v.push_back(m(q));
    return LatticePolygon{std::move(v)};
}

Hull apply_map(const UnimodularAffineMap& m, const Hull& h) {
    switch (h.kind()) {
        case Hull::Kind::Empty: return h;
        case Hull::Kind::Point: return Hull{m(h.point())};
        case Hull::Kind::Segment:
            return Hull{LatticeSegment{m(h.segment().a), m(h.segment().b)}};
        case Hull::Kind::Polygon: return Hull{apply_map(m, h.polygon())};
    }
    return h;
}

Coord directional_width(const LatticePolygon& p, LatticePoint u) {
    Coord lo = std::numeric_limits<Coord>::max(), hi = std::numeric_limits<Coord>::min();
    for (auto v : p.vertices()) {
        Coord d = dot(u, v);
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
    return hi - lo;
}

Coord lattice_width(const LatticePolygon& p) {
    Coord xmin, xmax, ymin, ymax;
    p.bounding_box(xmin, xmax, ymin, ymax);
    Coord spread = std::max(xmax - xmin, ymax - ymin);
    Coord best = std::numeric_limits<Coord>::max();
    for (Coord u1 = -spread; u1 <= spread; ++u1)
        for (Coord u2 = 0; u2 <= spread; ++u2) {
            if (u2 == 0 && u1 <= 0) continue;  // one representative per +-pair
            if (abs_gcd(u1, u2) != 1) continue;
            best = std::min(best, directional_width(p, {u1, u2}));
        }
    return best;
}

}  // namespace ndpoly
