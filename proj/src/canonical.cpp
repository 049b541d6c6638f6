#include "ndpoly/canonical.hpp"

#include <algorithm>
#include <limits>

namespace ndpoly {

namespace {

struct Dir {
    LatticePoint u;
    Coord width;
};

// All primitive directions u (one per +-pair) with width_u(p) <= bound.
// A direction with width <= bound pairs to |<u,e1>|,|<u,e2>| <= bound for two
// independent edge vectors e1,e2, and u is recoverable from that pair of
// products, so scanning the product box is exhaustive.
std::vector<Dir> directions_within(const LatticePolygon& p, Coord bound) {
    const auto& vs = p.vertices();
    LatticePoint e1 = vs[1] - vs[0];
    LatticePoint e2 = vs[2] - vs[0];
    Coord d = cross(e1, e2);  // > 0, strict convexity

    std::vector<Dir> out;
    for (Coord t1 = -bound; t1 <= bound; ++t1)
        for (Coord t2 = -bound; t2 <= bound; ++t2) {
            // Solve <u,e1> = t1, <u,e2> = t2.
            Coord ux_num = t1 * e2.y - t2 * e1.y;
            Coord uy_num = t2 * e1.x - t1 * e2.x;
            if (ux_num % d != 0 || uy_num % d != 0) continue;
            LatticePoint u{ux_num / d, uy_num / d};
            if (u.y < 0 || (u.y == 0 && u.x <= 0)) continue;  // keep one sign
            if (!is_primitive(u)) continue;
            Coord w = directional_width(p, u);
            if (w <= bound) out.push_back({u, w});
        }
    std::sort(out.begin(), out.end(), [](const Dir& a, const Dir& b) {
        return std::tie(a.width, a.u) < std::tie(b.width, b.u);
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const Dir& a, const Dir& b) { return a.u == b.u; }),
              out.end());
    return out;
}

std::vector<LatticePoint> mapped_normalized(const LatticePolygon& p, LatticePoint r1,
                                            LatticePoint r2, UnimodularAffineMap* map_out) {
    std::vector<LatticePoint> img;
    img.reserve(p.size());
    Coord xmin = std::numeric_limits<Coord>::max(), ymin = xmin;
    for (auto v : p.vertices()) {
        LatticePoint q{dot(r1, v), dot(r2, v)};
        xmin = std::min(xmin, q.x);
        ymin = std::min(ymin, q.y);
        img.push_back(q);
    }
    for (auto& q : img) q = q - LatticePoint{xmin, ymin};
    if (map_out)
        *map_out = UnimodularAffineMap{r1.x, r1.y, r2.x, r2.y, -xmin, -ymin};
    LatticePolygon norm{std::move(img)};
    return norm.vertices();
}

}  // namespace

std::pair<LatticePolygon, UnimodularAffineMap> canonical_form(const LatticePolygon& p) {
    Coord xmin, xmax, ymin, ymax;
    p.bounding_box(xmin, xmax, ymin, ymax);
    Coord upper = std::max(xmax - xmin, ymax - ymin);  // identity rows reach this

    std::vector<Dir> dirs = directions_within(p, upper);

    // B = smallest max(row widths) over unimodular row pairs.
    Coord bound = upper;
    for (std::size_t i = 0; i < dirs.size(); ++i) {
        if (dirs[i].width >= bound) break;  // sorted by width
        for (std::size_t j = 0; j < dirs.size(); ++j) {
            Coord w = std::max(dirs[i].width, dirs[j].width);
            if (w >= bound) continue;
            Coord d = cross(dirs[i].u, dirs[j].u);
            if (d == 1 || d == -1) bound = w;
        }
    }

    std::vector<LatticePoint> rows;
    for (const auto& d : dirs)
        if (d.width <= bound) {
            rows.push_back(d.u);
            rows.push_back(-d.u);
        }

    bool have = false;
    std::vector<LatticePoint> best;
    UnimodularAffineMap best_map;
    for (auto r1 : rows)
        for (auto r2 : rows) {
            Coord d = cross(r1, r2);
            if (d != 1 && d != -1) continue;
            UnimodularAffineMap m;
            auto verts = mapped_normalized(p, r1, r2, &m);
            if (!have || verts < best) {
                have = true;
                best = std::move(verts);
                best_map = m;
            }
        }
    // At least the pair realizing B qualifies.
    return {LatticePolygon{std::move(best)}, best_map};
}

bool is_equivalent(const LatticePolygon& a, const LatticePolygon& b) {
    if (a.size() != b.size()) return false;
    if (a.twice_area() != b.twice_area()) return false;
    if (boundary_count(a) != boundary_count(b)) return false;
    return canonical_form(a).first == canonical_form(b).first;
}

Hull canonical_hull(const Hull& h) {
    switch (h.kind()) {
        case Hull::Kind::Empty: return h;
        case Hull::Kind::Point: return Hull{LatticePoint{0, 0}};
        case Hull::Kind::Segment: {
            Coord g = edge_lattice_length(h.segment());
            return Hull{LatticeSegment{{0, 0}, {g, 0}}};
        }
        case Hull::Kind::Polygon: return Hull{canonical_form(h.polygon()).first};
    }
    return h;
}

bool is_equivalent(const Hull& a, const Hull& b) {
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
        case Hull::Kind::Empty: return true;
        case Hull::Kind::Point: return true;
        case Hull::Kind::Segment:
            return edge_lattice_length(a.segment()) == edge_lattice_length(b.segment());
        case Hull::Kind::Polygon: return is_equivalent(a.polygon(), b.polygon());
    }
    return false;
}

}  // namespace ndpoly
