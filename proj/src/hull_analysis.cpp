#include "ndpoly/hull_analysis.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace ndpoly {

std::vector<FacetInequality> facet_inequalities(const LatticePolygon& p) {
    std::vector<FacetInequality> out;
    out.reserve(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        LatticePoint d = p.vertex(i + 1) - p.vertex(i);
        LatticePoint n{d.y, -d.x};  // outward for CCW
        Coord g = content(n);
        n = {n.x / g, n.y / g};
        out.push_back({n, dot(n, p.vertex(i))});
    }
    return out;
}

Hull interior_hull(const LatticePolygon& p) {
    return convex_hull(interior_lattice_points(p));
}

namespace {

int rational_orient_sign(const RationalPoint& a, const RationalPoint& b,
                         const RationalPoint& c) {
    Rational v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return v.sign();
}

// Clip a convex rational polygon against <n,p> <= rhs (Sutherland-Hodgman).
std::vector<RationalPoint> clip_halfplane(const std::vector<RationalPoint>& poly,
                                          LatticePoint n, Coord rhs) {
    std::vector<RationalPoint> out;
    auto val = [&](const RationalPoint& q) {
        return q.x * Rational{n.x} + q.y * Rational{n.y} - Rational{rhs};
    };
    const std::size_t m = poly.size();
    for (std::size_t i = 0; i < m; ++i) {
        const RationalPoint& a = poly[i];
        const RationalPoint& b = poly[(i + 1) % m];
        Rational va = val(a), vb = val(b);
        bool ain = va.sign() <= 0, bin = vb.sign() <= 0;
        if (ain) out.push_back(a);
        if (ain != bin) {
            Rational t = va / (va - vb);
            out.push_back({a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)});
        }
    }
    return out;
}

std::vector<RationalPoint> dedupe_and_declutter(std::vector<RationalPoint> poly) {
    auto drop_dups = [](std::vector<RationalPoint>& q) {
        std::vector<RationalPoint> r;
        for (const auto& p : q)
            if (r.empty() || !(r.back() == p)) r.push_back(p);
        if (r.size() > 1 && r.front() == r.back()) r.pop_back();
        q = std::move(r);
    };
    drop_dups(poly);
    // Remove collinear middles.
    bool changed = true;
    while (changed && poly.size() >= 3) {
        changed = false;
        for (std::size_t i = 0; i < poly.size(); ++i) {
            const auto& a = poly[(i + poly.size() - 1) % poly.size()];
            const auto& b = poly[i];
            const auto& c = poly[(i + 1) % poly.size()];
            if (rational_orient_sign(a, b, c) == 0) {
                poly.erase(poly.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
        }
    }
    return poly;
}

}  // namespace

namespace {

// Integer box covering the region { <n,x> <= rhs + slack for all facets }.
// Every vertex of that region is an intersection of two of the shifted facet
// lines (not necessarily adjacent: near-parallel facets send their
// intersection far away), so the box spanning all pairwise intersections
// bounds the region.
void relaxed_region_box(const LatticePolygon& p, const std::vector<FacetInequality>& facets,
                        Coord slack, Coord& xmin, Coord& xmax, Coord& ymin, Coord& ymax) {
    p.bounding_box(xmin, xmax, ymin, ymax);
    auto floor_div = [](Coord a, Coord b) {
        Coord q = a / b;
        return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
    };
    const std::size_t n = facets.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Coord d = cross(facets[i].normal, facets[j].normal);
            if (d == 0) continue;
            Coord xn = (facets[i].rhs + slack) * facets[j].normal.y -
                       (facets[j].rhs + slack) * facets[i].normal.y;
            Coord yn = (facets[j].rhs + slack) * facets[i].normal.x -
                       (facets[i].rhs + slack) * facets[j].normal.x;
            xmin = std::min(xmin, floor_div(xn, d));
            xmax = std::max(xmax, floor_div(xn, d) + 1);
            ymin = std::min(ymin, floor_div(yn, d));
            ymax = std::max(ymax, floor_div(yn, d) + 1);
        }
}

}  // namespace

std::optional<LatticePolygon> relax(const LatticePolygon& p) {
    auto facets = facet_inequalities(p);
    const std::size_t n = facets.size();

    // Adjacent relaxed facet lines must meet in lattice points.
    for (std::size_t i = 0; i < n; ++i) {
        const auto& f1 = facets[i];
        const auto& f2 = facets[(i + 1) % n];
        Coord d = cross(f1.normal, f2.normal);
        Coord xn = (f1.rhs + 1) * f2.normal.y - (f2.rhs + 1) * f1.normal.y;
        Coord yn = (f2.rhs + 1) * f1.normal.x - (f1.rhs + 1) * f2.normal.x;
        if (xn % d != 0 || yn % d != 0) return std::nullopt;
    }

    Coord xmin, xmax, ymin, ymax;
    relaxed_region_box(p, facets, 1, xmin, xmax, ymin, ymax);
    std::vector<RationalPoint> region{{Rational{xmin - 2}, Rational{ymin - 2}},
                                      {Rational{xmax + 2}, Rational{ymin - 2}},
                                      {Rational{xmax + 2}, Rational{ymax + 2}},
                                      {Rational{xmin - 2}, Rational{ymax + 2}}};
    for (const auto& f : facets) region = clip_halfplane(region, f.normal, f.rhs + 1);
    region = dedupe_and_declutter(std::move(region));

    if (region.size() < 3) return std::nullopt;
    std::vector<LatticePoint> verts;
    verts.reserve(region.size());
    for (const auto& q : region) {
        if (!q.is_lattice()) return std::nullopt;
        verts.push_back(q.round_exact());
    }
    return LatticePolygon{std::move(verts)};
}

RationalPoint relaxed_vertex(const LatticePolygon& p, std::size_t i) {
    if (i >= p.size()) throw std::invalid_argument("relaxed_vertex: bad vertex index");
    auto facets = facet_inequalities(p);
    const auto& f_in = facets[(i + p.size() - 1) % p.size()];  // edge ending at vertex i
    const auto& f_out = facets[i];                             // edge starting at vertex i
    Coord d = cross(f_in.normal, f_out.normal);
    Coord xn = (f_in.rhs + 1) * f_out.normal.y - (f_out.rhs + 1) * f_in.normal.y;
    Coord yn = (f_out.rhs + 1) * f_in.normal.x - (f_in.rhs + 1) * f_out.normal.x;
    return {Rational{xn, d}, Rational{yn, d}};
}

namespace {

bool interior_points_equal(const LatticePolygon& q, const std::vector<LatticePoint>& sorted_target) {
    auto ip = interior_lattice_points(q);
    std::sort(ip.begin(), ip.end());
    return ip == sorted_target;
}

// Definition-level maximality test: try every augmentation point in the
// region bounded by all facet inequalities relaxed by 2 (relax-by-1 plus a
// safety margin of 1); maximal iff each one changes the interior point set.
bool is_maximal_definitional(const LatticePolygon& p) {
    auto facets = facet_inequalities(p);
    auto target = interior_lattice_points(p);
    std::sort(target.begin(), target.end());

    Coord xmin, xmax, ymin, ymax;
    relaxed_region_box(p, facets, 2, xmin, xmax, ymin, ymax);
    auto pts = lattice_points(p);
    for (Coord y = ymin - 2; y <= ymax + 2; ++y)
        for (Coord x = xmin - 2; x <= xmax + 2; ++x) {
            LatticePoint q{x, y};
            if (p.contains(q)) continue;
            bool in_window = true;
            for (const auto& f : facets)
                if (dot(f.normal, q) > f.rhs + 2) { in_window = false; break; }
            if (!in_window) continue;
            std::vector<LatticePoint> aug = pts;
            aug.push_back(q);
            Hull h = convex_hull(std::move(aug));
            if (interior_points_equal(h.polygon(), target)) return false;
        }
    return true;
}

}  // namespace

bool is_maximal(const LatticePolygon& p) {
    Hull h = interior_hull(p);
    if (h.empty()) throw std::invalid_argument("is_maximal: genus 0 input");
    if (h.kind() == Hull::Kind::Polygon) {
        auto r = relax(h.polygon());
        return r.has_value() && *r == p;
    }
    return is_maximal_definitional(p);
}

std::vector<ColumnVector> column_vectors(const LatticePolygon& p) {
    auto facets = facet_inequalities(p);
    auto pts = lattice_points(p);

    std::map<LatticePoint, std::vector<std::size_t>> found;
    for (std::size_t fi = 0; fi < facets.size(); ++fi) {
        const auto& f = facets[fi];
        std::vector<LatticePoint> on_facet, level1, off_facet;
        for (auto q : pts) {
            Coord lvl = f.rhs - dot(f.normal, q);
            if (lvl == 0) on_facet.push_back(q);
            else {
                off_facet.push_back(q);
                if (lvl == 1) level1.push_back(q);
            }
        }
        // A column vector with this base facet satisfies <n,v> = 1 and maps
        // every depth-1 point onto the facet, so v = s - u exhausts candidates.
        std::vector<LatticePoint> cands;
        for (auto s : on_facet)
            for (auto u : level1) cands.push_back(s - u);
        std::sort(cands.begin(), cands.end());
        cands.erase(std::unique(cands.begin(), cands.end()), cands.end());

        for (auto v : cands) {
            if (v == LatticePoint{0, 0}) continue;
            bool ok = true;
            for (auto q : off_facet)
                if (!p.contains(q + v)) { ok = false; break; }
            if (ok) found[v].push_back(fi);
        }
    }

    std::vector<ColumnVector> out;
    out.reserve(found.size());
    for (auto& [v, fs] : found) out.push_back({v, std::move(fs)});
    return out;
}

Coord m_bound(const LatticePolygon& p) {
    Coord na = static_cast<Coord>(lattice_points(p).size());
    Coord c = static_cast<Coord>(column_vectors(p).size());
    return na - c - 3;
}

Coord dim_aut(const LatticePolygon& p) {
    return static_cast<Coord>(column_vectors(p).size()) + 2;
}

bool is_hyperelliptic_polytope(const LatticePolygon& p) {
    auto ip = interior_lattice_points(p);
    if (ip.size() < 2)
        throw std::invalid_argument("is_hyperelliptic_polytope: needs genus >= 2");
    for (std::size_t i = 2; i < ip.size(); ++i)
        if (orient(ip[0], ip[1], ip[i]) != 0) return false;
    return true;
}

Coord koelman_dim(const LatticePolygon& p) {
    Coord g = genus(p);
    if (g < 2 || is_hyperelliptic_polytope(p))
        throw std::invalid_argument("koelman_dim: input is hyperelliptic");
    if (!is_maximal(p)) throw std::invalid_argument("koelman_dim: input is not maximal");
    Coord na = static_cast<Coord>(lattice_points(p).size());
    return na - 1 - dim_aut(p);
}

Genus4Arrangement classify_genus4_hull(const LatticePolygon& p) {
    auto ip = interior_lattice_points(p);
    if (ip.size() != 4) throw std::invalid_argument("classify_genus4_hull: genus must be 4");
    Hull h = convex_hull(ip);
    if (h.kind() != Hull::Kind::Polygon)
        throw std::invalid_argument("classify_genus4_hull: interior points are collinear");

    static const std::array<std::pair<Genus4Arrangement, std::vector<LatticePoint>>, 3> refs{{
        {Genus4Arrangement::A, {{0, 0}, {1, 0}, {0, 1}, {1, 1}}},
        {Genus4Arrangement::B, {{0, 0}, {1, 0}, {2, 0}, {0, 1}}},
        {Genus4Arrangement::C, {{0, 1}, {1, 1}, {1, 2}, {2, 0}}},
    }};
    for (const auto& [tag, ref_pts] : refs) {
        Hull ref = convex_hull(ref_pts);
        if (is_equivalent(h.polygon(), ref.polygon())) return tag;
    }
    throw std::logic_error("classify_genus4_hull: configuration matches no arrangement");
}

PolygonReport analyze(const LatticePolygon& p) {
    PolygonReport rep;
    auto pts = lattice_points(p);
    Hull h = interior_hull(p);
    rep.genus = h.lattice_point_count();
    rep.r = boundary_count(p);
    rep.r1 = h.boundary_point_count();
    rep.g1 = h.interior_point_count();
    rep.c = static_cast<Coord>(column_vectors(p).size());
    rep.m = static_cast<Coord>(pts.size()) - rep.c - 3;
    rep.dim_aut = rep.c + 2;
    rep.dim_M_Delta_upper = static_cast<Coord>(pts.size()) - 1;
    if (rep.genus >= 1) rep.is_maximal = is_maximal(p);
    if (rep.genus >= 2) rep.is_hyperelliptic = is_hyperelliptic_polytope(p);
    if (rep.is_maximal.value_or(false) && rep.is_hyperelliptic.has_value() &&
        !*rep.is_hyperelliptic)
        rep.koelman_dim = static_cast<Coord>(pts.size()) - 1 - rep.dim_aut;
    return rep;
}

}  // namespace ndpoly
