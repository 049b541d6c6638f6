#include "ndpoly/loops.hpp"

namespace ndpoly {

bool is_legal_move(LatticePoint v, LatticePoint w) {
    if (v == LatticePoint{0, 0} || w == LatticePoint{0, 0}) return false;
    if (content(v) != 1 || content(w) != 1) return false;
    Coord d = cross(v, w);
    if (d == 0) return false;
    return (d < 0 ? -d : d) == content(w - v);
}

Coord move_length(LatticePoint v, LatticePoint w) {
    if (!is_legal_move(v, w)) throw std::invalid_argument("move_length: not a legal move");
    return cross(v, w);
}

LegalLoop::LegalLoop(std::vector<LatticePoint> vectors) : vecs_(std::move(vectors)) {
    const std::size_t n = vecs_.size();
    if (n < 3) throw std::invalid_argument("LegalLoop: needs at least 3 vectors");
    for (std::size_t i = 0; i < n; ++i) {
        if (!is_legal_move(vecs_[i], vecs_[(i + 1) % n]))
            throw std::invalid_argument("LegalLoop: consecutive pair is not a legal move");
        if (orient(vecs_[(i + n - 1) % n], vecs_[i], vecs_[(i + 1) % n]) == 0)
            throw std::invalid_argument("LegalLoop: three consecutive vectors on a line");
    }
}

Coord loop_length(const LegalLoop& l) {
    Coord s = 0;
    const auto& v = l.vectors();
    for (std::size_t i = 0; i < v.size(); ++i) s += cross(v[i], v[(i + 1) % v.size()]);
    return s;
}

LegalLoop dual_loop(const LegalLoop& l) {
    const auto& v = l.vectors();
    std::vector<LatticePoint> w;
    w.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        LatticePoint d = v[(i + 1) % v.size()] - v[i];
        Coord len = cross(v[i], v[(i + 1) % v.size()]);
        if (d.x % len != 0 || d.y % len != 0)
            throw std::logic_error("dual_loop: inexact division");  // cannot happen for legal moves
        w.push_back({d.x / len, d.y / len});
    }
    return LegalLoop{std::move(w)};
}

Coord winding_number(const LegalLoop& l) {
    const auto& v = l.vectors();
    Coord w = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        LatticePoint a = v[i], b = v[(i + 1) % v.size()];
        if (a.y <= 0 && b.y > 0 && cross(a, b) > 0) ++w;       // upward through x>0
        else if (a.y > 0 && b.y <= 0 && cross(a, b) < 0) --w;  // downward through x>0
    }
    return w;
}

LegalLoop loop_of_polytope(const LatticePolygon& p) {
    Hull h = interior_hull(p);
    if (h.kind() != Hull::Kind::Polygon)
        throw std::invalid_argument("loop_of_polytope: interior hull is not 2-dimensional");
    if (!is_maximal(p)) throw std::invalid_argument("loop_of_polytope: polygon is not maximal");

    const LatticePolygon& inner = h.polygon();
    std::vector<LatticePoint> q;
    q.reserve(inner.size());
    for (std::size_t i = 0; i < inner.size(); ++i) {
        RationalPoint rv = relaxed_vertex(inner, i);
        // Maximality makes every relaxed vertex a lattice point.
        q.push_back(rv.round_exact() - inner.vertex(i));
    }
    return LegalLoop{std::move(q)};
}

TwelveCheck verify_twelve(const LegalLoop& l) {
    TwelveCheck t;
    t.length = loop_length(l);
    t.dual_length = loop_length(dual_loop(l));
    t.winding = winding_number(l);
    t.holds = (t.length + t.dual_length == 12 * t.winding);
    return t;
}

}  // namespace ndpoly
