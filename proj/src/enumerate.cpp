#include "ndpoly/enumerate.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>

#include "ndpoly/canonical.hpp"

namespace ndpoly {

namespace {

// ---------------------------------------------------------------------------
// Convex chain search.
//
// Every convex lattice polygon, traversed CCW from its (y,x)-minimal vertex,
// lists its edge vectors in strictly increasing angular order (linear order
// cut at angle 0). Conversely any closed chain with strictly increasing edge
// angles traces a convex polygon, so backtracking over such chains inside the
// window enumerates each polygon exactly once.
// ---------------------------------------------------------------------------

inline int angle_half(LatticePoint v) {
    return (v.y > 0 || (v.y == 0 && v.x > 0)) ? 0 : 1;
}

inline bool angle_less(LatticePoint a, LatticePoint b) {
    int ha = angle_half(a), hb = angle_half(b);
    if (ha != hb) return ha < hb;
    return cross(a, b) > 0;
}

inline bool yx_less(LatticePoint a, LatticePoint b) {
    return a.y < b.y || (a.y == b.y && a.x < b.x);
}

struct ChainSearcher {
    const WindowSearchSpec& spec;
    const std::vector<LatticePoint>& win;
    bool exact_mode;

    explicit ChainSearcher(const WindowSearchSpec& s) : spec(s), win(s.window) {
        exact_mode = spec.exact_interior.has_value();
    }

    // Twice the area of the chain closed back to its first vertex.
    static Coord closed_twice_area(const std::vector<LatticePoint>& ch) {
        Wide s = 0;
        for (std::size_t i = 0; i < ch.size(); ++i)
            s += static_cast<Wide>(cross(ch[i], ch[(i + 1) % ch.size()]));
        return static_cast<Coord>(s);
    }

    // Interior lattice points of the closed chain must stay within the
    // constraint; both the subset relation (exact mode) and the count bound
    // are monotone under chain extension.
    bool interior_within_budget(const std::vector<LatticePoint>& ch, Coord& count) const {
        Coord xmin = std::numeric_limits<Coord>::max(), xmax = std::numeric_limits<Coord>::min();
        Coord ymin = xmin, ymax = xmax;
        for (auto v : ch) {
            xmin = std::min(xmin, v.x); xmax = std::max(xmax, v.x);
            ymin = std::min(ymin, v.y); ymax = std::max(ymax, v.y);
        }
        count = 0;
        const std::size_t n = ch.size();
        for (Coord y = ymin + 1; y < ymax; ++y)
            for (Coord x = xmin + 1; x < xmax; ++x) {
                LatticePoint q{x, y};
                bool strict = true;
                for (std::size_t i = 0; i < n && strict; ++i)
                    if (orient(ch[i], ch[(i + 1) % n], q) <= 0) strict = false;
                if (!strict) continue;
                ++count;
                if (exact_mode) {
                    const auto& t = *spec.exact_interior;
                    if (!std::binary_search(t.begin(), t.end(), q)) return false;
                } else if (count > spec.interior_count) {
                    return false;
                }
            }
        return true;
    }

    bool edge_clears_targets(LatticePoint a, LatticePoint b) const {
        if (!exact_mode) return true;
        // Target points end up strictly inside the final polygon, so every
        // committed edge must keep all of them strictly to its left.
        for (auto t : *spec.exact_interior)
            if (orient(a, b, t) <= 0) return false;
        return true;
    }

    void emit_if_valid(const std::vector<LatticePoint>& ch,
                       std::vector<LatticePolygon>& out) const {
        Coord cnt = 0;
        if (!interior_within_budget(ch, cnt)) return;
        if (exact_mode) {
            if (cnt != static_cast<Coord>(spec.exact_interior->size())) return;
        } else {
            if (cnt != spec.interior_count) return;
        }
        if (spec.normalize_translation) {
            Coord xmin = std::numeric_limits<Coord>::max(), ymin = xmin;
            for (auto v : ch) { xmin = std::min(xmin, v.x); ymin = std::min(ymin, v.y); }
            if (xmin != 0 || ymin != 0) return;
        }
        out.push_back(LatticePolygon{ch});
    }

    void extend(std::vector<LatticePoint>& ch, std::vector<LatticePolygon>& out) const {
        const LatticePoint v0 = ch.front();
        const LatticePoint last = ch.back();
        const LatticePoint prev_edge = last - ch[ch.size() - 2];

        if (ch.size() >= 3 && angle_less(prev_edge, v0 - last)) emit_if_valid(ch, out);

        for (auto w : win) {
            if (!yx_less(v0, w)) continue;
            LatticePoint e = w - last;
            if (e == LatticePoint{0, 0}) continue;
            if (!angle_less(prev_edge, e)) continue;
            if (!edge_clears_targets(last, w)) continue;
            ch.push_back(w);
            Coord a2 = closed_twice_area(ch);
            Coord cnt = 0;
            if (a2 <= spec.max_twice_area && interior_within_budget(ch, cnt))
                extend(ch, out);
            ch.pop_back();
        }
    }

    void from_start(std::size_t i0, std::vector<LatticePolygon>& out) const {
        const LatticePoint v0 = win[i0];
        if (spec.normalize_translation && v0.y != 0) return;
        if (exact_mode) {
            const auto& t = *spec.exact_interior;
            if (std::binary_search(t.begin(), t.end(), v0)) return;
            // v0 is the (y,x)-minimum, so every target point must be above
            // or right of it.
            for (auto tp : t)
                if (!yx_less(v0, tp)) return;
        }
        std::vector<LatticePoint> ch{v0};
        for (auto w : win) {
            if (!yx_less(v0, w)) continue;
            if (!edge_clears_targets(v0, w)) continue;
            ch.push_back(w);
            extend(ch, out);
            ch.pop_back();
        }
    }
};

}  // namespace

std::vector<LatticePolygon> search_window_polygons(const WindowSearchSpec& spec,
                                                   bool parallel) {
    WindowSearchSpec s = spec;
    std::sort(s.window.begin(), s.window.end());
    s.window.erase(std::unique(s.window.begin(), s.window.end()), s.window.end());
    if (s.exact_interior) {
        std::sort(s.exact_interior->begin(), s.exact_interior->end());
        // Interior points are never polygon vertices.
        std::erase_if(s.window, [&](LatticePoint p) {
            return std::binary_search(s.exact_interior->begin(), s.exact_interior->end(), p);
        });
    }

    ChainSearcher searcher(s);
    const std::size_t n = s.window.size();
    std::vector<std::vector<LatticePolygon>> per_start(n);

    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::size_t i = 0; i < n; ++i) searcher.from_start(i, per_start[i]);
    } else {
        for (std::size_t i = 0; i < n; ++i) searcher.from_start(i, per_start[i]);
    }

    // Merge in start order so the output is independent of scheduling.
    std::vector<LatticePolygon> out;
    for (auto& chunk : per_start)
        for (auto& p : chunk) out.push_back(std::move(p));
    return out;
}

namespace {

// Scott's inequality: a convex lattice polygon with g >= 1 interior points
// has at most 2g+7 boundary points, so twice its area is at most 4g+5.
Coord max_twice_area_for_genus(Coord g) { return 4 * g + 5; }

bool corpus_order(const LatticePolygon& a, const LatticePolygon& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.vertices() < b.vertices();
}

std::vector<LatticePolygon> dedupe_canonical(const std::vector<LatticePolygon>& raw) {
    std::map<std::vector<LatticePoint>, LatticePolygon> seen;
    for (const auto& p : raw) {
        auto canon = canonical_form(p).first;
        seen.emplace(canon.vertices(), canon);
    }
    std::vector<LatticePolygon> out;
    out.reserve(seen.size());
    for (auto& [k, v] : seen) out.push_back(std::move(v));
    std::sort(out.begin(), out.end(), corpus_order);
    return out;
}

std::vector<LatticePoint> box_window(Coord x0, Coord x1, Coord y0, Coord y1) {
    std::vector<LatticePoint> w;
    for (Coord y = y0; y <= y1; ++y)
        for (Coord x = x0; x <= x1; ++x) w.push_back({x, y});
    return w;
}

// All polygons whose interior lattice points are exactly the collinear strip
// (0,1)..(g-1,1); covers every hyperelliptic class and, for g = 1, every
// class. Window per the validated search box.
std::vector<LatticePolygon> strip_search(Coord g, bool parallel) {
    WindowSearchSpec spec;
    spec.window = box_window(-2, 2 * g + 4, -2, 4);
    std::vector<LatticePoint> target;
    for (Coord i = 0; i < g; ++i) target.push_back({i, 1});
    spec.exact_interior = std::move(target);
    spec.max_twice_area = max_twice_area_for_genus(g);
    return search_window_polygons(spec, parallel);
}

// All polygons inside relax(c) whose interior lattice points are exactly the
// lattice points of c. Empty when c has no lattice relaxation (then c is not
// the interior hull of anything).
std::vector<LatticePolygon> polygons_with_interior_hull(const LatticePolygon& c,
                                                        bool parallel) {
    auto relaxed = relax(c);
    if (!relaxed) return {};
    WindowSearchSpec spec;
    spec.window = lattice_points(*relaxed);
    spec.exact_interior = lattice_points(c);
    Coord g = static_cast<Coord>(spec.exact_interior->size());
    spec.max_twice_area = max_twice_area_for_genus(g);
    return search_window_polygons(spec, parallel);
}

GenusCorpus hull_recursion_corpus(Coord g, const EnumerateOptions& opts);

// Candidate interior hulls for genus g: every polygon class with exactly g
// lattice points in total. Genus-0 classes come from the width-1 normal form
// (trapezoids with sheared-away offset) plus 2*Sigma; positive-genus classes
// from the recursively enumerated corpora.
std::vector<LatticePolygon> two_dim_interior_candidates(Coord g, const EnumerateOptions& opts) {
    std::vector<LatticePolygon> out;
    for (Coord p = 1; p <= g - 2; ++p) {
        Coord q = g - 2 - p;
        if (q > p) continue;
        std::vector<LatticePoint> vs{{0, 0}, {p, 0}, {0, 1}};
        if (q >= 1) vs = {{0, 0}, {p, 0}, {q, 1}, {0, 1}};
        out.push_back(LatticePolygon{vs});
    }
    if (g == 6)
        out.push_back(LatticePolygon{{{0, 0}, {2, 0}, {0, 2}}});
    for (Coord gp = 1; gp <= g - 3; ++gp) {
        GenusCorpus corpus = hull_recursion_corpus(gp, opts);
        for (const auto& cls : corpus.classes)
            if (static_cast<Coord>(lattice_points(cls).size()) == g) out.push_back(cls);
    }
    return out;
}

GenusCorpus hull_recursion_uncached(Coord g, const EnumerateOptions& opts) {
    std::vector<LatticePolygon> raw = strip_search(g, opts.parallel);
    if (g >= 3) {
        for (const auto& cand : two_dim_interior_candidates(g, opts)) {
            auto found = polygons_with_interior_hull(cand, opts.parallel);
            raw.insert(raw.end(), found.begin(), found.end());
        }
    }
    GenusCorpus corpus;
    corpus.genus = g;
    corpus.classes = dedupe_canonical(raw);
    corpus.provenance = "hull_recursion";
    return corpus;
}

GenusCorpus hull_recursion_corpus(Coord g, const EnumerateOptions& opts) {
    static std::mutex mu;
    static std::map<Coord, GenusCorpus> cache;
    if (opts.use_cache) {
        std::scoped_lock lock(mu);
        auto it = cache.find(g);
        if (it != cache.end()) return it->second;
    }
    GenusCorpus corpus = hull_recursion_uncached(g, opts);
    if (!opts.use_cache) return corpus;
    std::scoped_lock lock(mu);
    return cache.emplace(g, std::move(corpus)).first->second;
}

GenusCorpus bounded_box_corpus(Coord g, const EnumerateOptions& opts) {
    WindowSearchSpec spec;
    spec.window = box_window(0, 2 * g + 4, 0, 2 * g + 4);
    spec.interior_count = g;
    spec.max_twice_area = max_twice_area_for_genus(g);
    spec.normalize_translation = true;
    auto raw = search_window_polygons(spec, opts.parallel);
    GenusCorpus corpus;
    corpus.genus = g;
    corpus.classes = dedupe_canonical(raw);
    corpus.provenance = "bounded_box";
    return corpus;
}

}  // namespace

GenusCorpus enumerate_by_genus(Coord g, EnumMethod method, const EnumerateOptions& opts) {
    if (g == 0)
        throw std::invalid_argument(
            "enumerate_by_genus: genus 0 is excluded (infinitely many classes, "
            "e.g. the width-1 strips)");
    if (g < 0) throw std::invalid_argument("enumerate_by_genus: negative genus");
    if (method == EnumMethod::BoundedBox) {
        if (g > kMaxBoundedBoxGenus)
            throw std::invalid_argument("enumerate_by_genus: bounded_box oracle supports g <= " +
                                        std::to_string(kMaxBoundedBoxGenus));
        return bounded_box_corpus(g, opts);
    }
    if (g > kMaxEnumerationGenus)
        throw std::invalid_argument("enumerate_by_genus: genus above implementation limit " +
                                    std::to_string(kMaxEnumerationGenus));
    return hull_recursion_corpus(g, opts);
}

std::vector<LatticePolygon> exceptional_g1_polytopes(const EnumerateOptions& opts) {
    GenusCorpus g1 = enumerate_by_genus(1, EnumMethod::HullRecursion, opts);
    std::vector<LatticePolygon> raw;
    for (const auto& c : g1.classes) {
        Coord g = static_cast<Coord>(lattice_points(c).size());
        for (const auto& q : polygons_with_interior_hull(c, opts.parallel))
            if (m_bound(q) == 2 * g + 2) raw.push_back(q);
    }
    return dedupe_canonical(raw);
}

std::vector<ModuliRow> moduli_table(Coord g_max, const EnumerateOptions& opts) {
    if (g_max < 2 || g_max > kMaxEnumerationGenus)
        throw std::invalid_argument("moduli_table: g_max out of range");
    std::vector<ModuliRow> rows;
    for (Coord g = 2; g <= g_max; ++g) {
        ModuliRow row;
        row.g = g;
        row.hyperelliptic_dim = 2 * g - 1;
        row.claimed_dim = (g == 7) ? 16 : std::min(2 * g + 1, 3 * g - 3);
        GenusCorpus corpus = enumerate_by_genus(g, EnumMethod::HullRecursion, opts);
        Coord best = std::numeric_limits<Coord>::min();
        for (const auto& cls : corpus.classes) {
            if (is_hyperelliptic_polytope(cls) || !is_maximal(cls)) continue;
            Coord m = m_bound(cls);
            if (m > best) {
                best = m;
                row.witnesses.clear();
            }
            if (m == best) row.witnesses.push_back(cls);
        }
        if (best != std::numeric_limits<Coord>::min()) row.max_m_maximal_nonhyp = best;
        rows.push_back(std::move(row));
    }
    return rows;
}

Genus0Class genus0_classifier(const LatticePolygon& p) {
    if (genus(p) != 0) throw std::invalid_argument("genus0_classifier: genus must be 0");
    LatticePolygon two_sigma{{{0, 0}, {2, 0}, {0, 2}}};
    if (is_equivalent(p, two_sigma)) return Genus0Class::MultipleOf2Sigma;
    if (lattice_width(p) <= 1) return Genus0Class::WidthLE1;
    return Genus0Class::Neither;
}

}  // namespace ndpoly
