#include "ndpoly/nondegeneracy.hpp"

#include <algorithm>
#include <limits>

#include "ndpoly/canonical.hpp"
#include "ndpoly/groebner.hpp"

namespace ndpoly {

namespace {

// Unimodular map sending the primitive direction of the edge to (1,0), so the
// edge restriction becomes supported on a horizontal line.
UnimodularAffineMap edge_flattening_map(const LatticeSegment& e) {
    LatticePoint d = e.b - e.a;
    Coord g = content(d);
    d = {d.x / g, d.y / g};
    // Bezout pair a*dx + b*dy = 1 via extended gcd.
    Coord old_r = d.x, r = d.y, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        Coord q = old_r / r;
        Coord tmp = old_r - q * r; old_r = r; r = tmp;
        tmp = old_s - q * s; old_s = s; s = tmp;
        tmp = old_t - q * t; old_t = t; t = tmp;
    }
    if (old_r < 0) { old_s = -old_s; old_t = -old_t; }
    return UnimodularAffineMap{old_s, old_t, -d.y, d.x};
}

// Coefficients of the edge restriction as a univariate polynomial u with
// u(0) != 0, over F_p.
FpPoly edge_univariate(const LaurentPolynomial& f, const Face& tau) {
    LaurentPolynomial r = face_restriction(f, tau);
    UnimodularAffineMap m = edge_flattening_map({tau.points[0], tau.points[1]});
    LaurentPolynomial g = apply_map(m, r);
    Coord lo = std::numeric_limits<Coord>::max(), hi = std::numeric_limits<Coord>::min();
    for (const auto& [e, c] : g.terms()) {
        lo = std::min(lo, e.x);
        hi = std::max(hi, e.x);
    }
    FpPoly u(static_cast<std::size_t>(hi - lo) + 1, 0);
    for (const auto& [e, c] : g.terms()) u[static_cast<std::size_t>(e.x - lo)] = c;
    return fp_trim(std::move(u));
}

std::string point_str(LatticePoint p) {
    return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

FaceVerdict check_edge(const LaurentPolynomial& f, const Face& tau) {
    FaceVerdict v{tau, false, std::nullopt};
    const Fp& fp = f.field();
    FpPoly u = edge_univariate(f, tau);
    FpPoly du = fp_derivative(fp, u);
    if (du.empty()) {
        v.nondegenerate = false;
        v.witness = "edge restriction has identically vanishing derivative";
        return v;
    }
    FpPoly g = fp_gcd(fp, u, du);
    // u(0) != 0 by construction, so any nonconstant gcd has a root in the torus.
    if (g.size() <= 1) {
        v.nondegenerate = true;
    } else {
        v.nondegenerate = false;
        v.witness = "repeated edge root: gcd(u,u') has degree " + std::to_string(g.size() - 1);
    }
    return v;
}

FaceVerdict check_full(const LaurentPolynomial& f_raw, const Face& tau) {
    FaceVerdict v{tau, false, std::nullopt};
    // Verdicts are invariant under unimodular exponent maps, so compute on
    // the canonical embedding; this keeps the completion degrees bounded by
    // the equivalence class instead of the given embedding.
    Hull h = newton_polytope(f_raw);
    LaurentPolynomial f = apply_map(canonical_form(h.polygon()).second, f_raw);
    // Shift to nonnegative exponents (does not change torus zeros).
    Coord sx = 0, sy = 0;
    for (const auto& [e, c] : f.terms()) {
        sx = std::min(sx, e.x);
        sy = std::min(sy, e.y);
    }
    auto shifted = [&](const LaurentPolynomial& g) {
        GPoly out;
        for (const auto& [e, c] : g.terms())
            out[{static_cast<int>(e.x - sx), static_cast<int>(e.y - sy), 0}] = c;
        return out;
    };
    GPoly rab;
    rab[{1, 1, 1}] = 1;
    rab[{0, 0, 0}] = f.field().neg(1);
    bool unit = ideal_is_unit(f.field(),
                              {shifted(f), shifted(f.dx()), shifted(f.dy()), rab});
    v.nondegenerate = unit;
    if (!unit) v.witness = "toric ideal <f, dx f, dy f, xyt-1> is proper";
    return v;
}

}  // namespace

std::pair<bool, std::vector<FaceVerdict>> is_nondegenerate(const LaurentPolynomial& f) {
    Hull h = newton_polytope(f);
    if (h.kind() != Hull::Kind::Polygon)
        throw std::invalid_argument("is_nondegenerate: Newton polytope is not 2-dimensional");
    const LatticePolygon& delta = h.polygon();

    std::vector<FaceVerdict> verdicts;
    bool all = true;
    for (const Face& tau : faces_of(delta)) {
        FaceVerdict v{tau, false, std::nullopt};
        switch (tau.kind) {
            case Face::Kind::Vertex:
                // Vertices of the support hull carry nonzero coefficients.
                v.nondegenerate = f.coeff(tau.points[0]) != 0;
                if (!v.nondegenerate) v.witness = "zero coefficient at vertex " + point_str(tau.points[0]);
                break;
            case Face::Kind::Edge:
                v = check_edge(f, tau);
                break;
            case Face::Kind::Full:
                v = check_full(f, tau);
                break;
        }
        all = all && v.nondegenerate;
        verdicts.push_back(std::move(v));
    }
    return {all, std::move(verdicts)};
}

namespace {

struct FaceSystem {
    // The three restrictions with exponents; y-exponents shifted nonnegative
    // per evaluation (shifting multiplies by a torus unit).
    std::vector<std::pair<LatticePoint, std::int64_t>> g0, g1, g2;
};

FaceSystem face_system(const LaurentPolynomial& f, const Face& tau) {
    FaceSystem s;
    LaurentPolynomial r = face_restriction(f, tau);
    LaurentPolynomial r1 = r.dx(), r2 = r.dy();
    for (const auto& [e, c] : r.terms()) s.g0.push_back({e, c});
    for (const auto& [e, c] : r1.terms()) s.g1.push_back({e, c});
    for (const auto& [e, c] : r2.terms()) s.g2.push_back({e, c});
    return s;
}

// Collapse a restriction to a univariate polynomial in y at a fixed torus x.
ExtPoly collapse_at_x(const ExtField& F, const std::vector<std::pair<LatticePoint, std::int64_t>>& terms,
                      const ExtField::Elt& x, Coord ymin, Coord ymax) {
    ExtPoly u(static_cast<std::size_t>(ymax - ymin) + 1, F.zero());
    for (const auto& [e, c] : terms) {
        ExtField::Elt xe = e.x >= 0 ? F.pow(x, e.x) : F.inv(F.pow(x, -e.x));
        ExtField::Elt t = F.mul(xe, F.from_base(c));
        std::size_t idx = static_cast<std::size_t>(e.y - ymin);
        u[idx] = F.add(u[idx], t);
    }
    return ext_trim(F, std::move(u));
}

// Degree of the gcd after stripping powers of y (roots at 0 are outside the
// torus and do not certify anything).
bool gcd_has_torus_root_possibly(const ExtField& F, const ExtPoly& g) {
    std::size_t k = 0;
    while (k < g.size() && F.is_zero(g[k])) ++k;
    return g.size() - k > 1;  // nonconstant after dividing by y^k
}

}  // namespace

std::optional<TorusSolution> brute_force_face_check(const LaurentPolynomial& f,
                                                    const Face& tau, int m_max) {
    if (m_max < 1) throw std::invalid_argument("brute_force_face_check: m_max >= 1 required");
    FaceSystem sys = face_system(f, tau);
    if (sys.g0.empty()) return std::nullopt;  // empty restriction cannot vanish... (never: faces carry support)

    Coord ymin = std::numeric_limits<Coord>::max(), ymax = std::numeric_limits<Coord>::min();
    for (const auto* part : {&sys.g0, &sys.g1, &sys.g2})
        for (const auto& [e, c] : *part) {
            ymin = std::min(ymin, e.y);
            ymax = std::max(ymax, e.y);
        }
    if (ymin == std::numeric_limits<Coord>::max()) return std::nullopt;

    for (int m = 1; m <= m_max; ++m) {
        ExtField F(f.p(), m);
        for (std::int64_t xi = 1; xi <= F.order_minus_one(); ++xi) {
            ExtField::Elt x = F.from_index(xi);
            ExtPoly u0 = collapse_at_x(F, sys.g0, x, ymin, ymax);
            ExtPoly u1 = collapse_at_x(F, sys.g1, x, ymin, ymax);
            ExtPoly u2 = collapse_at_x(F, sys.g2, x, ymin, ymax);
            // If any collapsed polynomial is a pure monomial in y, no torus y
            // can kill it... unless it is identically zero.
            ExtPoly g = ext_pseudo_gcd(F, u0, ext_pseudo_gcd(F, u1, u2));
            bool may_have_root;
            if (g.empty())
                may_have_root = true;  // all three vanish identically at this x
            else
                may_have_root = gcd_has_torus_root_possibly(F, g);
            if (!may_have_root) continue;
            for (std::int64_t yi = 1; yi <= F.order_minus_one(); ++yi) {
                ExtField::Elt y = F.from_index(yi);
                if (!F.is_zero(ext_eval(F, u0, y))) continue;
                if (!F.is_zero(ext_eval(F, u1, y))) continue;
                if (!F.is_zero(ext_eval(F, u2, y))) continue;
                return TorusSolution{m, x, y};
            }
        }
    }
    return std::nullopt;
}

ConicEA conic_ea(std::int64_t p, std::int64_t c00, std::int64_t c10, std::int64_t c01,
                 std::int64_t c20, std::int64_t c11, std::int64_t c02) {
    if (p == 2) throw std::invalid_argument("conic_ea: p = 2 is rejected");
    Fp fp(p);
    auto r = [&](std::int64_t v) { return fp.reduce(v); };
    c00 = r(c00); c10 = r(c10); c01 = r(c01); c20 = r(c20); c11 = r(c11); c02 = r(c02);

    ConicEA out;
    out.factors[0] = c00;
    out.factors[1] = c02;
    out.factors[2] = c20;
    out.factors[3] = fp.sub(fp.mul(c11, c11), fp.mul(4 % p, fp.mul(c02, c20)));
    out.factors[4] = fp.sub(fp.mul(c10, c10), fp.mul(4 % p, fp.mul(c00, c20)));
    out.factors[5] = fp.sub(fp.mul(c01, c01), fp.mul(4 % p, fp.mul(c00, c02)));
    std::int64_t d = fp.mul(fp.mul(4 % p, c00), fp.mul(c20, c02));
    d = fp.sub(d, fp.mul(c00, fp.mul(c11, c11)));
    d = fp.sub(d, fp.mul(fp.mul(c10, c10), c02));
    d = fp.sub(d, fp.mul(fp.mul(c01, c01), c20));
    d = fp.add(d, fp.mul(c10, fp.mul(c01, c11)));
    out.factors[6] = d;

    out.value = 1;
    for (auto f : out.factors) out.value = fp.mul(out.value, f);
    return out;
}

namespace {

// Binomial coefficients mod p via Pascal's triangle (exponents are small).
std::int64_t binom_mod(const Fp& fp, Coord n, Coord k) {
    if (k < 0 || k > n) return 0;
    std::vector<std::int64_t> row{1};
    for (Coord i = 1; i <= n; ++i) {
        std::vector<std::int64_t> next(static_cast<std::size_t>(i) + 1, 0);
        next[0] = 1;
        for (Coord j = 1; j <= i; ++j)
            next[static_cast<std::size_t>(j)] =
                fp.add(j <= i - 1 ? row[static_cast<std::size_t>(j)] : 0,
                       row[static_cast<std::size_t>(j - 1)]);
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(k)];
}

LaurentPolynomial translate_poly(const LaurentPolynomial& f, std::int64_t x0, std::int64_t y0) {
    const Fp& fp = f.field();
    LaurentPolynomial g(f.p());
    std::int64_t mx = fp.neg(fp.reduce(x0)), my = fp.neg(fp.reduce(y0));
    for (const auto& [e, c] : f.terms()) {
        for (Coord a = 0; a <= e.x; ++a)
            for (Coord b = 0; b <= e.y; ++b) {
                std::int64_t coef = fp.mul(c, fp.mul(binom_mod(fp, e.x, a), binom_mod(fp, e.y, b)));
                coef = fp.mul(coef, fp.mul(fp.pow(mx, e.x - a), fp.pow(my, e.y - b)));
                g.add_term({a, b}, coef);
            }
    }
    return g;
}

}  // namespace

std::optional<std::pair<std::int64_t, std::int64_t>> find_nondegenerate_translation(
    const LaurentPolynomial& f) {
    for (const auto& [e, c] : f.terms())
        if (e.x < 0 || e.y < 0)
            throw std::invalid_argument(
                "find_nondegenerate_translation: support must lie in the nonnegative quadrant");
    if (f.empty()) throw std::invalid_argument("find_nondegenerate_translation: zero polynomial");

    for (std::int64_t x0 = 0; x0 < f.p(); ++x0)
        for (std::int64_t y0 = 0; y0 < f.p(); ++y0) {
            LaurentPolynomial g = translate_poly(f, x0, y0);
            if (g.empty()) continue;
            Hull h = newton_polytope(g);
            if (h.kind() != Hull::Kind::Polygon) continue;
            if (is_nondegenerate(g).first) return std::make_pair(x0, y0);
        }
    return std::nullopt;
}

Coord genus_of_model(const LaurentPolynomial& f) {
    auto [ok, verdicts] = is_nondegenerate(f);
    if (!ok)
        throw std::domain_error("genus_of_model: polynomial is degenerate");
    return genus(newton_polytope(f).polygon());
}

}  // namespace ndpoly
