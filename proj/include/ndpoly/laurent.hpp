#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ndpoly/fp.hpp"
#include "ndpoly/polygon.hpp"

namespace ndpoly {

// Finitely supported coefficient map (i,j) -> c_ij over F_p; zero
// coefficients are never stored.
class LaurentPolynomial {
  public:
    explicit LaurentPolynomial(std::int64_t p) : fp_(p) {}

    std::int64_t p() const { return fp_.p(); }
    const Fp& field() const { return fp_; }
    const std::map<LatticePoint, std::int64_t>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    std::int64_t coeff(LatticePoint e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? 0 : it->second;
    }

    void add_term(LatticePoint e, std::int64_t c) {
        std::int64_t v = fp_.add(coeff(e), fp_.reduce(c));
        if (v == 0) terms_.erase(e);
        else terms_[e] = v;
    }

    std::vector<LatticePoint> support() const {
        std::vector<LatticePoint> s;
        s.reserve(terms_.size());
        for (const auto& [e, c] : terms_) s.push_back(e);
        return s;
    }

    // x d/dx: multiplies each coefficient by its x-exponent (support stays in
    // the Newton polytope).
    LaurentPolynomial dx() const {
        LaurentPolynomial d(p());
        for (const auto& [e, c] : terms_) d.add_term(e, fp_.mul(fp_.reduce(e.x), c));
        return d;
    }
    LaurentPolynomial dy() const {
        LaurentPolynomial d(p());
        for (const auto& [e, c] : terms_) d.add_term(e, fp_.mul(fp_.reduce(e.y), c));
        return d;
    }

    // Text grammar: "p=<prime>;" then ";"-separated terms "<coeff>:<i>,<j>".
    // Whitespace is insignificant; duplicate exponent pairs are summed.
    static LaurentPolynomial parse(const std::string& text);
    std::string to_text() const;

    friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&);

  private:
    Fp fp_;
    std::map<LatticePoint, std::int64_t> terms_;
};

inline bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.p() == b.p() && a.terms_ == b.terms_;
}

// Convex hull of the support, dimension-classified. Rejects the zero polynomial.
Hull newton_polytope(const LaurentPolynomial& f);

// A face of the Newton polytope: a vertex, an edge, or the whole polygon.
struct Face {
    enum class Kind { Vertex, Edge, Full };
    Kind kind = Kind::Full;
    std::vector<LatticePoint> points;  // 1 point, 2 endpoints, or the vertex list

    static Face vertex(LatticePoint v) { return {Kind::Vertex, {v}}; }
    static Face edge(LatticePoint a, LatticePoint b) { return {Kind::Edge, {a, b}}; }
    static Face full(const std::vector<LatticePoint>& verts) { return {Kind::Full, verts}; }
};

// All faces of a 2-dimensional Newton polytope: vertices, edges, and the
// polygon itself.
std::vector<Face> faces_of(const LatticePolygon& delta);

// f|_tau: the coefficient map restricted to the face. Throws when tau is not
// a face of the Newton polytope of f.
LaurentPolynomial face_restriction(const LaurentPolynomial& f, const Face& tau);

// Exponent transformation e -> A e + b; preserves nondegeneracy verdicts.
LaurentPolynomial apply_map(const UnimodularAffineMap& m, const LaurentPolynomial& f);

}  // namespace ndpoly
