#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ndpoly {

using Coord = std::int64_t;
using Wide = __int128;

struct LatticePoint {
    Coord x = 0;
    Coord y = 0;

    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;

    LatticePoint operator+(LatticePoint o) const { return {x + o.x, y + o.y}; }
    LatticePoint operator-(LatticePoint o) const { return {x - o.x, y - o.y}; }
    LatticePoint operator-() const { return {-x, -y}; }
    LatticePoint operator*(Coord k) const { return {k * x, k * y}; }
};

inline Coord cross(LatticePoint a, LatticePoint b) { return a.x * b.y - a.y * b.x; }
inline Coord dot(LatticePoint a, LatticePoint b) { return a.x * b.x + a.y * b.y; }

// cross(b-a, c-a): >0 iff a,b,c make a left turn.
inline Coord orient(LatticePoint a, LatticePoint b, LatticePoint c) {
    return cross(b - a, c - a);
}

inline Coord abs_gcd(Coord a, Coord b) {
    return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

inline Coord content(LatticePoint v) { return abs_gcd(v.x, v.y); }
inline bool is_primitive(LatticePoint v) { return content(v) == 1; }

struct LatticeSegment {
    LatticePoint a, b;

    LatticeSegment(LatticePoint a_, LatticePoint b_) : a(a_), b(b_) {
        if (a == b) throw std::invalid_argument("LatticeSegment: endpoints must be distinct");
    }
    friend bool operator==(const LatticeSegment&, const LatticeSegment&) = default;
};

// gcd of the coordinate differences; the segment carries this+1 lattice points.
inline Coord edge_lattice_length(const LatticeSegment& s) { return content(s.b - s.a); }

inline bool segment_contains(const LatticeSegment& s, LatticePoint p) {
    if (orient(s.a, s.b, p) != 0) return false;
    return dot(p - s.a, p - s.b) <= 0;
}

// v |-> A v + b with A in GL2(Z).
struct UnimodularAffineMap {
    Coord a11 = 1, a12 = 0, a21 = 0, a22 = 1;
    Coord b1 = 0, b2 = 0;

    UnimodularAffineMap() = default;
    UnimodularAffineMap(Coord m11, Coord m12, Coord m21, Coord m22, Coord t1 = 0, Coord t2 = 0)
        : a11(m11), a12(m12), a21(m21), a22(m22), b1(t1), b2(t2) {
        if (det() != 1 && det() != -1)
            throw std::invalid_argument("UnimodularAffineMap: |det A| must be 1");
    }

    Coord det() const { return a11 * a22 - a12 * a21; }

    LatticePoint operator()(LatticePoint p) const {
        return {a11 * p.x + a12 * p.y + b1, a21 * p.x + a22 * p.y + b2};
    }

    // Linear part only, for direction vectors.
    LatticePoint linear(LatticePoint v) const {
        return {a11 * v.x + a12 * v.y, a21 * v.x + a22 * v.y};
    }

    static UnimodularAffineMap identity() { return {}; }
    static UnimodularAffineMap translation(Coord tx, Coord ty) { return {1, 0, 0, 1, tx, ty}; }

    // this after other: (this*other)(p) = this(other(p)).
    UnimodularAffineMap compose(const UnimodularAffineMap& o) const {
        UnimodularAffineMap r;
        r.a11 = a11 * o.a11 + a12 * o.a21;
        r.a12 = a11 * o.a12 + a12 * o.a22;
        r.a21 = a21 * o.a11 + a22 * o.a21;
        r.a22 = a21 * o.a12 + a22 * o.a22;
        LatticePoint t = (*this)({o.b1, o.b2});
        r.b1 = t.x;
        r.b2 = t.y;
        return r;
    }

    UnimodularAffineMap inverse() const {
        Coord d = det();  // +1 or -1
        UnimodularAffineMap r;
        r.a11 = a22 * d;
        r.a12 = -a12 * d;
        r.a21 = -a21 * d;
        r.a22 = a11 * d;
        r.b1 = -(r.a11 * b1 + r.a12 * b2);
        r.b2 = -(r.a21 * b1 + r.a22 * b2);
        return r;
    }

    friend bool operator==(const UnimodularAffineMap&, const UnimodularAffineMap&) = default;
};

// Exact rational with reduced representation, denominator > 0. Only used for
// small intersection computations (relaxed vertices, half-plane clipping).
struct Rational {
    Coord num = 0;
    Coord den = 1;

    Rational() = default;
    Rational(Coord n) : num(n), den(1) {}
    Rational(Coord n, Coord d) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        reduce();
    }

    void reduce() {
        if (den < 0) { num = -num; den = -den; }
        Coord g = abs_gcd(num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    bool is_integer() const { return den == 1; }

    Rational operator+(Rational o) const { return {num * o.den + o.num * den, den * o.den}; }
    Rational operator-(Rational o) const { return {num * o.den - o.num * den, den * o.den}; }
    Rational operator*(Rational o) const { return {num * o.num, den * o.den}; }
    Rational operator/(Rational o) const {
        if (o.num == 0) throw std::invalid_argument("Rational: division by zero");
        return {num * o.den, den * o.num};
    }
    friend bool operator==(const Rational&, const Rational&) = default;
    int sign() const { return num > 0 ? 1 : num < 0 ? -1 : 0; }
};

struct RationalPoint {
    Rational x, y;
    friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
    bool is_lattice() const { return x.is_integer() && y.is_integer(); }
    LatticePoint round_exact() const {
        if (!is_lattice()) throw std::logic_error("RationalPoint: not a lattice point");
        return {x.num, y.num};
    }
};

inline std::string to_string(LatticePoint p) {
    return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

}  // namespace ndpoly
