#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace ndpoly {

bool is_prime(std::int64_t n);

// Prime field F_p, p < 2^16. Elements are int64 values in [0,p).
class Fp {
  public:
    explicit Fp(std::int64_t p) : p_(p) {
        if (p < 2 || p >= (1 << 16) || !is_prime(p))
            throw std::invalid_argument("Fp: modulus must be a prime below 2^16");
    }

    std::int64_t p() const { return p_; }
    std::int64_t reduce(std::int64_t x) const {
        std::int64_t r = x % p_;
        return r < 0 ? r + p_ : r;
    }
    std::int64_t add(std::int64_t a, std::int64_t b) const { return (a + b) % p_; }
    std::int64_t sub(std::int64_t a, std::int64_t b) const { return (a - b + p_) % p_; }
    std::int64_t mul(std::int64_t a, std::int64_t b) const { return (a * b) % p_; }
    std::int64_t neg(std::int64_t a) const { return a == 0 ? 0 : p_ - a; }
    std::int64_t pow(std::int64_t a, std::int64_t e) const;
    std::int64_t inv(std::int64_t a) const {
        if (a == 0) throw std::domain_error("Fp: inverse of zero");
        return pow(a, p_ - 2);
    }

  private:
    std::int64_t p_;
};

// Univariate polynomials over F_p: coefficient vector, ascending degree,
// no trailing zeros (empty = zero polynomial).
using FpPoly = std::vector<std::int64_t>;

FpPoly fp_trim(FpPoly a);
FpPoly fp_add(const Fp& f, const FpPoly& a, const FpPoly& b);
FpPoly fp_mul(const Fp& f, const FpPoly& a, const FpPoly& b);
FpPoly fp_derivative(const Fp& f, const FpPoly& a);
FpPoly fp_mod(const Fp& f, FpPoly a, const FpPoly& b);
FpPoly fp_gcd(const Fp& f, FpPoly a, FpPoly b);  // monic
std::int64_t fp_eval(const Fp& f, const FpPoly& a, std::int64_t x);

// The extension field F_{p^m}, represented as F_p[z] modulo the
// lexicographically smallest monic irreducible of degree m (non-leading
// coefficients compared from z^{m-1} down to z^0). Elements are coefficient
// vectors of length m; their canonical enumeration order treats the vector as
// little-endian base-p digits.
class ExtField {
  public:
    using Elt = std::vector<std::int64_t>;

    ExtField(std::int64_t p, int m);

    const Fp& base() const { return fp_; }
    int degree() const { return m_; }
    std::int64_t order_minus_one() const { return q_ - 1; }
    const FpPoly& modulus() const { return modulus_; }

    Elt zero() const { return Elt(static_cast<std::size_t>(m_), 0); }
    Elt one() const;
    Elt from_base(std::int64_t c) const;
    Elt from_index(std::int64_t idx) const;  // little-endian base-p digits
    std::int64_t to_index(const Elt& a) const;

    bool is_zero(const Elt& a) const;
    Elt add(const Elt& a, const Elt& b) const;
    Elt sub(const Elt& a, const Elt& b) const;
    Elt neg(const Elt& a) const;
    Elt mul(const Elt& a, const Elt& b) const;
    Elt pow(Elt a, std::int64_t e) const;
    Elt inv(const Elt& a) const;

  private:
    Fp fp_;
    int m_;
    std::int64_t q_;
    FpPoly modulus_;
    // x^(m+k) reduced mod the modulus, k = 0..m-2.
    std::vector<Elt> reduction_rows_;
};

// Polynomials over the extension field, ascending degree, trailing zeros trimmed.
using ExtPoly = std::vector<ExtField::Elt>;

ExtPoly ext_trim(const ExtField& F, ExtPoly a);
ExtField::Elt ext_eval(const ExtField& F, const ExtPoly& a, const ExtField::Elt& x);
// gcd up to scalar, via pseudo-remainders (no inversions).
ExtPoly ext_pseudo_gcd(const ExtField& F, ExtPoly a, ExtPoly b);

}  // namespace ndpoly
