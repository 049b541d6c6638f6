#include "ndpoly/fp.hpp"

#include <algorithm>

namespace ndpoly {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::int64_t Fp::pow(std::int64_t a, std::int64_t e) const {
    a = reduce(a);
    std::int64_t r = 1;
    while (e > 0) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

FpPoly fp_trim(FpPoly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

FpPoly fp_add(const Fp& f, const FpPoly& a, const FpPoly& b) {
    FpPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::int64_t v = 0;
        if (i < a.size()) v = f.add(v, a[i]);
        if (i < b.size()) v = f.add(v, b[i]);
        r[i] = v;
    }
    return fp_trim(std::move(r));
}

FpPoly fp_mul(const Fp& f, const FpPoly& a, const FpPoly& b) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
    return fp_trim(std::move(r));
}

FpPoly fp_derivative(const Fp& f, const FpPoly& a) {
    if (a.size() <= 1) return {};
    FpPoly r(a.size() - 1, 0);
    for (std::size_t i = 1; i < a.size(); ++i)
        r[i - 1] = f.mul(a[i], f.reduce(static_cast<std::int64_t>(i)));
    return fp_trim(std::move(r));
}

FpPoly fp_mod(const Fp& f, FpPoly a, const FpPoly& b) {
    if (b.empty()) throw std::domain_error("fp_mod: division by zero polynomial");
    a = fp_trim(std::move(a));
    std::int64_t lead_inv = f.inv(b.back());
    while (a.size() >= b.size()) {
        std::int64_t c = f.mul(a.back(), lead_inv);
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] = f.sub(a[shift + i], f.mul(c, b[i]));
        a = fp_trim(std::move(a));
        if (a.empty()) break;
    }
    return a;
}

FpPoly fp_gcd(const Fp& f, FpPoly a, FpPoly b) {
    a = fp_trim(std::move(a));
    b = fp_trim(std::move(b));
    while (!b.empty()) {
        FpPoly r = fp_mod(f, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        std::int64_t inv = f.inv(a.back());
        for (auto& c : a) c = f.mul(c, inv);
    }
    return a;
}

std::int64_t fp_eval(const Fp& f, const FpPoly& a, std::int64_t x) {
    std::int64_t r = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) r = f.add(f.mul(r, x), *it);
    return r;
}

namespace {

// Irreducibility over F_p: x^(p^m) == x mod f, and gcd(x^(p^(m/d)) - x, f) = 1
// for every prime divisor d of m.
FpPoly x_power_q_mod(const Fp& fp, std::int64_t p, int e, const FpPoly& f) {
    FpPoly x{0, 1};
    FpPoly r = fp_mod(fp, x, f);
    for (int i = 0; i < e; ++i) {
        // r <- r^p mod f
        FpPoly acc{1};
        FpPoly base = r;
        std::int64_t exp = p;
        while (exp > 0) {
            if (exp & 1) acc = fp_mod(fp, fp_mul(fp, acc, base), f);
            base = fp_mod(fp, fp_mul(fp, base, base), f);
            exp >>= 1;
        }
        r = acc;
    }
    return r;
}

bool is_irreducible(const Fp& fp, const FpPoly& f) {
    const int m = static_cast<int>(f.size()) - 1;
    FpPoly x{0, 1};
    FpPoly xq = x_power_q_mod(fp, fp.p(), m, f);
    FpPoly diff = fp_add(fp, xq, {fp.neg(0), fp.neg(1)});
    if (!fp_trim(diff).empty()) return false;
    for (int d = 2; d <= m; ++d) {
        if (m % d != 0 || !is_prime(d)) continue;
        FpPoly xe = x_power_q_mod(fp, fp.p(), m / d, f);
        FpPoly g = fp_gcd(fp, fp_add(fp, xe, {0, fp.neg(1)}), f);
        if (g.size() != 1) return false;
    }
    return true;
}

FpPoly smallest_irreducible(const Fp& fp, int m) {
    if (m == 1) return {0, 1};  // z itself
    // Non-leading coefficients (c_{m-1},...,c_0) in lexicographic order.
    std::vector<std::int64_t> digits(static_cast<std::size_t>(m), 0);
    while (true) {
        FpPoly f(static_cast<std::size_t>(m) + 1, 0);
        f[static_cast<std::size_t>(m)] = 1;
        for (int i = 0; i < m; ++i) f[static_cast<std::size_t>(m - 1 - i)] = digits[static_cast<std::size_t>(i)];
        if (is_irreducible(fp, f)) return f;
        int pos = m - 1;
        while (pos >= 0 && digits[static_cast<std::size_t>(pos)] == fp.p() - 1) {
            digits[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) throw std::logic_error("smallest_irreducible: exhausted search");
        ++digits[static_cast<std::size_t>(pos)];
    }
}

}  // namespace

ExtField::ExtField(std::int64_t p, int m) : fp_(p), m_(m) {
    if (m < 1 || m > 8) throw std::invalid_argument("ExtField: degree must be in [1,8]");
    q_ = 1;
    for (int i = 0; i < m; ++i) {
        q_ *= p;
        if (q_ > (1LL << 40)) throw std::invalid_argument("ExtField: field too large");
    }
    modulus_ = smallest_irreducible(fp_, m);
    // Precompute x^(m+k) mod modulus.
    reduction_rows_.clear();
    Elt cur(static_cast<std::size_t>(m_), 0);
    // x^m = -(c_0 + c_1 x + ... + c_{m-1} x^{m-1})
    for (int i = 0; i < m_; ++i) cur[static_cast<std::size_t>(i)] = fp_.neg(modulus_[static_cast<std::size_t>(i)]);
    for (int k = 0; k <= m_ - 2; ++k) {
        reduction_rows_.push_back(cur);
        // multiply by x
        Elt next(static_cast<std::size_t>(m_), 0);
        std::int64_t carry = cur[static_cast<std::size_t>(m_ - 1)];
        for (int i = m_ - 1; i >= 1; --i) next[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i - 1)];
        next[0] = 0;
        if (carry != 0)
            for (int i = 0; i < m_; ++i)
                next[static_cast<std::size_t>(i)] = fp_.add(
                    next[static_cast<std::size_t>(i)],
                    fp_.mul(carry, fp_.neg(modulus_[static_cast<std::size_t>(i)])));
        cur = next;
    }
    if (m_ == 1) reduction_rows_.clear();
}

ExtField::Elt ExtField::one() const {
    Elt e = zero();
    e[0] = 1;
    return e;
}

ExtField::Elt ExtField::from_base(std::int64_t c) const {
    Elt e = zero();
    e[0] = fp_.reduce(c);
    return e;
}

ExtField::Elt ExtField::from_index(std::int64_t idx) const {
    Elt e = zero();
    for (int i = 0; i < m_; ++i) {
        e[static_cast<std::size_t>(i)] = idx % fp_.p();
        idx /= fp_.p();
    }
    return e;
}

std::int64_t ExtField::to_index(const Elt& a) const {
    std::int64_t idx = 0;
    for (int i = m_ - 1; i >= 0; --i) idx = idx * fp_.p() + a[static_cast<std::size_t>(i)];
    return idx;
}

bool ExtField::is_zero(const Elt& a) const {
    for (auto c : a)
        if (c != 0) return false;
    return true;
}

ExtField::Elt ExtField::add(const Elt& a, const Elt& b) const {
    Elt r = zero();
    for (int i = 0; i < m_; ++i) r[static_cast<std::size_t>(i)] = fp_.add(a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(i)]);
    return r;
}

ExtField::Elt ExtField::sub(const Elt& a, const Elt& b) const {
    Elt r = zero();
    for (int i = 0; i < m_; ++i) r[static_cast<std::size_t>(i)] = fp_.sub(a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(i)]);
    return r;
}

ExtField::Elt ExtField::neg(const Elt& a) const {
    Elt r = zero();
    for (int i = 0; i < m_; ++i) r[static_cast<std::size_t>(i)] = fp_.neg(a[static_cast<std::size_t>(i)]);
    return r;
}

ExtField::Elt ExtField::mul(const Elt& a, const Elt& b) const {
    if (m_ == 1) return {fp_.mul(a[0], b[0])};
    std::vector<std::int64_t> conv(static_cast<std::size_t>(2 * m_ - 1), 0);
    for (int i = 0; i < m_; ++i) {
        if (a[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = 0; j < m_; ++j)
            conv[static_cast<std::size_t>(i + j)] =
                fp_.add(conv[static_cast<std::size_t>(i + j)],
                        fp_.mul(a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(j)]));
    }
    Elt r = zero();
    for (int i = 0; i < m_; ++i) r[static_cast<std::size_t>(i)] = conv[static_cast<std::size_t>(i)];
    for (int k = 0; k <= m_ - 2; ++k) {
        std::int64_t c = conv[static_cast<std::size_t>(m_ + k)];
        if (c == 0) continue;
        const Elt& row = reduction_rows_[static_cast<std::size_t>(k)];
        for (int i = 0; i < m_; ++i)
            r[static_cast<std::size_t>(i)] = fp_.add(r[static_cast<std::size_t>(i)],
                                                     fp_.mul(c, row[static_cast<std::size_t>(i)]));
    }
    return r;
}

ExtField::Elt ExtField::pow(Elt a, std::int64_t e) const {
    Elt r = one();
    while (e > 0) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

ExtField::Elt ExtField::inv(const Elt& a) const {
    if (is_zero(a)) throw std::domain_error("ExtField: inverse of zero");
    return pow(a, q_ - 2);
}

ExtPoly ext_trim(const ExtField& F, ExtPoly a) {
    while (!a.empty() && F.is_zero(a.back())) a.pop_back();
    return a;
}

ExtField::Elt ext_eval(const ExtField& F, const ExtPoly& a, const ExtField::Elt& x) {
    ExtField::Elt r = F.zero();
    for (auto it = a.rbegin(); it != a.rend(); ++it) r = F.add(F.mul(r, x), *it);
    return r;
}

ExtPoly ext_pseudo_gcd(const ExtField& F, ExtPoly a, ExtPoly b) {
    a = ext_trim(F, std::move(a));
    b = ext_trim(F, std::move(b));
    while (!b.empty()) {
        // Pseudo-remainder: scale a by lead(b)^k instead of dividing.
        ExtPoly r = a;
        const ExtField::Elt lb = b.back();
        while (r.size() >= b.size()) {
            ExtField::Elt lr = r.back();
            std::size_t shift = r.size() - b.size();
            for (std::size_t i = 0; i < r.size(); ++i) {
                ExtField::Elt scaled = F.mul(r[i], lb);
                ExtField::Elt sub_term =
                    (i >= shift && i - shift < b.size()) ? F.mul(lr, b[i - shift]) : F.zero();
                r[i] = F.sub(scaled, sub_term);
            }
            r = ext_trim(F, std::move(r));
            if (r.empty()) break;
        }
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

}  // namespace ndpoly
