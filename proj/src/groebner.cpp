#include "ndpoly/groebner.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace ndpoly {

namespace {

using Mono = std::array<int, 3>;

inline int degree(const Mono& m) { return m[0] + m[1] + m[2]; }

// Degrevlex: higher total degree first; ties broken by the smaller exponent
// in the last differing variable, scanning t, then y, then x.
inline bool mono_less(const Mono& a, const Mono& b) {
    int da = degree(a), db = degree(b);
    if (da != db) return da < db;
    for (int i = 2; i >= 0; --i)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

inline bool divides(const Mono& a, const Mono& b) {
    return a[0] <= b[0] && a[1] <= b[1] && a[2] <= b[2];
}

inline Mono mono_div(const Mono& a, const Mono& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

inline Mono mono_mul(const Mono& a, const Mono& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

inline Mono mono_lcm(const Mono& a, const Mono& b) {
    return {std::max(a[0], b[0]), std::max(a[1], b[1]), std::max(a[2], b[2])};
}

// Terms sorted descending in the monomial order.
struct Poly {
    std::vector<std::pair<Mono, std::int64_t>> terms;

    bool zero() const { return terms.empty(); }
    const Mono& lm() const { return terms.front().first; }
    std::int64_t lc() const { return terms.front().second; }
    bool is_unit_constant() const {
        return terms.size() == 1 && terms[0].first == Mono{0, 0, 0};
    }
};

Poly from_map(const Fp& fp, const GPoly& g) {
    Poly p;
    for (const auto& [m, c] : g) {
        std::int64_t v = fp.reduce(c);
        if (v != 0) p.terms.push_back({m, v});
    }
    std::sort(p.terms.begin(), p.terms.end(),
              [](const auto& a, const auto& b) { return mono_less(b.first, a.first); });
    return p;
}

Poly add_scaled(const Fp& fp, const Poly& a, const Poly& b, Mono shift, std::int64_t scale) {
    // a + scale * x^shift * b, merging sorted term lists.
    Poly r;
    r.terms.reserve(a.terms.size() + b.terms.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms.size() || j < b.terms.size()) {
        bool take_a;
        Mono mb{};
        if (j < b.terms.size()) mb = mono_mul(b.terms[j].first, shift);
        if (i >= a.terms.size()) take_a = false;
        else if (j >= b.terms.size()) take_a = true;
        else if (a.terms[i].first == mb) {
            std::int64_t c = fp.add(a.terms[i].second, fp.mul(scale, b.terms[j].second));
            if (c != 0) r.terms.push_back({a.terms[i].first, c});
            ++i; ++j;
            continue;
        } else {
            take_a = mono_less(mb, a.terms[i].first);
        }
        if (take_a) {
            r.terms.push_back(a.terms[i]);
            ++i;
        } else {
            std::int64_t c = fp.mul(scale, b.terms[j].second);
            if (c != 0) r.terms.push_back({mb, c});
            ++j;
        }
    }
    return r;
}

// Full normal form of f modulo basis.
Poly normal_form(const Fp& fp, Poly f, const std::vector<Poly>& basis) {
    Poly out;
    while (!f.zero()) {
        bool reduced = false;
        for (const auto& g : basis) {
            if (divides(g.lm(), f.lm())) {
                Mono shift = mono_div(f.lm(), g.lm());
                std::int64_t scale = fp.neg(fp.mul(f.lc(), fp.inv(g.lc())));
                f = add_scaled(fp, f, g, shift, scale);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            out.terms.push_back(f.terms.front());
            f.terms.erase(f.terms.begin());
        }
    }
    return out;
}

Poly s_poly(const Fp& fp, const Poly& a, const Poly& b) {
    Mono l = mono_lcm(a.lm(), b.lm());
    Poly r = add_scaled(fp, Poly{}, a, mono_div(l, a.lm()), fp.inv(a.lc()));
    return add_scaled(fp, r, b, mono_div(l, b.lm()), fp.neg(fp.inv(b.lc())));
}

}  // namespace

bool ideal_is_unit(const Fp& fp, std::vector<GPoly> gens) {
    std::vector<Poly> basis;
    for (const auto& g : gens) {
        Poly p = from_map(fp, g);
        if (!p.zero()) basis.push_back(std::move(p));
    }
    if (basis.empty()) return false;
    for (const auto& p : basis)
        if (p.is_unit_constant()) return true;

    std::deque<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) pairs.push_back({i, j});

    std::size_t guard = 0;
    while (!pairs.empty()) {
        if (++guard > 200000)
            throw std::runtime_error("ideal_is_unit: completion exceeded iteration guard");
        auto [i, j] = pairs.front();
        pairs.pop_front();
        // Buchberger's coprime-leading-monomial criterion.
        if (mono_lcm(basis[i].lm(), basis[j].lm()) ==
            mono_mul(basis[i].lm(), basis[j].lm()))
            continue;
        Poly s = normal_form(fp, s_poly(fp, basis[i], basis[j]), basis);
        if (s.zero()) continue;
        if (s.is_unit_constant()) return true;
        basis.push_back(std::move(s));
        std::size_t k = basis.size() - 1;
        for (std::size_t l = 0; l < k; ++l) pairs.push_back({l, k});
    }
    // Completed basis without reaching a constant: reduce 1 for certainty.
    Poly one;
    one.terms.push_back({Mono{0, 0, 0}, 1});
    return normal_form(fp, one, basis).zero();
}

}  // namespace ndpoly
