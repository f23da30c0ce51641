#pragma once

// Test-only helpers: polynomial builders, random generators, and oracles
// that do not share code paths with the library routines they check.

#include <random>
#include <vector>

#include "chebgf/poly.hpp"

namespace tsupport {

using namespace chebgf;

inline UniPoly xp() { return UniPoly::variable(); }
inline BiPoly X() { return BiPoly::constant(UniPoly::variable()); }
inline BiPoly T() { return BiPoly::variable(); }
inline BiPoly B(long c) { return BiPoly(c); }

/// Polynomial in t with integer coefficients, highest power first.
inline BiPoly t_desc(std::initializer_list<long> cs) {
    std::vector<UniPoly> v;
    for (long c : cs) v.emplace_back(c);
    std::reverse(v.begin(), v.end());
    return BiPoly(std::move(v));
}

/// Polynomial in x with integer coefficients, highest power first.
inline UniPoly x_desc(std::initializer_list<long> cs) {
    std::vector<Rational> v;
    for (long c : cs) v.emplace_back(c);
    std::reverse(v.begin(), v.end());
    return UniPoly(std::move(v));
}

// ---------------------------------------------------------------------------
// Known closed forms for s = 1..4.

inline std::pair<BiPoly, BiPoly> closed_form_F1() {
    return {B(1) - T(), pow(B(1) - T(), 2) - X() * T()};
}

inline std::pair<BiPoly, BiPoly> closed_form_F2() {
    return {pow(B(1) - T(), 3), pow(T() - B(1), 4) - X() * T() * pow(T() + B(1), 2)};
}

inline std::pair<BiPoly, BiPoly> closed_form_F3() {
    const BiPoly t = T(), x = X(), one = B(1);
    BiPoly num = (one - t) * (pow(t - one, 6) - x * t * t * (t + B(3)) * (B(3) * t + one));
    BiPoly den = x * x * pow(t, 4) - x * t * t_desc({1, 14, 34, 14, 1}) * pow(t - one, 2) + pow(t - one, 8);
    return {num, den};
}

inline std::pair<BiPoly, BiPoly> closed_form_F4() {
    const BiPoly t = T(), x = X(), one = B(1);
    const BiPoly a = t_desc({9, -46, -89, -260, -89, -46, 9});
    const BiPoly b = t_desc({11, 128, 266, 128, 11});
    const BiPoly c = t_desc({2, -13, 226, -300, -676, -2574, -676, -300, 226, -13, 2});
    const BiPoly d = t_desc({1, 60, 519, 1016, 519, 60, 1});
    BiPoly num = (t - one) * (x * x * pow(t, 4) * a - B(2) * x * t * t * b * pow(t - one, 6) + pow(t - one, 14));
    BiPoly den = pow(x, 3) * pow(t, 5) * pow(t + one, 2) * pow(t - one, 4) + x * x * pow(t, 3) * c + x * t * pow(t - one, 8) * d -
                 pow(t - one, 16);
    return {num, den};
}

// ---------------------------------------------------------------------------
// Random generators (fixed seeds at call sites).

inline Rational random_rational(std::mt19937& rng, int range, bool allow_fractions = false) {
    std::uniform_int_distribution<int> num(-range, range), den(1, 3);
    Rational r(num(rng), allow_fractions ? den(rng) : 1);
    r.canonicalize();
    return r;
}

inline UniPoly random_unipoly(std::mt19937& rng, int max_deg, int range, bool allow_fractions = false) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::vector<Rational> cs(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& c : cs) c = random_rational(rng, range, allow_fractions);
    return UniPoly(std::move(cs));
}

template <class V>
Poly<UniPoly, V> random_outer(std::mt19937& rng, int outer_deg, int inner_deg, int range, bool monic = false, bool allow_fractions = false) {
    std::vector<UniPoly> cs(static_cast<std::size_t>(outer_deg) + 1);
    for (auto& c : cs) c = random_unipoly(rng, inner_deg, range, allow_fractions);
    if (monic) cs.back() = UniPoly(1);
    while (cs.back().is_zero()) cs.back() = random_unipoly(rng, inner_deg, range, allow_fractions);
    return Poly<UniPoly, V>(std::move(cs));
}

// ---------------------------------------------------------------------------
// Oracles.

/// Determinant over Q by Gaussian elimination with rational pivots.
inline Rational gauss_determinant(std::vector<std::vector<Rational>> m) {
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && m[p][k] == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            std::swap(m[p], m[k]);
            det = -det;
        }
        det *= m[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            Rational f = m[i][k] / m[k][k];
            for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    return det;
}

/// Res_y(f, g) with x specialized to x0: Sylvester determinant over Q.
template <class V>
Rational sylvester_resultant_at(const Poly<UniPoly, V>& f, const Poly<UniPoly, V>& g, const Rational& x0) {
    std::vector<Rational> fc, gc;
    for (const auto& c : f.coeffs()) fc.push_back(eval(c, x0));
    for (const auto& c : g.coeffs()) gc.push_back(eval(c, x0));
    while (!fc.empty() && fc.back() == 0) fc.pop_back();
    while (!gc.empty() && gc.back() == 0) gc.pop_back();
    const std::size_t m = fc.size() - 1, n = gc.size() - 1, size = m + n;
    if (size == 0) return 1;
    std::vector<std::vector<Rational>> s(size, std::vector<Rational>(size));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k <= m; ++k) s[i][i + k] = fc[m - k];
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k <= n; ++k) s[n + i][i + k] = gc[n - k];
    return gauss_determinant(std::move(s));
}

/// Elementary symmetric functions e_0..e_n from power sums by the
/// triangular Newton identities k e_k = sum_{i=1..k} (-1)^(i-1) e_{k-i} p_i.
inline std::vector<UniPoly> newton_triangular(const std::vector<UniPoly>& p, std::size_t n) {
    std::vector<UniPoly> e(n + 1);
    e[0] = UniPoly(1);
    for (std::size_t k = 1; k <= n; ++k) {
        UniPoly acc;
        for (std::size_t i = 1; i <= k; ++i) {
            UniPoly term = e[k - i] * p[i];
            if (i % 2 == 1) acc += term;
            else acc -= term;
        }
        e[k] = acc * Rational(1, static_cast<unsigned long>(k));
    }
    return e;
}

/// H_m^(s) for small (s, m), computed from the cosine product at 80 digits
/// and rounded (frozen values; descending coefficients).
struct FrozenH {
    unsigned s, m;
    std::vector<long> desc;
};

inline const std::vector<FrozenH>& frozen_h() {
    static const std::vector<FrozenH> v{
        {3, 2, {1, 18, 1}},          {3, 3, {1, 38, 129, 1}},          {4, 3, {1, 117, 650, 1}},
        {2, 4, {1, 19, 87, 70, 1}},  {5, 4, {1, 622, 39795, 39175, 1}}, {1, 5, {1, 9, 28, 35, 15, 1}},
        {3, 5, {1, 78, 1525, 6212, 1884, 1}},
    };
    return v;
}

}  // namespace tsupport

using tsupport::B;
using tsupport::T;
using tsupport::X;
