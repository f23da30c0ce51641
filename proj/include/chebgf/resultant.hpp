#pragma once

// Resultants and discriminants with respect to the outer variable of a
// polynomial tower.
//
// Convention: Res(f, g) = lc(f)^deg(g) * prod_{f(a)=0} g(a), the determinant
// of the Sylvester matrix whose first deg(g) rows hold the coefficients of f.
// Res(c, g) = c^deg(g) and Res(f, c) = c^deg(f) for nonzero constants c;
// anything involving the zero polynomial is 0, except Res(0, c) = Res(c, 0) = 1
// for a nonzero constant c. Res(0, 0) throws.

#include <stdexcept>
#include <type_traits>

#include "chebgf/matrix.hpp"
#include "chebgf/poly.hpp"

namespace chebgf {

template <class C>
struct leaf_of { using type = C; };
template <class C, class V>
struct leaf_of<Poly<C, V>> { using type = typename leaf_of<C>::type; };
template <class C>
using leaf_of_t = typename leaf_of<C>::type;

template <class C, class V>
Matrix<C> sylvester_matrix(const Poly<C, V>& f, const Poly<C, V>& g) {
    const int m = f.degree(), n = g.degree();
    if (m < 0 || n < 0) throw std::invalid_argument("sylvester_matrix: zero polynomial");
    const auto size = static_cast<std::size_t>(m + n);
    Matrix<C> s(size, size);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k <= m; ++k) s(static_cast<std::size_t>(i), static_cast<std::size_t>(i + k)) = f[static_cast<std::size_t>(m - k)];
    for (int i = 0; i < m; ++i)
        for (int k = 0; k <= n; ++k) s(static_cast<std::size_t>(n + i), static_cast<std::size_t>(i + k)) = g[static_cast<std::size_t>(n - k)];
    return s;
}

namespace detail {

/// Handles the zero/constant cases. Returns true and sets out when one applies.
template <class C, class V>
bool resultant_degenerate(const Poly<C, V>& f, const Poly<C, V>& g, C& out) {
    if (f.is_zero() && g.is_zero()) throw std::domain_error("resultant: both polynomials are zero");
    if (f.is_zero() || g.is_zero()) {
        const auto& other = f.is_zero() ? g : f;
        out = other.degree() == 0 ? C(1) : C(0);
        return true;
    }
    if (f.degree() == 0) {
        out = pow(f[0], static_cast<unsigned>(g.degree()));
        return true;
    }
    if (g.degree() == 0) {
        out = pow(g[0], static_cast<unsigned>(f.degree()));
        return true;
    }
    return false;
}

template <class C, class V>
C resultant_bareiss_integral(const Poly<C, V>& f, const Poly<C, V>& g) {
    C out;
    if (resultant_degenerate(f, g, out)) return out;
    return bareiss_determinant(sylvester_matrix(f, g));
}

/// Subresultant remainder sequence; exact divisions only.
template <class C, class V>
C resultant_subresultant_integral(Poly<C, V> a, Poly<C, V> b) {
    C out;
    if (resultant_degenerate(a, b, out)) return out;
    bool negate = false;
    if (a.degree() < b.degree()) {
        if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) negate = !negate;
        std::swap(a, b);
    }
    C g(1), h(1);
    while (true) {
        const int delta = a.degree() - b.degree();
        if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) negate = !negate;
        Poly<C, V> r = pseudo_remainder(a, b);
        a = std::move(b);
        if (r.is_zero()) return C(0);
        b = exact_div(r, Poly<C, V>::constant(g * pow(h, static_cast<unsigned>(delta))));
        g = a.lc();
        if (delta > 0) h = exact_div(pow(g, static_cast<unsigned>(delta)), pow(h, static_cast<unsigned>(delta - 1)));
        if (b.degree() == 0) break;
    }
    const auto da = static_cast<unsigned>(a.degree());
    C res = exact_div(pow(b.lc(), da), pow(h, da - 1));
    return negate ? C(-res) : res;
}

/// Clears leaf denominators, runs the integral algorithm, and rescales.
template <class C, class V, class Fn>
C resultant_rational(const Poly<C, V>& f, const Poly<C, V>& g, Fn&& integral) {
    if constexpr (std::is_same_v<leaf_of_t<C>, Integer>) {
        return integral(f, g);
    } else {
        C out;
        if (resultant_degenerate(f, g, out)) return out;
        Integer df = common_denominator(f), dg = common_denominator(g);
        auto fi = to_integer_coeffs(leaf_scale(f, Rational(df)));
        auto gi = to_integer_coeffs(leaf_scale(g, Rational(dg)));
        auto r = to_rational_coeffs(integral(fi, gi));
        Integer scale = pow(df, static_cast<unsigned long>(g.degree())) * pow(dg, static_cast<unsigned long>(f.degree()));
        if constexpr (std::is_same_v<C, Rational>) {
            return Rational(r / scale);
        } else {
            return leaf_scale(r, Rational(Integer(1), scale));
        }
    }
}

}  // namespace detail

/// Res_v(f, g) by fraction-free elimination on the Sylvester matrix, after
/// clearing rational denominators.
template <class C, class V>
C resultant(const Poly<C, V>& f, const Poly<C, V>& g) {
    return detail::resultant_rational(f, g, [](const auto& a, const auto& b) { return detail::resultant_bareiss_integral(a, b); });
}

/// Res_v(f, g) by the subresultant remainder sequence. Independent of the
/// Sylvester route; used to cross-check it.
template <class C, class V>
C resultant_subresultant(const Poly<C, V>& f, const Poly<C, V>& g) {
    return detail::resultant_rational(f, g, [](const auto& a, const auto& b) { return detail::resultant_subresultant_integral(a, b); });
}

enum class PowerSubMethod {
    kNorm,       ///< determinant of multiplication-by-Q(y) in Q[x][y]/(y^s - x)
    kSylvester,  ///< Bareiss on the full Sylvester matrix
};

/// Res_y(y^s - x, Q(y)) = prod_{b^s = x} Q(b), as a polynomial in x.
UniPoly resultant_power_sub(const RatPolyY& q, unsigned s, PowerSubMethod method = PowerSubMethod::kNorm);

/// (-1)^(d(d-1)/2) Res_y(p, dp/dy) / lc(p) for d = deg_y p >= 1. The
/// leading coefficient must be a nonzero rational.
UniPoly discriminant(const YPoly& p);

}  // namespace chebgf
