#pragma once

// Dense univariate polynomials over an arbitrary exact coefficient ring.
//
// Poly<C, V> is a polynomial in the variable tagged V whose coefficients lie
// in C. Multivariate polynomials are built by nesting: Poly<UniPoly, VarT> is
// a polynomial in t whose coefficients are polynomials in x. Variables are
// compile-time tags, so adding a polynomial in x to one in t does not compile.
//
// Coefficient rings must provide: value semantics, C(long), +, -, *, ==,
// and free functions is_zero(C) and exact_div(C, C).

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "chebgf/rational.hpp"

namespace chebgf {

struct VarX { static constexpr char name = 'x'; };
struct VarT { static constexpr char name = 't'; };
struct VarY { static constexpr char name = 'y'; };
struct VarU { static constexpr char name = 'u'; };

/// Degree of the zero polynomial. Large and negative so that sums of two
/// such degrees stay representable and below every real degree.
inline constexpr int kMinusInfinity = std::numeric_limits<int>::min() / 4;

template <class C, class V>
class Poly;
template <class C, class V>
bool is_zero(const Poly<C, V>& p);

template <class C, class V>
class Poly {
  public:
    using coeff_type = C;
    using var = V;

    Poly() = default;
    Poly(std::initializer_list<C> cs) : coeffs_(cs) { trim(); }
    explicit Poly(std::vector<C> cs) : coeffs_(std::move(cs)) { trim(); }
    explicit Poly(long c) {
        if (c != 0) coeffs_.emplace_back(c);
    }

    static Poly constant(C c) { return Poly(std::vector<C>{std::move(c)}); }

    static Poly monomial(C c, std::size_t k) {
        if (::chebgf::is_zero(c)) return {};
        std::vector<C> cs(k + 1, C(0));
        cs[k] = std::move(c);
        return Poly(std::move(cs));
    }

    /// The polynomial "v" itself.
    static Poly variable() { return monomial(C(1), 1); }

    int degree() const { return coeffs_.empty() ? kMinusInfinity : static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    std::size_t size() const { return coeffs_.size(); }

    const std::vector<C>& coeffs() const { return coeffs_; }

    /// Coefficient of v^i; zero outside the stored range.
    const C& operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : zero(); }

    /// Leading coefficient; zero for the zero polynomial.
    const C& lc() const { return coeffs_.empty() ? zero() : coeffs_.back(); }

    /// Constant coefficient.
    const C& tc() const { return (*this)[0]; }

    Poly& operator+=(const Poly& b) {
        if (b.coeffs_.size() > coeffs_.size()) coeffs_.resize(b.coeffs_.size(), C(0));
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
        trim();
        return *this;
    }

    Poly& operator-=(const Poly& b) {
        if (b.coeffs_.size() > coeffs_.size()) coeffs_.resize(b.coeffs_.size(), C(0));
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) coeffs_[i] -= b.coeffs_[i];
        trim();
        return *this;
    }

    Poly& operator*=(const Poly& b) { return *this = *this * b; }

    Poly& operator*=(const C& c) {
        if (::chebgf::is_zero(c)) {
            coeffs_.clear();
            return *this;
        }
        for (auto& a : coeffs_) a *= c;
        trim();
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    friend Poly operator-(Poly a) {
        for (auto& c : a.coeffs_) c = -c;
        return a;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<C> r(a.coeffs_.size() + b.coeffs_.size() - 1, C(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (::chebgf::is_zero(a.coeffs_[i])) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Poly(std::move(r));
    }

    friend Poly operator*(Poly a, const C& c) { return a *= c; }
    friend Poly operator*(const C& c, Poly a) { return a *= c; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  private:
    void trim() {
        while (!coeffs_.empty() && ::chebgf::is_zero(coeffs_.back())) coeffs_.pop_back();
    }

    static const C& zero() {
        static const C z(0);
        return z;
    }

    std::vector<C> coeffs_;
};

template <class C, class V>
bool is_zero(const Poly<C, V>& p) {
    return p.is_zero();
}

template <class C, class V>
bool is_one(const Poly<C, V>& p) {
    return p.degree() == 0 && is_one(p[0]);
}

// Canonical instances.
using UniPoly = Poly<Rational, VarX>;   // Q[x]
using BiPoly = Poly<UniPoly, VarT>;     // Q[x][t]
using YPoly = Poly<UniPoly, VarY>;      // Q[x][y]
using RatPolyY = Poly<Rational, VarY>;  // Q[y]
using RatPolyT = Poly<Rational, VarT>;  // Q[t]

using IntPolyX = Poly<Integer, VarX>;
using IntBiPoly = Poly<IntPolyX, VarT>;

// ---------------------------------------------------------------------------
// Type plumbing between rational and integer coefficient towers.

template <class C>
struct integer_of;
template <>
struct integer_of<Rational> { using type = Integer; };
template <>
struct integer_of<Integer> { using type = Integer; };
template <class C, class V>
struct integer_of<Poly<C, V>> { using type = Poly<typename integer_of<C>::type, V>; };
template <class C>
using integer_of_t = typename integer_of<C>::type;

template <class C>
struct rational_of;
template <>
struct rational_of<Integer> { using type = Rational; };
template <>
struct rational_of<Rational> { using type = Rational; };
template <class C, class V>
struct rational_of<Poly<C, V>> { using type = Poly<typename rational_of<C>::type, V>; };
template <class C>
using rational_of_t = typename rational_of<C>::type;

template <class T>
struct is_poly : std::false_type {};
template <class C, class V>
struct is_poly<Poly<C, V>> : std::true_type {};

/// Apply f to every coefficient.
template <class C, class V, class F>
auto map_coeffs(const Poly<C, V>& p, F&& f) {
    using R = std::decay_t<decltype(f(std::declval<const C&>()))>;
    std::vector<R> out;
    out.reserve(p.size());
    for (const auto& c : p.coeffs()) out.push_back(f(c));
    return Poly<R, V>(std::move(out));
}

/// Same coefficients, different variable name.
template <class W, class C, class V>
Poly<C, W> rename(const Poly<C, V>& p) {
    return Poly<C, W>(p.coeffs());
}

// Leaf-level helpers: recurse through the tower down to the scalar.

inline Integer common_denominator(const Rational& a) { return a.get_den(); }
inline Integer common_denominator(const Integer&) { return 1; }

/// Least common multiple of every leaf denominator.
template <class C, class V>
Integer common_denominator(const Poly<C, V>& p) {
    Integer d = 1;
    for (const auto& c : p.coeffs()) {
        Integer e = common_denominator(c);
        mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), e.get_mpz_t());
    }
    return d;
}

inline Integer leaf_content(const Integer& a) { return abs(a); }
inline Integer leaf_content(const Rational& a) { return abs(a.get_num()); }

/// Gcd of all leaf numerators.
template <class C, class V>
Integer leaf_content(const Poly<C, V>& p) {
    Integer g = 0;
    for (const auto& c : p.coeffs()) {
        Integer e = leaf_content(c);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

inline Rational leaf_scale(const Rational& a, const Rational& s) { return Rational(a * s); }

template <class C, class V>
Poly<C, V> leaf_scale(const Poly<C, V>& p, const Rational& s) {
    return map_coeffs(p, [&](const C& c) { return leaf_scale(c, s); });
}

inline Integer to_integer_coeffs(const Rational& a) {
    if (!is_integer(a)) throw std::domain_error("to_integer_coeffs: non-integral coefficient " + a.get_str());
    return a.get_num();
}

/// Convert a polynomial whose leaves are all integers to the integer tower.
template <class C, class V>
Poly<integer_of_t<C>, V> to_integer_coeffs(const Poly<C, V>& p) {
    return map_coeffs(p, [](const C& c) { return to_integer_coeffs(c); });
}

inline Rational to_rational_coeffs(const Integer& a) { return Rational(a); }

template <class C, class V>
Poly<rational_of_t<C>, V> to_rational_coeffs(const Poly<C, V>& p) {
    return map_coeffs(p, [](const C& c) { return to_rational_coeffs(c); });
}

/// True when every leaf coefficient is an integer.
inline bool has_integer_coeffs(const Rational& a) { return is_integer(a); }

template <class C, class V>
bool has_integer_coeffs(const Poly<C, V>& p) {
    return std::all_of(p.coeffs().begin(), p.coeffs().end(),
                       [](const C& c) { return has_integer_coeffs(c); });
}

// ---------------------------------------------------------------------------
// Basic operations.

template <class C, class V>
Poly<C, V> pow(const Poly<C, V>& p, unsigned e) {
    Poly<C, V> r(1), b = p;
    while (e) {
        if (e & 1u) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

/// v^n * p(1/v). Requires n >= deg p.
template <class C, class V>
Poly<C, V> reverse(const Poly<C, V>& p, int n) {
    if (n < p.degree()) throw std::invalid_argument("reverse: window smaller than degree");
    if (p.is_zero()) return {};
    std::vector<C> cs(static_cast<std::size_t>(n) + 1, C(0));
    for (int i = 0; i <= p.degree(); ++i) cs[static_cast<std::size_t>(n - i)] = p[static_cast<std::size_t>(i)];
    return Poly<C, V>(std::move(cs));
}

/// Reverse within the polynomial's own degree.
template <class C, class V>
Poly<C, V> reverse(const Poly<C, V>& p) {
    return p.is_zero() ? p : reverse(p, p.degree());
}

/// Formal derivative with respect to the outer variable.
template <class C, class V>
Poly<C, V> derivative(const Poly<C, V>& p) {
    if (p.degree() < 1) return {};
    std::vector<C> cs;
    cs.reserve(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) cs.push_back(p[i] * C(static_cast<long>(i)));
    return Poly<C, V>(std::move(cs));
}

/// Formal derivative with respect to whichever variable in the tower is tagged W.
template <class W, class C, class V>
Poly<C, V> derivative_wrt(const Poly<C, V>& p) {
    if constexpr (std::is_same_v<W, V>) {
        return derivative(p);
    } else {
        static_assert(is_poly<C>::value, "derivative_wrt: variable not present in this polynomial");
        return map_coeffs(p, [](const C& c) { return derivative_wrt<W>(c); });
    }
}

/// Horner evaluation of the outer variable at a coefficient-ring value.
template <class C, class V>
C eval(const Poly<C, V>& p, const C& v) {
    C acc(0);
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * v + *it;
    return acc;
}

/// Evaluate a rational polynomial tower at a rational point in the outer variable,
/// leaving inner variables symbolic.
template <class C, class V>
C eval_scalar(const Poly<C, V>& p, const Rational& v) {
    C acc(0);
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
        if constexpr (std::is_same_v<C, Rational>) {
            acc = Rational(acc * v + *it);
        } else {
            acc = leaf_scale(acc, v) + *it;
        }
    }
    return acc;
}

inline Rational bipoly_eval(const BiPoly& p, const Rational& x0, const Rational& t0) {
    return eval_scalar(eval_scalar(p, t0), x0);
}

/// p(-v) for the outer variable.
template <class C, class V>
Poly<C, V> negate_variable(const Poly<C, V>& p) {
    std::vector<C> cs = p.coeffs();
    for (std::size_t i = 1; i < cs.size(); i += 2) cs[i] = -cs[i];
    return Poly<C, V>(std::move(cs));
}

/// x -> -x and/or t -> -t on a bivariate polynomial.
BiPoly substitute_signs(const BiPoly& p, bool flip_x, bool flip_t);

/// p(c * v) for the outer variable.
template <class C, class V>
Poly<C, V> scale_variable(const Poly<C, V>& p, const C& c) {
    std::vector<C> cs = p.coeffs();
    C f(1);
    for (auto& a : cs) {
        a *= f;
        f *= c;
    }
    return Poly<C, V>(std::move(cs));
}

/// p(q) for a polynomial q in the same variable.
template <class C, class V>
Poly<C, V> compose(const Poly<C, V>& p, const Poly<C, V>& q) {
    Poly<C, V> acc;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * q + Poly<C, V>::constant(*it);
    return acc;
}

/// p(v^k).
template <class C, class V>
Poly<C, V> inflate(const Poly<C, V>& p, unsigned k) {
    if (p.is_zero()) return p;
    std::vector<C> cs(static_cast<std::size_t>(p.degree()) * k + 1, C(0));
    for (std::size_t i = 0; i < p.size(); ++i) cs[i * k] = p[i];
    return Poly<C, V>(std::move(cs));
}

/// Keep only coefficients of v^0 .. v^(n-1).
template <class C, class V>
Poly<C, V> truncate(const Poly<C, V>& p, std::size_t n) {
    if (p.size() <= n) return p;
    return Poly<C, V>(std::vector<C>(p.coeffs().begin(), p.coeffs().begin() + static_cast<std::ptrdiff_t>(n)));
}

/// Highest exponent of the inner variable over all outer coefficients.
template <class C, class V>
int inner_degree(const Poly<C, V>& p) {
    int d = kMinusInfinity;
    for (const auto& c : p.coeffs()) d = std::max(d, c.degree());
    return d;
}

// ---------------------------------------------------------------------------
// Division.

/// a / b where b divides a exactly; throws otherwise. Works over any
/// integral domain whose exact_div is defined.
template <class C, class V>
Poly<C, V> exact_div(const Poly<C, V>& a, const Poly<C, V>& b) {
    if (b.is_zero()) throw std::domain_error("exact_div: division by zero polynomial");
    if (a.is_zero()) return {};
    if (b.degree() == 0) {
        return map_coeffs(a, [&](const C& c) { return exact_div(c, b[0]); });
    }
    int da = a.degree(), db = b.degree();
    if (da < db) throw std::domain_error("exact_div: inexact polynomial division");
    std::vector<C> r = a.coeffs();
    std::vector<C> q(static_cast<std::size_t>(da - db) + 1, C(0));
    const C& lb = b.lc();
    for (int k = da - db; k >= 0; --k) {
        const C& top = r[static_cast<std::size_t>(k + db)];
        if (is_zero(top)) continue;
        C qk = exact_div(top, lb);
        for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k + j)] -= qk * b[static_cast<std::size_t>(j)];
        q[static_cast<std::size_t>(k)] = std::move(qk);
    }
    for (const auto& c : r) {
        if (!is_zero(c)) throw std::domain_error("exact_div: inexact polynomial division");
    }
    return Poly<C, V>(std::move(q));
}

/// Euclidean division over a field of coefficients: a = q*b + r, deg r < deg b.
template <class V>
std::pair<Poly<Rational, V>, Poly<Rational, V>> divrem(const Poly<Rational, V>& a, const Poly<Rational, V>& b) {
    if (b.is_zero()) throw std::domain_error("divrem: division by zero polynomial");
    int da = a.degree(), db = b.degree();
    if (da < db) return {Poly<Rational, V>{}, a};
    std::vector<Rational> r = a.coeffs();
    std::vector<Rational> q(static_cast<std::size_t>(da - db) + 1);
    Rational inv = 1 / b.lc();
    for (int k = da - db; k >= 0; --k) {
        Rational qk = r[static_cast<std::size_t>(k + db)] * inv;
        if (is_zero(qk)) continue;
        for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k + j)] -= qk * b[static_cast<std::size_t>(j)];
        q[static_cast<std::size_t>(k)] = qk;
    }
    r.resize(static_cast<std::size_t>(db));
    return {Poly<Rational, V>(std::move(q)), Poly<Rational, V>(std::move(r))};
}

/// lc(b)^(deg a - deg b + 1) * a mod b, computed without division.
template <class C, class V>
Poly<C, V> pseudo_remainder(const Poly<C, V>& a, const Poly<C, V>& b) {
    if (b.is_zero()) throw std::domain_error("pseudo_remainder: zero divisor");
    int da = a.degree(), db = b.degree();
    if (da < db) return a;
    std::vector<C> r = a.coeffs();
    const C& lb = b.lc();
    for (int k = da; k >= db; --k) {
        C top = r[static_cast<std::size_t>(k)];
        for (auto& c : r) c *= lb;
        if (!is_zero(top)) {
            for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= top * b[static_cast<std::size_t>(j)];
        }
        r[static_cast<std::size_t>(k)] = C(0);
    }
    r.resize(static_cast<std::size_t>(db));
    return Poly<C, V>(std::move(r));
}

// ---------------------------------------------------------------------------
// Gcd.

/// Monic gcd over a field.
template <class V>
Poly<Rational, V> gcd(Poly<Rational, V> a, Poly<Rational, V> b) {
    while (!b.is_zero()) {
        auto r = divrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    Rational inv = 1 / a.lc();
    return a * inv;
}

/// Gcd of all coefficients (monic over Q).
template <class C, class V>
C content(const Poly<C, V>& p) {
    C g(0);
    for (const auto& c : p.coeffs()) {
        if (is_zero(c)) continue;
        if constexpr (std::is_same_v<C, Rational>) {
            g = 1;
            break;
        } else {
            if (c.degree() == 0) return C(1);
            g = gcd(g, c);
            if (g.degree() == 0) return C(1);
        }
    }
    return g;
}

template <class C, class V>
Poly<C, V> primitive_part(const Poly<C, V>& p) {
    if (p.is_zero()) return p;
    C c = content(p);
    return is_one(c) ? p : exact_div(p, Poly<C, V>::constant(c));
}

/// Gcd in (Q[x])[v] by the subresultant remainder sequence. Result is
/// primitive with monic content and monic leading inner coefficient.
template <class C, class W, class V>
Poly<Poly<C, W>, V> gcd(Poly<Poly<C, W>, V> a, Poly<Poly<C, W>, V> b) {
    using Inner = Poly<C, W>;
    using P = Poly<Inner, V>;
    if (a.is_zero()) std::swap(a, b);
    if (b.is_zero()) {
        if (a.is_zero()) return a;
        Inner c = content(a);
        P pa = primitive_part(a);
        Inner l = pa.lc();
        Rational s = 1 / l.lc();
        return leaf_scale(pa, s) * c;
    }
    Inner ca = content(a), cb = content(b);
    Inner c = gcd(ca, cb);
    a = primitive_part(a);
    b = primitive_part(b);
    if (a.degree() < b.degree()) std::swap(a, b);
    Inner g(1), h(1);
    while (true) {
        int delta = a.degree() - b.degree();
        P r = pseudo_remainder(a, b);
        if (r.is_zero()) break;
        if (r.degree() == 0) {
            b = P(1);
            break;
        }
        a = std::move(b);
        b = exact_div(r, P::constant(g * pow(h, static_cast<unsigned>(delta))));
        g = a.lc();
        if (delta == 0) {
            // h unchanged
        } else {
            h = exact_div(pow(g, static_cast<unsigned>(delta)), pow(h, static_cast<unsigned>(delta - 1)));
        }
    }
    P out = primitive_part(b);
    Rational s = 1 / out.lc().lc();
    return leaf_scale(out, s) * c;
}

// ---------------------------------------------------------------------------
// Normalization and rendering.

/// p = scale * q with q primitive over Z (integer coefficients, leaf
/// content 1) and the sign chosen so that the lowest nonzero coefficient
/// (in the outer, then inner variables) is positive.
std::pair<BiPoly, Rational> integer_normalize(const BiPoly& p);
std::pair<UniPoly, Rational> integer_normalize(const UniPoly& p);

/// Expanded monomial form, descending in the outer variable then the inner:
/// "x^2 + 7*x + 1", "t^2 - x*t - 2*t + 1".
std::string to_string(const UniPoly& p);
std::string to_string(const BiPoly& p);
std::string to_string(const YPoly& p);
std::string to_string(const RatPolyT& p);
std::string to_string(const RatPolyY& p);

/// Same as to_string but without spaces around + and -.
std::string to_compact_string(const UniPoly& p);

std::ostream& operator<<(std::ostream& os, const UniPoly& p);
std::ostream& operator<<(std::ostream& os, const BiPoly& p);
std::ostream& operator<<(std::ostream& os, const YPoly& p);
std::ostream& operator<<(std::ostream& os, const RatPolyT& p);
std::ostream& operator<<(std::ostream& os, const RatPolyY& p);

/// Grouped by ascending powers of t with compact x-coefficients:
/// "1 - (x+2)*t + t^2".
std::string to_collected_string(const BiPoly& p);

}  // namespace chebgf
