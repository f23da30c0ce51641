#include "chebgf/poly.hpp"

#include <ostream>
#include <sstream>

namespace chebgf {

namespace {

struct Term {
    Rational coeff;
    std::string monomial;  // "x^2*t", empty for a constant
};

std::string power(char v, int k) {
    if (k == 0) return {};
    if (k == 1) return std::string(1, v);
    return std::string(1, v) + "^" + std::to_string(k);
}

std::string join_monomial(const std::string& inner, const std::string& outer) {
    if (inner.empty()) return outer;
    if (outer.empty()) return inner;
    return inner + "*" + outer;
}

template <class V>
void collect_terms(const Poly<Rational, V>& p, const std::string& outer, std::vector<Term>& out) {
    for (int i = p.degree(); i >= 0; --i) {
        const Rational& c = p[static_cast<std::size_t>(i)];
        if (is_zero(c)) continue;
        out.push_back({c, join_monomial(power(V::name, i), outer)});
    }
}

template <class C, class V>
void collect_terms(const Poly<C, V>& p, const std::string& outer, std::vector<Term>& out) {
    for (int i = p.degree(); i >= 0; --i) collect_terms(p[static_cast<std::size_t>(i)], join_monomial(power(V::name, i), outer), out);
}

std::string magnitude(const Term& t) {
    Rational a = abs(t.coeff);
    if (t.monomial.empty()) return a.get_str();
    if (a == 1) return t.monomial;
    return a.get_str() + "*" + t.monomial;
}

std::string render(const std::vector<Term>& terms, bool spaced) {
    if (terms.empty()) return "0";
    std::string plus = spaced ? " + " : "+";
    std::string minus = spaced ? " - " : "-";
    std::string s;
    for (std::size_t k = 0; k < terms.size(); ++k) {
        bool neg = sgn(terms[k].coeff) < 0;
        if (k == 0) {
            if (neg) s += "-";
        } else {
            s += neg ? minus : plus;
        }
        s += magnitude(terms[k]);
    }
    return s;
}

template <class P>
std::string render_poly(const P& p, bool spaced) {
    std::vector<Term> terms;
    collect_terms(p, "", terms);
    return render(terms, spaced);
}

}  // namespace

BiPoly substitute_signs(const BiPoly& p, bool flip_x, bool flip_t) {
    std::vector<UniPoly> cs = p.coeffs();
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (flip_x) cs[i] = negate_variable(cs[i]);
        if (flip_t && (i % 2 == 1)) cs[i] = -cs[i];
    }
    return BiPoly(std::move(cs));
}

std::pair<BiPoly, Rational> integer_normalize(const BiPoly& p) {
    if (p.is_zero()) return {p, Rational(1)};
    Integer d = common_denominator(p);
    BiPoly q = leaf_scale(p, Rational(d));
    Integer g = leaf_content(q);
    Rational scale(g, d);
    scale.canonicalize();
    q = leaf_scale(q, Rational(Integer(1), g));
    for (const auto& c : q.coeffs()) {
        if (c.is_zero()) continue;
        for (const auto& a : c.coeffs()) {
            if (is_zero(a)) continue;
            if (sgn(a) < 0) {
                q = -q;
                scale = -scale;
            }
            return {q, scale};
        }
    }
    return {q, scale};
}

std::pair<UniPoly, Rational> integer_normalize(const UniPoly& p) {
    auto [q, c] = integer_normalize(BiPoly::constant(p));
    return {q[0], c};
}

std::string to_string(const UniPoly& p) { return render_poly(p, true); }
std::string to_string(const BiPoly& p) { return render_poly(p, true); }
std::string to_string(const YPoly& p) { return render_poly(p, true); }
std::string to_string(const RatPolyT& p) { return render_poly(p, true); }
std::string to_string(const RatPolyY& p) { return render_poly(p, true); }
std::string to_compact_string(const UniPoly& p) { return render_poly(p, false); }

std::ostream& operator<<(std::ostream& os, const UniPoly& p) { return os << to_string(p); }
std::ostream& operator<<(std::ostream& os, const BiPoly& p) { return os << to_string(p); }
std::ostream& operator<<(std::ostream& os, const YPoly& p) { return os << to_string(p); }
std::ostream& operator<<(std::ostream& os, const RatPolyT& p) { return os << to_string(p); }
std::ostream& operator<<(std::ostream& os, const RatPolyY& p) { return os << to_string(p); }

std::string to_collected_string(const BiPoly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    auto emit = [&](bool neg, const std::string& body) {
        if (first) {
            if (neg) s += "-";
        } else {
            s += neg ? " - " : " + ";
        }
        s += body;
        first = false;
    };
    for (int i = 0; i <= p.degree(); ++i) {
        const UniPoly& c = p[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        std::string tpart = power('t', i);
        std::vector<Term> terms;
        collect_terms(c, tpart, terms);
        if (terms.size() == 1 || i == 0) {
            for (const auto& t : terms) emit(sgn(t.coeff) < 0, magnitude(t));
            continue;
        }
        bool neg = sgn(c.lc()) < 0;
        emit(neg, "(" + to_compact_string(neg ? UniPoly(-c) : c) + ")*" + tpart);
    }
    return s;
}

}  // namespace chebgf
