#include "chebgf/resultant.hpp"

namespace chebgf {

namespace {

// Q(y) in Q[x][y]/(y^s - x) written as sum_{r<s} a_r(x) y^r.
std::vector<IntPolyX> split_by_residue(const Poly<Integer, VarY>& q, unsigned s) {
    std::vector<std::vector<Integer>> parts(s);
    for (std::size_t i = 0; i < q.size(); ++i) {
        auto& part = parts[i % s];
        std::size_t k = i / s;
        if (part.size() <= k) part.resize(k + 1, Integer(0));
        part[k] = q[i];
    }
    std::vector<IntPolyX> out;
    out.reserve(s);
    for (auto& p : parts) out.emplace_back(std::move(p));
    return out;
}

IntPolyX norm_determinant(const Poly<Integer, VarY>& q, unsigned s) {
    auto a = split_by_residue(q, s);
    const IntPolyX x = IntPolyX::variable();
    Matrix<IntPolyX> m(s, s);
    for (unsigned i = 0; i < s; ++i)
        for (unsigned j = 0; j < s; ++j) m(i, j) = i >= j ? a[i - j] : x * a[i + s - j];
    return bareiss_determinant(std::move(m));
}

}  // namespace

UniPoly resultant_power_sub(const RatPolyY& q, unsigned s, PowerSubMethod method) {
    if (s == 0) throw std::invalid_argument("resultant_power_sub: s must be positive");
    if (q.is_zero()) return {};
    if (method == PowerSubMethod::kSylvester) {
        std::vector<UniPoly> f(s + 1);
        f[0] = -UniPoly::variable();
        f[s] = UniPoly(1);
        YPoly g = map_coeffs(q, [](const Rational& c) { return UniPoly::constant(c); });
        return resultant(YPoly(std::move(f)), g);
    }
    // y^s - x is monic, so the resultant is the norm of Q(y) in the
    // extension; scale Q to integer coefficients first.
    Integer d = common_denominator(q);
    auto qi = to_integer_coeffs(leaf_scale(q, Rational(d)));
    UniPoly r = to_rational_coeffs(norm_determinant(qi, s));
    return leaf_scale(r, Rational(Integer(1), pow(d, s)));
}

UniPoly discriminant(const YPoly& p) {
    const int d = p.degree();
    if (d < 1) throw std::domain_error("discriminant: degree must be at least 1");
    if (p.lc().degree() != 0) throw std::domain_error("discriminant: leading coefficient is not a nonzero rational");
    UniPoly r = resultant(p, derivative(p));
    Rational scale = 1 / p.lc()[0];
    if ((d * (d - 1) / 2) % 2 == 1) scale = -scale;
    return r * scale;
}

}  // namespace chebgf
