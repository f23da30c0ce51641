#include "chebgf/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace chebgf {

TruncSeries::TruncSeries(const BiPoly& p, std::size_t ord) : coeffs_(ord) {
    for (std::size_t i = 0; i < ord; ++i) coeffs_[i] = p[i];
}

TruncSeries TruncSeries::one(std::size_t ord) {
    std::vector<UniPoly> cs(ord);
    if (ord > 0) cs[0] = UniPoly(1);
    return TruncSeries(std::move(cs));
}

TruncSeries TruncSeries::truncated(std::size_t ord) const {
    if (ord > order()) throw std::invalid_argument("TruncSeries::truncated: order exceeds known terms");
    return TruncSeries(std::vector<UniPoly>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(ord)));
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    std::size_t n = std::min(a.order(), b.order());
    std::vector<UniPoly> cs(n);
    for (std::size_t i = 0; i < n; ++i) cs[i] = a[i] + b[i];
    return TruncSeries(std::move(cs));
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
    std::size_t n = std::min(a.order(), b.order());
    std::vector<UniPoly> cs(n);
    for (std::size_t i = 0; i < n; ++i) cs[i] = a[i] - b[i];
    return TruncSeries(std::move(cs));
}

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b) {
    std::size_t n = std::min(a.order(), b.order());
    std::vector<UniPoly> cs(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < n; ++j) {
            if (!b[j].is_zero()) cs[i + j] += a[i] * b[j];
        }
    }
    return TruncSeries(std::move(cs));
}

TruncSeries series_div(const TruncSeries& a, const TruncSeries& b) {
    std::size_t n = std::min(a.order(), b.order());
    if (n == 0) return {};
    const UniPoly& b0 = b[0];
    if (b0.degree() != 0) throw std::domain_error("series_div: constant term of divisor is not a nonzero rational");
    Rational inv = 1 / b0[0];
    std::vector<UniPoly> q(n);
    for (std::size_t k = 0; k < n; ++k) {
        UniPoly acc = a[k];
        for (std::size_t j = 1; j <= k; ++j) {
            if (!b[j].is_zero() && !q[k - j].is_zero()) acc -= b[j] * q[k - j];
        }
        q[k] = acc * inv;
    }
    return TruncSeries(std::move(q));
}

TruncSeries series_integrate(const TruncSeries& a) {
    std::vector<UniPoly> cs(a.order() + 1);
    for (std::size_t l = 0; l < a.order(); ++l) cs[l + 1] = a[l] * Rational(1, static_cast<unsigned long>(l + 1));
    return TruncSeries(std::move(cs));
}

TruncSeries series_derivative(const TruncSeries& a) {
    if (a.order() == 0) return {};
    std::vector<UniPoly> cs(a.order() - 1);
    for (std::size_t l = 1; l < a.order(); ++l) cs[l - 1] = a[l] * Rational(static_cast<long>(l));
    return TruncSeries(std::move(cs));
}

TruncSeries series_exp(const TruncSeries& a) {
    std::size_t n = a.order();
    if (n == 0) return {};
    if (!a[0].is_zero()) throw std::domain_error("series_exp: nonzero constant term");
    // k e_k = sum_{j=1..k} j a_j e_{k-j}
    std::vector<UniPoly> weighted(n);
    for (std::size_t j = 1; j < n; ++j) weighted[j] = a[j] * Rational(static_cast<long>(j));
    std::vector<UniPoly> e(n);
    e[0] = UniPoly(1);
    for (std::size_t k = 1; k < n; ++k) {
        UniPoly acc;
        for (std::size_t j = 1; j <= k; ++j) {
            if (!weighted[j].is_zero() && !e[k - j].is_zero()) acc += weighted[j] * e[k - j];
        }
        e[k] = acc * Rational(1, static_cast<unsigned long>(k));
    }
    return TruncSeries(std::move(e));
}

}  // namespace chebgf
