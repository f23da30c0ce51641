#pragma once

// Truncated power series in t with coefficients in Q[x].

#include <cstddef>
#include <vector>

#include "chebgf/poly.hpp"

namespace chebgf {

/// c_0 + c_1 t + ... + c_{ord-1} t^{ord-1} + O(t^ord).
class TruncSeries {
  public:
    TruncSeries() = default;
    explicit TruncSeries(std::vector<UniPoly> coeffs) : coeffs_(std::move(coeffs)) {}

    /// The expansion of a polynomial, truncated to the given order.
    TruncSeries(const BiPoly& p, std::size_t ord);

    static TruncSeries one(std::size_t ord);

    std::size_t order() const { return coeffs_.size(); }
    const UniPoly& operator[](std::size_t i) const { return coeffs_.at(i); }
    const std::vector<UniPoly>& coeffs() const { return coeffs_; }

    /// The known coefficients as a polynomial in t.
    BiPoly to_poly() const { return BiPoly(coeffs_); }

    /// Same series at a lower order.
    TruncSeries truncated(std::size_t ord) const;

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
    friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.coeffs_ == b.coeffs_; }

  private:
    std::vector<UniPoly> coeffs_;
};

/// Product, truncated to the smaller of the two orders.
TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b);

/// q with q*b = a mod t^ord. The constant term of b must be a nonzero
/// rational; throws std::domain_error otherwise.
TruncSeries series_div(const TruncSeries& a, const TruncSeries& b);

/// Term-wise antiderivative with zero constant; the order grows by one.
TruncSeries series_integrate(const TruncSeries& a);

/// Term-wise derivative; the order drops by one.
TruncSeries series_derivative(const TruncSeries& a);

/// exp(a) for a with zero constant term; throws std::domain_error otherwise.
TruncSeries series_exp(const TruncSeries& a);

inline TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) { return series_mul(a, b); }

}  // namespace chebgf
