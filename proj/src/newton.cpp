#include "chebgf/newton.hpp"

#include <stdexcept>

#include "chebgf/series.hpp"

namespace chebgf {

std::vector<UniPoly> power_sums(const BiPoly& p, std::size_t count) {
    if (p.is_zero()) throw std::invalid_argument("power_sums: zero polynomial");
    if (p.lc().degree() != 0) throw std::domain_error("power_sums: leading coefficient is not a nonzero rational");
    int n = p.degree();
    BiPoly monic = leaf_scale(p, Rational(1 / p.lc()[0]));
    TruncSeries num(reverse(derivative(monic), n - 1), count);
    TruncSeries den(reverse(monic, n), count);
    return series_div(num, den).coeffs();
}

BiPoly from_power_sums(const std::vector<UniPoly>& sums, int n) {
    if (n < 0) throw std::invalid_argument("from_power_sums: negative degree");
    if (sums.size() < static_cast<std::size_t>(n) + 1) throw std::invalid_argument("from_power_sums: need at least n+1 power sums");
    if (sums[0] != UniPoly(n)) throw std::invalid_argument("from_power_sums: S_0 does not match the claimed degree");
    // log prod(1 - a_i t) = -sum_{l>=1} S_l t^l / l, i.e. the integral of (S_0 - S)/t.
    std::vector<UniPoly> shifted(sums.size() - 1);
    for (std::size_t l = 1; l < sums.size(); ++l) shifted[l - 1] = -sums[l];
    TruncSeries e = series_exp(series_integrate(TruncSeries(std::move(shifted))));
    return truncate(e.to_poly(), static_cast<std::size_t>(n) + 1);
}

}  // namespace chebgf
