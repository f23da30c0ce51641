#pragma once

// Conversion between a polynomial in t and the power sums of its roots.

#include <cstddef>
#include <vector>

#include "chebgf/poly.hpp"

namespace chebgf {

/// Power sums p_0, ..., p_{count-1} of the roots of p (in t), read off the
/// expansion of rev(p')/rev(p). The leading coefficient of p must be a
/// nonzero rational; p is normalized by it. p_0 = deg p.
std::vector<UniPoly> power_sums(const BiPoly& p, std::size_t count);

/// Inverse of power_sums: given the power sums S_0..S_k (k >= n) of n
/// roots a_i, returns prod (1 - a_i t) as a polynomial of degree <= n.
/// The caller reverses to obtain the monic polynomial with those roots.
/// Throws std::invalid_argument when S_0 != n or too few sums are given.
BiPoly from_power_sums(const std::vector<UniPoly>& sums, int n);

}  // namespace chebgf
