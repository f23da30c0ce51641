#pragma once

// Generating functions of the polynomial families H_m^(s)(x).
//
// G_m^(1) satisfies G_{m+2} = (x-2) G_{m+1} - G_m with G_0 = 1, G_1 = x-1.
// G_m^(s) is the monic polynomial whose roots are the s-th powers of the
// roots of G_m^(1), and H_m^(s)(x) = (-1)^m G_m^(s)(-x). The series
// F_s(x,t) = sum_m H_m^(s)(x) t^m is rational in t of degree at most 2^s.

#include <cstddef>
#include <vector>

#include "chebgf/poly.hpp"
#include "chebgf/resultant.hpp"

namespace chebgf {

/// numerator / denominator in Q[x][t], kept in canonical form: no common
/// factor; if denominator(x, 0) is a nonzero constant it is scaled to 1,
/// otherwise both are integral and primitive with a positive lowest
/// denominator coefficient.
class RatFun {
  public:
    RatFun() : numerator_(), denominator_(1) {}

    /// Canonicalizes; throws std::domain_error on a zero denominator.
    RatFun(BiPoly numerator, BiPoly denominator);

    const BiPoly& numerator() const { return numerator_; }
    const BiPoly& denominator() const { return denominator_; }

    friend bool operator==(const RatFun& a, const RatFun& b) {
        return a.numerator_ == b.numerator_ && a.denominator_ == b.denominator_;
    }

  private:
    BiPoly numerator_;
    BiPoly denominator_;
};

/// a == b as rational functions (cross-multiplication).
bool equivalent(const RatFun& a, const RatFun& b);
bool equivalent(const RatFun& a, const BiPoly& numerator, const BiPoly& denominator);

/// True when num and den are proven to share no factor of positive degree
/// in t, via a modular specialization in x. False means "not proven".
bool certify_coprime_in_t(const BiPoly& num, const BiPoly& den);

struct HFamily {
    unsigned s = 1;
    std::vector<UniPoly> polys;  // H_0^(s) .. H_M^(s)
};

/// G_0^(1) .. G_{m_max}^(1).
std::vector<UniPoly> g1_sequence(std::size_t m_max);

/// G_m^(s)(x) = Res_y(G_m^(1)(y), x - y^s).
UniPoly gms_poly(unsigned s, std::size_t m, PowerSubMethod method = PowerSubMethod::kNorm);

/// H_m^(s)(x) = (-1)^m G_m^(s)(-x).
UniPoly hms_poly(unsigned s, std::size_t m, PowerSubMethod method = PowerSubMethod::kNorm);

HFamily h_family(unsigned s, std::size_t m_max, PowerSubMethod method = PowerSubMethod::kNorm);

/// First ord coefficients of the t-expansion. The denominator's constant
/// term must be a nonzero rational.
std::vector<UniPoly> series_expand_ratfun(const RatFun& f, std::size_t ord);

/// Generating function of the term-wise product of the expansions of u and v.
/// The denominator comes from a resultant whose roots are the pairwise
/// products of characteristic roots; the numerator is the truncation of
/// denominator * product series to ord terms, so ord must exceed the
/// numerator's t-degree.
RatFun hadamard(const RatFun& u, const RatFun& v, std::size_t ord);

/// Same, with ord chosen from the degrees of the inputs.
RatFun hadamard(const RatFun& u, const RatFun& v);

struct FsOptions {
    unsigned threads = 1;
    PowerSubMethod method = PowerSubMethod::kNorm;
};

struct FsComputation {
    RatFun F;
    BiPoly self_reciprocal;  // characteristic polynomial in (x^s, t), before the sign flips
    BiPoly denominator;      // before reduction
    BiPoly numerator;        // before reduction
};

/// Rational generating function F_s via power sums, norms, and truncated
/// numerator recovery. Throws PipelineError if an internal identity fails.
FsComputation compute_Fs_detailed(unsigned s, const FsOptions& options = {});

inline RatFun compute_Fs(unsigned s, const FsOptions& options = {}) { return compute_Fs_detailed(s, options).F; }

/// Largest s accepted by compute_Fs.
inline constexpr unsigned kMaxS = 16;

struct PipelineError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace chebgf
