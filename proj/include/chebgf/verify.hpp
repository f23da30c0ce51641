#pragma once

// Mechanical checks of the exact identities and empirical facts about the
// H_m^(s) family. Every check returns a CheckReport; a failing report
// carries the first counterexample found.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "chebgf/rational.hpp"

namespace chebgf {

struct Counterexample {
    std::string params;
    std::string lhs;
    std::string rhs;
};

struct CheckReport {
    std::string name;
    std::string params;  // parameter range covered
    bool passed = true;
    std::optional<Counterexample> counterexample;
};

nlohmann::json to_json(const CheckReport& r);
std::string to_text(const CheckReport& r);

inline constexpr double kDefaultRelTol = 1e-8;
inline constexpr unsigned kDefaultMaxDiscriminantDegree = 24;

/// Discriminant of K_s f_m in y against C_m^(s) x^(2s-1) (x + 4^s) H_m^(s)(x)^4,
/// K_s = (1+y)^(2s) + x y^s, f_m = (y^(2m+1) - 1)/(y - 1). Throws
/// std::invalid_argument when 2s + 2m exceeds max_degree.
CheckReport check_discriminant(unsigned s, unsigned m, unsigned max_degree = kDefaultMaxDiscriminantDegree);

/// prod_{k=1..m} (x0 + 4^s cos^(2s)(k pi/(2m+1))) in doubles against the exact H_m^(s)(x0).
CheckReport numeric_H_oracle(unsigned s, unsigned m, const Rational& x0, double rel_tol = kDefaultRelTol);

/// U_{2m}(x) = (-1)^m H_m^(1)(-4x^2) for m <= m_max, and
/// (sum U_n t^n)(1 - 2xt + t^2) = 1 to the same order.
CheckReport check_chebyshev_relation(unsigned m_max);

/// H_0 = 1, H_1 = x + 1, H_2 = x^2 + L_{2s} x + 1 for s <= s_max.
CheckReport check_fact_initial(unsigned s_max);

/// Every coefficient of H_m^(s) is a non-negative integer.
CheckReport check_fact_nonneg(unsigned s_max, unsigned m_max);

/// [x^1] H_m^(s) = trace(M^(2s)) for the 0/1 matrix with a_ij = 1 iff i + j <= m + 1.
CheckReport check_trace(unsigned s_max, unsigned m_max);

/// deg_t D_s = 2^s, deg_t N_s = 2^s - 1, deg_x D_s = B_{s-1}, deg_x N_s = B_{s-1} - 1.
CheckReport check_fact_degrees(unsigned s_max);

/// sum_{k<=s/2} C(s,k)(s-2k) = C(s, s/2+1)(s/2+1) = s B_{s-1}.
CheckReport check_degree_identity(unsigned s_max);

/// G_m^(s)(x^s) = (-1)^(m(s-1)) prod_j G_m^(1)(e^j x) at complex sample
/// points with |x| <= 2, e a primitive s-th root of unity.
CheckReport check_roots_of_unity(unsigned s, unsigned m, double rel_tol = kDefaultRelTol);

Integer lucas(unsigned n);
Integer central_binomial(unsigned n);

// ---------------------------------------------------------------------------
// Suites: named groups of checks over parameter ranges.

struct SuiteRanges {
    std::optional<unsigned> s_max;
    std::optional<unsigned> m_max;
    double rel_tol = kDefaultRelTol;
};

/// Names accepted by run_suite, in the order run_all uses.
const std::vector<std::string>& suite_names();

/// One aggregated report per suite. Throws std::invalid_argument for an unknown name.
CheckReport run_suite(const std::string& name, const SuiteRanges& ranges = {});

std::vector<CheckReport> run_all(const SuiteRanges& ranges = {});

}  // namespace chebgf
