#pragma once

// Scalar layer: exact integers and rationals backed by GMP, plus the small
// set of free functions the polynomial templates need from a coefficient
// ring (zero test, exact division, rendering).

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace chebgf {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Integer& a) { return sgn(a) == 0; }
inline bool is_zero(const Rational& a) { return sgn(a) == 0; }

inline bool is_one(const Integer& a) { return a == 1; }
inline bool is_one(const Rational& a) { return a == 1; }

/// Division that is known to leave no remainder.
inline Integer exact_div(const Integer& a, const Integer& b) {
    if (is_zero(b)) throw std::domain_error("exact_div: division by zero");
    Integer q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Rational exact_div(const Rational& a, const Rational& b) {
    if (is_zero(b)) throw std::domain_error("exact_div: division by zero");
    return Rational(a / b);
}

inline Integer pow(const Integer& a, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), e);
    return r;
}

inline Rational pow(const Rational& a, unsigned long e) {
    Rational r(pow(Integer(a.get_num()), e), pow(Integer(a.get_den()), e));
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& a) { return a.get_den() == 1; }

inline std::string to_string(const Integer& a) { return a.get_str(); }
inline std::string to_string(const Rational& a) { return a.get_str(); }

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace chebgf
