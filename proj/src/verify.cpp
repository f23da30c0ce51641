#include "chebgf/verify.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "chebgf/genfun.hpp"
#include "chebgf/matrix.hpp"
#include "chebgf/resultant.hpp"
#include "chebgf/series.hpp"

namespace chebgf {

namespace {

std::string sm(unsigned s, unsigned m) { return "s=" + std::to_string(s) + ", m=" + std::to_string(m); }

CheckReport pass(std::string name, std::string params) { return {std::move(name), std::move(params), true, std::nullopt}; }

CheckReport fail(std::string name, std::string params, Counterexample ce) {
    return {std::move(name), std::move(params), false, std::move(ce)};
}

bool close(double a, double b, double rel_tol) {
    double scale = std::max(std::abs(a), std::abs(b));
    if (scale == 0.0) return true;
    return std::abs(a - b) <= rel_tol * scale;
}

bool close(std::complex<double> a, std::complex<double> b, double rel_tol) {
    double scale = std::max(std::abs(a), std::abs(b));
    if (scale == 0.0) return true;
    return std::abs(a - b) <= rel_tol * scale;
}

std::string fmt_double(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

std::string fmt_complex(std::complex<double> v) { return "(" + fmt_double(v.real()) + ", " + fmt_double(v.imag()) + ")"; }

std::complex<double> eval_complex(const UniPoly& p, std::complex<double> z) {
    std::complex<double> acc = 0.0;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * z + it->get_d();
    return acc;
}

/// Aggregate: run a check over a range and keep the first failure.
template <class Fn>
CheckReport sweep(std::string name, std::string params, Fn&& body) {
    std::optional<CheckReport> first_failure;
    body([&](const CheckReport& r) {
        if (!r.passed && !first_failure) first_failure = r;
        return r.passed;
    });
    if (first_failure) return fail(std::move(name), std::move(params), *first_failure->counterexample);
    return pass(std::move(name), std::move(params));
}

}  // namespace

nlohmann::json to_json(const CheckReport& r) {
    nlohmann::json j;
    j["name"] = r.name;
    j["params"] = r.params;
    j["status"] = r.passed ? "pass" : "fail";
    if (r.counterexample) {
        j["counterexample"] = {{"params", r.counterexample->params}, {"lhs", r.counterexample->lhs}, {"rhs", r.counterexample->rhs}};
    } else {
        j["counterexample"] = nullptr;
    }
    return j;
}

std::string to_text(const CheckReport& r) {
    std::string s = (r.passed ? "PASS  " : "FAIL  ") + r.name + " [" + r.params + "]";
    if (r.counterexample) {
        s += "\n      at " + r.counterexample->params;
        s += "\n      lhs: " + r.counterexample->lhs;
        s += "\n      rhs: " + r.counterexample->rhs;
    }
    return s;
}

Integer lucas(unsigned n) {
    Integer a = 2, b = 1;
    for (unsigned i = 0; i < n; ++i) {
        Integer c = a + b;
        a = b;
        b = c;
    }
    return a;
}

Integer central_binomial(unsigned n) { return binomial(n, n / 2); }

CheckReport check_discriminant(unsigned s, unsigned m, unsigned max_degree) {
    if (s == 0 || m == 0) throw std::invalid_argument("check_discriminant: s and m must be positive");
    if (2 * s + 2 * m > max_degree)
        throw std::invalid_argument("check_discriminant: deg_y = 2s+2m = " + std::to_string(2 * s + 2 * m) + " exceeds the size guard " +
                                    std::to_string(max_degree));
    const UniPoly x = UniPoly::variable();
    const YPoly one_plus_y{UniPoly(1), UniPoly(1)};
    YPoly k = pow(one_plus_y, 2 * s) + YPoly::monomial(x, s);
    YPoly f = exact_div(YPoly::monomial(UniPoly(1), 2 * m + 1) - YPoly(1), YPoly{UniPoly(-1), UniPoly(1)});
    UniPoly lhs = discriminant(k * f);

    Integer c = pow(Integer(2 * m + 1), 2 * m - 1) * pow(Integer(s), 2 * s);
    if (m % 2 == 1) c = -c;
    UniPoly h = hms_poly(s, m);
    UniPoly rhs = UniPoly::monomial(Rational(c), 2 * s - 1) * (x + UniPoly(pow(Integer(4), s).get_si())) * pow(h, 4);
    std::string name = "discriminant";
    if (lhs == rhs) return pass(name, sm(s, m));
    return fail(name, sm(s, m), {sm(s, m), to_string(lhs), to_string(rhs)});
}

CheckReport numeric_H_oracle(unsigned s, unsigned m, const Rational& x0, double rel_tol) {
    const double xd = x0.get_d();
    double prod = 1.0;
    for (unsigned k = 1; k <= m; ++k) {
        double c = std::cos(k * std::numbers::pi / (2.0 * m + 1.0));
        prod *= xd + std::pow(4.0, s) * std::pow(c, 2.0 * s);
    }
    Rational exact = eval(hms_poly(s, m), x0);
    double ed = exact.get_d();
    std::string params = sm(s, m) + ", x0=" + x0.get_str();
    if (close(prod, ed, rel_tol)) return pass("numeric_H_oracle", params);
    return fail("numeric_H_oracle", params, {params, fmt_double(prod), exact.get_str()});
}

CheckReport check_chebyshev_relation(unsigned m_max) {
    const std::string name = "chebyshev_relation";
    const std::string params = "m<=" + std::to_string(m_max);
    const UniPoly two_x{0, 2};
    std::vector<UniPoly> u{UniPoly(1), two_x};
    while (u.size() < 2 * m_max + 1) u.push_back(two_x * u[u.size() - 1] - u[u.size() - 2]);

    const UniPoly minus_four_x2{0, 0, -4};
    auto g1 = h_family(1, m_max);
    for (unsigned m = 0; m <= m_max; ++m) {
        UniPoly rhs = compose(g1.polys[m], minus_four_x2);
        if (m % 2 == 1) rhs = -rhs;
        if (u[2 * m] != rhs) return fail(name, params, {"m=" + std::to_string(m), to_string(u[2 * m]), to_string(rhs)});
    }
    const std::size_t ord = 2 * m_max + 1;
    TruncSeries us(std::vector<UniPoly>(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(ord)));
    TruncSeries denom(BiPoly{UniPoly(1), UniPoly{0, -2}, UniPoly(1)}, ord);
    TruncSeries prod = series_mul(us, denom);
    if (prod != TruncSeries::one(ord))
        return fail(name, params, {"order " + std::to_string(ord), to_string(prod.to_poly()), "1"});
    return pass(name, params);
}

CheckReport check_fact_initial(unsigned s_max) {
    const std::string name = "fact_initial";
    const std::string params = "s<=" + std::to_string(s_max);
    for (unsigned s = 1; s <= s_max; ++s) {
        auto fam = h_family(s, 2);
        std::vector<UniPoly> expected{UniPoly(1), UniPoly{1, 1}, UniPoly{Rational(1), Rational(lucas(2 * s)), Rational(1)}};
        for (std::size_t m = 0; m < 3; ++m) {
            if (fam.polys[m] != expected[m])
                return fail(name, params, {sm(s, static_cast<unsigned>(m)), to_string(fam.polys[m]), to_string(expected[m])});
        }
    }
    return pass(name, params);
}

CheckReport check_fact_nonneg(unsigned s_max, unsigned m_max) {
    const std::string name = "fact_nonneg";
    const std::string params = "s<=" + std::to_string(s_max) + ", m<=" + std::to_string(m_max);
    for (unsigned s = 1; s <= s_max; ++s) {
        auto fam = h_family(s, m_max);
        for (unsigned m = 0; m <= m_max; ++m) {
            const UniPoly& h = fam.polys[m];
            for (const auto& c : h.coeffs()) {
                if (!is_integer(c) || sgn(c) < 0) return fail(name, params, {sm(s, m), to_string(h), "non-negative integer coefficients"});
            }
        }
    }
    return pass(name, params);
}

CheckReport check_trace(unsigned s_max, unsigned m_max) {
    const std::string name = "trace";
    const std::string params = "s<=" + std::to_string(s_max) + ", m<=" + std::to_string(m_max);
    for (unsigned s = 1; s <= s_max; ++s) {
        auto fam = h_family(s, m_max);
        for (unsigned m = 1; m <= m_max; ++m) {
            Matrix<Integer> a(m, m);
            for (unsigned i = 1; i <= m; ++i)
                for (unsigned j = 1; j <= m; ++j) a(i - 1, j - 1) = (i + j <= m + 1) ? 1 : 0;
            Integer tr = matrix_pow(a, 2 * s).trace();
            Rational c1 = fam.polys[m][1];
            if (c1 != Rational(tr)) return fail(name, params, {sm(s, m), c1.get_str(), tr.get_str()});
        }
    }
    return pass(name, params);
}

CheckReport check_fact_degrees(unsigned s_max) {
    const std::string name = "fact_degrees";
    const std::string params = "s<=" + std::to_string(s_max);
    for (unsigned s = 1; s <= s_max; ++s) {
        RatFun f = compute_Fs(s);
        const int n = 1 << s;
        const int b = static_cast<int>(central_binomial(s - 1).get_si());
        const int got[4] = {f.denominator().degree(), f.numerator().degree(), inner_degree(f.denominator()), inner_degree(f.numerator())};
        const int want[4] = {n, n - 1, b, b - 1};
        auto show = [](const int* d) {
            return "deg_t D=" + std::to_string(d[0]) + ", deg_t N=" + std::to_string(d[1]) + ", deg_x D=" + std::to_string(d[2]) +
                   ", deg_x N=" + std::to_string(d[3]);
        };
        if (!std::equal(got, got + 4, want)) return fail(name, params, {"s=" + std::to_string(s), show(got), show(want)});
    }
    return pass(name, params);
}

CheckReport check_degree_identity(unsigned s_max) {
    const std::string name = "degree_identity";
    const std::string params = "s<=" + std::to_string(s_max);
    for (unsigned s = 1; s <= s_max; ++s) {
        Integer sum = 0;
        for (unsigned k = 0; k <= s / 2; ++k) sum += binomial(s, k) * (static_cast<long>(s) - 2 * static_cast<long>(k));
        Integer middle = binomial(s, s / 2 + 1) * (s / 2 + 1);
        Integer rhs = central_binomial(s - 1) * s;
        if (sum != rhs || middle != rhs)
            return fail(name, params, {"s=" + std::to_string(s), sum.get_str() + " / " + middle.get_str(), rhs.get_str()});
    }
    return pass(name, params);
}

CheckReport check_roots_of_unity(unsigned s, unsigned m, double rel_tol) {
    const std::string name = "roots_of_unity";
    const UniPoly gs = gms_poly(s, m);
    const UniPoly g1 = g1_sequence(m).back();
    std::mt19937_64 rng(0x5eedu + 131u * s + m);
    std::uniform_real_distribution<double> radius(0.25, 2.0), angle(0.0, 2.0 * std::numbers::pi);
    const std::complex<double> eps = std::polar(1.0, 2.0 * std::numbers::pi / s);
    const double sign = (static_cast<unsigned long>(m) * (s - 1)) % 2 == 1 ? -1.0 : 1.0;
    for (int sample = 0; sample < 4; ++sample) {
        std::complex<double> z = std::polar(radius(rng), angle(rng));
        std::complex<double> lhs = eval_complex(gs, std::pow(z, static_cast<int>(s)));
        std::complex<double> rhs = sign;
        std::complex<double> w = z;
        for (unsigned j = 0; j < s; ++j) {
            rhs *= eval_complex(g1, w);
            w *= eps;
        }
        if (!close(lhs, rhs, rel_tol)) return fail(name, sm(s, m), {sm(s, m) + ", x0=" + fmt_complex(z), fmt_complex(lhs), fmt_complex(rhs)});
    }
    return pass(name, sm(s, m));
}

// ---------------------------------------------------------------------------

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"discriminant", "numeric", "chebyshev", "initial", "nonneg",
                                                "trace",        "degrees", "degree-identity", "roots-of-unity"};
    return names;
}

namespace {

CheckReport dispatch_suite(const std::string& name, const SuiteRanges& r) {
    auto s_or = [&](unsigned d) { return r.s_max.value_or(d); };
    auto m_or = [&](unsigned d) { return r.m_max.value_or(d); };

    if (name == "discriminant") {
        unsigned smax = s_or(3), mmax = m_or(3);
        std::string params = "s<=" + std::to_string(smax) + ", m<=" + std::to_string(mmax) + ", plus (1,5)";
        return sweep("discriminant", params, [&](auto&& record) {
            for (unsigned s = 1; s <= smax; ++s)
                for (unsigned m = 1; m <= mmax; ++m) {
                    if (2 * s + 2 * m > kDefaultMaxDiscriminantDegree) continue;
                    if (!record(check_discriminant(s, m))) return;
                }
            record(check_discriminant(1, 5));
        });
    }
    if (name == "numeric") {
        unsigned smax = s_or(4), mmax = m_or(6);
        const Rational points[] = {Rational(1), Rational(1, 2), Rational(3)};
        std::string params = "s<=" + std::to_string(smax) + ", m<=" + std::to_string(mmax) + ", x0 in {1, 1/2, 3}";
        return sweep("numeric_H_oracle", params, [&](auto&& record) {
            for (unsigned s = 1; s <= smax; ++s)
                for (unsigned m = 0; m <= mmax; ++m)
                    for (const auto& x0 : points)
                        if (!record(numeric_H_oracle(s, m, x0, r.rel_tol))) return;
        });
    }
    if (name == "chebyshev") return check_chebyshev_relation(m_or(8));
    if (name == "initial") return check_fact_initial(s_or(6));
    if (name == "nonneg") return check_fact_nonneg(s_or(5), m_or(10));
    if (name == "trace") return check_trace(s_or(4), m_or(8));
    if (name == "degrees") return check_fact_degrees(s_or(5));
    if (name == "degree-identity") return check_degree_identity(s_or(12));
    if (name == "roots-of-unity") {
        unsigned smax = s_or(4), mmax = m_or(5);
        std::string params = "s<=" + std::to_string(smax) + ", m<=" + std::to_string(mmax);
        return sweep("roots_of_unity", params, [&](auto&& record) {
            for (unsigned s = 1; s <= smax; ++s)
                for (unsigned m = 0; m <= mmax; ++m)
                    if (!record(check_roots_of_unity(s, m, r.rel_tol))) return;
        });
    }
    throw std::invalid_argument("unknown verification suite: " + name);
}

}  // namespace

CheckReport run_suite(const std::string& name, const SuiteRanges& ranges) {
    CheckReport report = dispatch_suite(name, ranges);
    report.name = name;
    return report;
}

std::vector<CheckReport> run_all(const SuiteRanges& ranges) {
    std::vector<CheckReport> out;
    for (const auto& n : suite_names()) out.push_back(run_suite(n, ranges));
    return out;
}

}  // namespace chebgf
