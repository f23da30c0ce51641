#include "chebgf/genfun.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <thread>

#include "chebgf/newton.hpp"
#include "chebgf/series.hpp"

namespace chebgf {

namespace {

// Arithmetic modulo the Mersenne prime 2^61 - 1.
constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kPrime);
}

std::uint64_t mod_sub(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kPrime - b; }

std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mod_mul(r, a);
        a = mod_mul(a, a);
        e >>= 1;
    }
    return r;
}

std::uint64_t mod_inv(std::uint64_t a) { return mod_pow(a, kPrime - 2); }

std::uint64_t reduce(const Integer& a) {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), a.get_mpz_t(), kPrime);
    return r.get_ui();
}

using ModPoly = std::vector<std::uint64_t>;

void trim(ModPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

ModPoly specialize(const IntBiPoly& p, std::uint64_t x0) {
    ModPoly out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        std::uint64_t acc = 0;
        const auto& c = p[i].coeffs();
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = (mod_mul(acc, x0) + reduce(*it)) % kPrime;
        out[i] = acc;
    }
    trim(out);
    return out;
}

std::size_t mod_gcd_degree(ModPoly a, ModPoly b) {
    while (!b.empty()) {
        std::uint64_t inv = mod_inv(b.back());
        while (a.size() >= b.size()) {
            std::uint64_t q = mod_mul(a.back(), inv);
            std::size_t shift = a.size() - b.size();
            for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = mod_sub(a[shift + j], mod_mul(q, b[j]));
            trim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return a.empty() ? 0 : a.size() - 1;
}

IntBiPoly integral_multiple(const BiPoly& p) {
    return to_integer_coeffs(leaf_scale(p, Rational(common_denominator(p))));
}

template <class Fn>
void parallel_for(std::size_t n, unsigned threads, Fn&& fn) {
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < n; i += threads) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

BiPoly lift(const UniPoly& c) { return BiPoly::constant(c); }

}  // namespace

bool certify_coprime_in_t(const BiPoly& num, const BiPoly& den) {
    if (num.is_zero() || den.is_zero()) return false;
    if (num.degree() == 0 || den.degree() == 0) return true;
    IntBiPoly ni = integral_multiple(num), di = integral_multiple(den);
    for (std::uint64_t x0 = 3; x0 < 3 + 16; ++x0) {
        ModPoly nd = specialize(ni, x0), dd = specialize(di, x0);
        if (dd.size() != den.size()) continue;  // leading coefficient vanished
        if (nd.empty()) continue;
        return mod_gcd_degree(nd, dd) == 0;
    }
    return false;
}

RatFun::RatFun(BiPoly numerator, BiPoly denominator) {
    if (denominator.is_zero()) throw std::domain_error("RatFun: zero denominator");
    if (numerator.is_zero()) {
        numerator_ = {};
        denominator_ = BiPoly(1);
        return;
    }
    // Remove the common factor.
    BiPoly g;
    if (certify_coprime_in_t(numerator, denominator)) {
        g = BiPoly::constant(gcd(content(numerator), content(denominator)));
    } else {
        g = gcd(numerator, denominator);
    }
    if (!is_one(g)) {
        numerator = exact_div(numerator, g);
        denominator = exact_div(denominator, g);
    }
    const UniPoly& d0 = denominator[0];
    if (d0.degree() == 0) {
        Rational inv = 1 / d0[0];
        numerator_ = leaf_scale(numerator, inv);
        denominator_ = leaf_scale(denominator, inv);
        return;
    }
    // Joint integer normalization.
    Integer l;
    mpz_lcm(l.get_mpz_t(), common_denominator(numerator).get_mpz_t(), common_denominator(denominator).get_mpz_t());
    numerator = leaf_scale(numerator, Rational(l));
    denominator = leaf_scale(denominator, Rational(l));
    Integer c;
    mpz_gcd(c.get_mpz_t(), leaf_content(numerator).get_mpz_t(), leaf_content(denominator).get_mpz_t());
    Rational scale(Integer(1), c);
    if (sgn(integer_normalize(denominator).second) < 0) scale = -scale;
    numerator_ = leaf_scale(numerator, scale);
    denominator_ = leaf_scale(denominator, scale);
}

bool equivalent(const RatFun& a, const BiPoly& numerator, const BiPoly& denominator) {
    return a.numerator() * denominator == numerator * a.denominator();
}

bool equivalent(const RatFun& a, const RatFun& b) { return equivalent(a, b.numerator(), b.denominator()); }

std::vector<UniPoly> g1_sequence(std::size_t m_max) {
    std::vector<UniPoly> g;
    g.reserve(m_max + 1);
    g.emplace_back(1);
    if (m_max >= 1) g.push_back(UniPoly{-1, 1});
    const UniPoly step{-2, 1};
    for (std::size_t m = 2; m <= m_max; ++m) g.push_back(step * g[m - 1] - g[m - 2]);
    return g;
}

namespace {

// Res_y(G(y), x - y^s) = (-1)^(m(s+1)) Res_y(y^s - x, G(y)) for deg G = m.
UniPoly gms_from_g1(const UniPoly& g1, unsigned s, PowerSubMethod method) {
    UniPoly r = resultant_power_sub(rename<VarY>(g1), s, method);
    const auto m = static_cast<unsigned long>(g1.degree());
    return (m * (s + 1)) % 2 == 1 ? UniPoly(-r) : r;
}

UniPoly h_from_g(const UniPoly& g, std::size_t m) {
    UniPoly h = negate_variable(g);
    return m % 2 == 1 ? UniPoly(-h) : h;
}

}  // namespace

UniPoly gms_poly(unsigned s, std::size_t m, PowerSubMethod method) {
    if (s == 0) throw std::invalid_argument("gms_poly: s must be positive");
    return gms_from_g1(g1_sequence(m).back(), s, method);
}

UniPoly hms_poly(unsigned s, std::size_t m, PowerSubMethod method) { return h_from_g(gms_poly(s, m, method), m); }

HFamily h_family(unsigned s, std::size_t m_max, PowerSubMethod method) {
    if (s == 0) throw std::invalid_argument("h_family: s must be positive");
    auto g1 = g1_sequence(m_max);
    HFamily fam{s, {}};
    fam.polys.reserve(m_max + 1);
    for (std::size_t m = 0; m <= m_max; ++m) fam.polys.push_back(h_from_g(gms_from_g1(g1[m], s, method), m));
    return fam;
}

std::vector<UniPoly> series_expand_ratfun(const RatFun& f, std::size_t ord) {
    return series_div(TruncSeries(f.numerator(), ord), TruncSeries(f.denominator(), ord)).coeffs();
}

RatFun hadamard(const RatFun& u, const RatFun& v, std::size_t ord) {
    const BiPoly& du = u.denominator();
    const BiPoly& dv = v.denominator();
    if (du[0].is_zero() || dv[0].is_zero()) throw std::domain_error("hadamard: denominator has zero constant term");

    // Characteristic polynomials (reciprocals of the denominators).
    BiPoly pu = reverse(du), pv = reverse(dv);
    using UPoly = Poly<BiPoly, VarU>;
    UPoly p = map_coeffs(rename<VarU>(pu), lift);
    const int n = pv.degree();
    std::vector<BiPoly> qs(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) qs[static_cast<std::size_t>(n - k)] = BiPoly::monomial(pv[static_cast<std::size_t>(k)], static_cast<std::size_t>(k));
    BiPoly charpoly = resultant(p, UPoly(std::move(qs)));
    BiPoly den = reverse(charpoly);

    auto a = series_expand_ratfun(u, ord);
    auto b = series_expand_ratfun(v, ord);
    std::vector<UniPoly> prod(ord);
    for (std::size_t i = 0; i < ord; ++i) prod[i] = a[i] * b[i];
    BiPoly num = series_mul(TruncSeries(den, ord), TruncSeries(std::move(prod))).to_poly();
    return RatFun(std::move(num), std::move(den));
}

RatFun hadamard(const RatFun& u, const RatFun& v) {
    auto excess = [](const RatFun& f) { return f.numerator().degree() - f.denominator().degree(); };
    int deg_den = std::max(0, u.denominator().degree()) * std::max(0, v.denominator().degree());
    int extra = std::max({excess(u), excess(v), -1}) + 1;
    return hadamard(u, v, static_cast<std::size_t>(deg_den + extra));
}

FsComputation compute_Fs_detailed(unsigned s, const FsOptions& options) {
    if (s == 0 || s > kMaxS) throw std::invalid_argument("compute_Fs: s out of range");
    const std::size_t n = std::size_t{1} << s;

    // (1) Power sums Q_l of the roots of t^2 + (2-x) t + 1.
    const BiPoly charpoly1{UniPoly(1), UniPoly{2, -1}, UniPoly(1)};
    std::vector<UniPoly> q = power_sums(charpoly1, n + 1);

    // (2) T_l = Res_y(y^s - x, Q_l(y)): power sums of the roots of the
    // characteristic polynomial, with x standing for x^s.
    std::vector<UniPoly> sums(n + 1);
    parallel_for(n + 1, options.threads, [&](std::size_t l) { sums[l] = resultant_power_sub(rename<VarY>(q[l]), s, options.method); });

    // (3) prod (1 - a_i t). The roots come in reciprocal pairs, so this is
    // also the monic characteristic polynomial itself.
    BiPoly recip = from_power_sums(sums, static_cast<int>(n));
    if (recip.degree() != static_cast<int>(n) || reverse(recip, static_cast<int>(n)) != recip)
        throw PipelineError("compute_Fs: characteristic polynomial is not self-reciprocal of degree 2^s");

    // (4) D_s(x, t) = P(-x, (-1)^s t).
    BiPoly den = substitute_signs(recip, true, s % 2 == 1);

    // (5)-(6) G_m^(1) and G_m^(s) for m < 2^s; then H_m^(s).
    auto g1 = g1_sequence(n - 1);
    std::vector<UniPoly> h(n);
    parallel_for(n, options.threads, [&](std::size_t m) { h[m] = h_from_g(gms_from_g1(g1[m], s, options.method), m); });

    // (7) N_s = D_s * sum_{m<2^s} H_m t^m mod t^(2^s).
    BiPoly num = series_mul(TruncSeries(den, n), TruncSeries(std::move(h))).to_poly();

    // (8)
    RatFun f(num, den);
    if (f.numerator().degree() > static_cast<int>(n) - 1 || f.denominator().degree() > static_cast<int>(n))
        throw PipelineError("compute_Fs: degree bound violated after reduction");
    return {std::move(f), std::move(recip), std::move(den), std::move(num)};
}

}  // namespace chebgf
