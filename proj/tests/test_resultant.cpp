#include <doctest.h>

#include <random>

#include "chebgf/resultant.hpp"
#include "support.hpp"

using namespace chebgf;
using tsupport::x_desc;
using tsupport::xp;

namespace {

YPoly Y() { return YPoly::variable(); }
YPoly YC(const UniPoly& c) { return YPoly::constant(c); }
YPoly YC(long c) { return YPoly(c); }

// y^s - x
YPoly power_minus_x(unsigned s) { return YPoly::monomial(UniPoly(1), s) - YC(xp()); }

RatPolyY random_ratpoly_y(std::mt19937& rng, int max_deg, int range) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::vector<Rational> cs(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& c : cs) c = tsupport::random_rational(rng, range, true);
    if (cs.back() == 0) cs.back() = 1;
    return RatPolyY(std::move(cs));
}

}  // namespace

TEST_CASE("resultant") {
    const UniPoly a = x_desc({2, 1}), b = x_desc({-1, 0, 3});
    CHECK(resultant(Y() - YC(a), Y() - YC(b)) == a - b);
    CHECK(resultant_subresultant(Y() - YC(a), Y() - YC(b)) == a - b);

    // Res_y(y^2 - x, y^2 + 3y + 5) = (x + 5)^2 - 9x
    YPoly q = Y() * Y() + YC(3) * Y() + YC(5);
    CHECK(resultant(power_minus_x(2), q) == x_desc({1, 1, 25}));
    CHECK(resultant_subresultant(power_minus_x(2), q) == x_desc({1, 1, 25}));

    // swapping arguments: (-1)^(deg f deg g)
    YPoly cubic = Y() * Y() * Y() - YC(xp()) * Y() + YC(1);
    CHECK(resultant(cubic, q) == resultant(q, cubic));
    CHECK(resultant(cubic, Y() - YC(a)) == -resultant(Y() - YC(a), cubic));

    // constants and zero
    CHECK(resultant(YC(a), cubic) == a * a * a);
    CHECK(resultant(cubic, YC(3)) == UniPoly(27));
    CHECK(resultant(YPoly(), cubic).is_zero());
    CHECK(resultant(YPoly(), YC(4)) == UniPoly(1));
    CHECK_THROWS_AS(resultant(YPoly(), YPoly()), std::domain_error);

    // common root
    CHECK(resultant((Y() - YC(a)) * q, (Y() - YC(a)) * cubic).is_zero());
    CHECK(resultant_subresultant((Y() - YC(a)) * q, (Y() - YC(a)) * cubic).is_zero());

    // rational coefficients: Res(y/2 - 1, 3y + 1/3) = (1/2)(3*2 + 1/3)
    RatPolyY f{Rational(-1), Rational(1, 2)}, g{Rational(1, 3), Rational(3)};
    CHECK(resultant(f, g) == Rational(19, 6));
    CHECK(resultant_subresultant(f, g) == Rational(19, 6));
}

TEST_CASE("resultant eliminating u gives the product-of-roots polynomial") {
    // roots of 1 - (x+2)t + t^2 times roots of 1 - (2-x)t + t^2
    using UPoly = Poly<BiPoly, VarU>;
    UPoly u = UPoly::variable();
    auto cu = [](const BiPoly& c) { return UPoly::constant(c); };
    // a(u) = u^2 - (x+2) u + 1; b_t(u) = u^2 b(t/u) = t^2 - (2-x) t u + u^2
    UPoly a = u * u - cu(X() + B(2)) * u + cu(B(1));
    UPoly b = cu(T() * T()) - cu(B(2) * T() - X() * T()) * u + u * u;
    BiPoly r = resultant(a, b);
    BiPoly expected = pow(T(), 4) + (X() * X() - B(4)) * pow(T(), 3) + (B(2) * X() * X() + B(6)) * T() * T() +
                      (X() * X() - B(4)) * T() + B(1);
    CHECK(r == expected);
    CHECK(resultant_subresultant(a, b) == expected);
}

TEST_CASE("resultant_power_sub") {
    for (auto method : {PowerSubMethod::kNorm, PowerSubMethod::kSylvester}) {
        CHECK(resultant_power_sub(RatPolyY{Rational(-7), Rational(1)}, 1, method) == x_desc({1, -7}));
        CHECK(resultant_power_sub(RatPolyY{5, 3, 1}, 2, method) == x_desc({1, 1, 25}));
        CHECK(resultant_power_sub(RatPolyY(4), 3, method) == UniPoly(64));
        CHECK(resultant_power_sub(RatPolyY(), 3, method).is_zero());
        // y^2 + 1 over s = 3: roots i, -i; cubes -i, i; x^2 + 1
        CHECK(resultant_power_sub(RatPolyY{1, 0, 1}, 3, method) == x_desc({1, 0, 1}));
        CHECK_THROWS_AS(resultant_power_sub(RatPolyY{1, 1}, 0, method), std::invalid_argument);
    }
}

TEST_CASE("discriminant") {
    const UniPoly b = x_desc({1, 2}), c = x_desc({-3, 0, 1});
    CHECK(discriminant(Y() * Y() + YC(b) * Y() + YC(c)) == b * b - UniPoly(4) * c);
    // K_1 f_1 = ((1+y)^2 + x y)(y^2 + y + 1)
    YPoly k1 = pow(Y() + YC(1), 2) + YC(xp()) * Y();
    YPoly f1 = Y() * Y() + Y() + YC(1);
    CHECK(discriminant(f1) == UniPoly(-3));
    CHECK(discriminant(k1 * f1) == UniPoly(-3) * xp() * x_desc({1, 4}) * pow(x_desc({1, 1}), 4));
    CHECK(discriminant(YC(2) * Y() + YC(5)) == UniPoly(1));
    CHECK_THROWS_AS(discriminant(YC(3)), std::domain_error);
    CHECK_THROWS_AS(discriminant(YC(xp()) * Y() * Y() + YC(1)), std::domain_error);
}

TEST_CASE("property: two resultant implementations agree with each other and with a numeric Sylvester oracle") {
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 120; ++trial) {
        YPoly f = tsupport::random_outer<VarY>(rng, 1 + trial % 6, 3, 6, false, trial % 4 == 0);
        YPoly g = tsupport::random_outer<VarY>(rng, 1 + (trial / 6) % 5, 3, 6, false, trial % 5 == 0);
        UniPoly r1 = resultant(f, g), r2 = resultant_subresultant(f, g);
        REQUIRE(r1 == r2);
        Rational x0(trial % 7 - 3, 1 + trial % 2);
        x0.canonicalize();
        if (eval(f.lc(), x0) != 0 && eval(g.lc(), x0) != 0) REQUIRE(eval(r1, x0) == tsupport::sylvester_resultant_at(f, g, x0));
    }
}

TEST_CASE("property: multiplicativity and the discriminant of a product") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 100; ++trial) {
        YPoly f = tsupport::random_outer<VarY>(rng, 1 + trial % 4, 2, 5, true);
        YPoly g = tsupport::random_outer<VarY>(rng, 1 + trial % 3, 2, 5);
        YPoly h = tsupport::random_outer<VarY>(rng, 1 + (trial / 3) % 3, 2, 5);
        REQUIRE(resultant(f, g * h) == resultant(f, g) * resultant(f, h));
        YPoly p = tsupport::random_outer<VarY>(rng, 1 + trial % 3, 2, 4, true);
        UniPoly rpf = resultant(p, f);
        REQUIRE(discriminant(p * f) == discriminant(p) * discriminant(f) * rpf * rpf);
    }
}

TEST_CASE("property: power substitution, norm and Sylvester routes agree") {
    std::mt19937 rng(2718);
    for (int trial = 0; trial < 100; ++trial) {
        RatPolyY q = random_ratpoly_y(rng, 6, 5);
        const unsigned s = 1 + static_cast<unsigned>(trial % 4);
        UniPoly n = resultant_power_sub(q, s, PowerSubMethod::kNorm);
        REQUIRE(n == resultant_power_sub(q, s, PowerSubMethod::kSylvester));
        if (s == 1) REQUIRE(n == rename<VarX>(q));
        // independent oracle at a rational point
        YPoly qy = map_coeffs(q, [](const Rational& a) { return UniPoly::constant(a); });
        Rational x0(trial % 5 - 2);
        if (!q.is_zero() && q.degree() > 0) REQUIRE(eval(n, x0) == tsupport::sylvester_resultant_at(power_minus_x(s), qy, x0));
        // multiplicative in Q
        RatPolyY q2 = random_ratpoly_y(rng, 3, 4);
        REQUIRE(resultant_power_sub(q * q2, s) == n * resultant_power_sub(q2, s));
    }
}
