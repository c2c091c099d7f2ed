#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "ruijops/bracket.hpp"
#include "ruijops/sampling.hpp"

using namespace ruijops;

namespace {

Real tolerance(int e) {
    using boost::multiprecision::pow;
    return pow(Real(10), e);
}

}  // namespace

TEST_CASE("rational bracket is the identity map times an optional gaussian") {
    auto plain = BracketFunction::rational();
    Cplx z = Cplx::parse("0.37", "-0.62");
    CHECK(abs(plain.eval(z) - z) == Real(0));
    CHECK(abs(plain.eval(-z) + plain.eval(z)) == Real(0));

    Cplx c = Cplx::parse("0.11", "0.07");
    auto gauss = BracketFunction::rational(c);
    Cplx expected = ruijops::exp(c * z * z) * z;
    CHECK(abs(gauss.eval(z) - expected) < tolerance(-70));
}

TEST_CASE("trigonometric bracket evaluates the scaled sine") {
    auto br = BracketFunction::trigonometric(Cplx(2));
    CHECK(abs(br.eval(Cplx(1)) - Cplx(1)) < tolerance(-70));  // sin(pi/2)
    CHECK(abs(br.eval(Cplx(3)) + Cplx(1)) < tolerance(-70));  // sin(3 pi/2)

    Sampler s(7);
    for (int i = 0; i < 8; ++i) {
        Cplx z = s.box();
        CHECK(abs(br.eval(z) + br.eval(-z)) < tolerance(-70));
    }
}

TEST_CASE("elliptic series agrees with the triple product form") {
    Cplx omega1(1), omega2 = Cplx::parse("0.31", "0.73");
    auto br = BracketFunction::elliptic(omega1, omega2);
    Cplx c = Cplx::parse("0.05", "-0.03");
    auto br_gauss = BracketFunction::elliptic(omega1, omega2, c);

    Sampler s(11);
    Real worst(0);
    for (int i = 0; i < 25; ++i) {
        Cplx z = s.box();
        Cplx series = br.eval(z);
        Cplx product = oracles::elliptic_product_form(z, omega1, omega2, Cplx(0), 64);
        Real dev = abs(series - product) / abs(product);
        if (dev > worst) worst = dev;

        Cplx gs = br_gauss.eval(z);
        Cplx gp = oracles::elliptic_product_form(z, omega1, omega2, c, 64);
        dev = abs(gs - gp) / abs(gp);
        if (dev > worst) worst = dev;
    }
    CHECK(worst < tolerance(-60));
}

TEST_CASE("elliptic bracket is odd and flips sign across the first period") {
    Cplx omega1 = Cplx::parse("1.1", "0.2"), omega2 = Cplx::parse("0.2", "0.9");
    auto br = BracketFunction::elliptic(omega1, omega2);
    Sampler s(3);
    for (int i = 0; i < 10; ++i) {
        Cplx z = s.box();
        CHECK(abs(br.eval(-z) + br.eval(z)) < tolerance(-58));
        Real scale = abs(br.eval(z));
        if (scale < 1) scale = 1;
        CHECK(abs(br.eval(z + omega1) + br.eval(z)) / scale < tolerance(-58));
    }
}

TEST_CASE("three-term relation holds for every flavor") {
    std::vector<BracketFunction> brackets;
    brackets.push_back(BracketFunction::rational());
    brackets.push_back(BracketFunction::rational(Cplx::parse("0.11", "0.07")));
    brackets.push_back(BracketFunction::trigonometric(Cplx::parse("0.83", "0.19")));
    brackets.push_back(BracketFunction::elliptic(Cplx(1), Cplx::parse("0.31", "0.73")));
    brackets.push_back(
        BracketFunction::elliptic(Cplx(1), Cplx::parse("0.31", "0.73"), Cplx::parse("0.02", "0.05")));

    Sampler s(42);
    for (const auto& br : brackets) {
        Real worst(0);
        for (int i = 0; i < 30; ++i) {
            Residual r = br.hirota_residual(s.box(), s.box(), s.box(), s.box());
            if (r.rel() > worst) worst = r.rel();
        }
        CHECK(worst < tolerance(-44));
    }
}

TEST_CASE("three-term relation sharpens with the requested precision") {
    auto br = BracketFunction::elliptic(Cplx(1), Cplx::parse("0.31", "0.73"), Cplx(0), 120);
    Sampler s(5);
    Real worst(0);
    for (int i = 0; i < 10; ++i) {
        Residual r = br.hirota_residual(s.box(), s.box(), s.box(), s.box());
        if (r.rel() > worst) worst = r.rel();
    }
    CHECK(worst < tolerance(-100));
}

TEST_CASE("denominator evaluations trip the pole guard") {
    auto rational = BracketFunction::rational();
    CHECK_THROWS_AS(rational.eval_denominator(Cplx::parse("1e-9")), pole_proximity);
    CHECK_THROWS_AS(rational.ratio(Cplx(1), Cplx::parse("1e-8")), pole_proximity);
    CHECK(abs(rational.ratio(Cplx(3), Cplx(2)) - Cplx::parse("1.5")) < tolerance(-70));

    auto trig = BracketFunction::trigonometric(Cplx(1));
    CHECK_THROWS_AS(trig.eval_denominator(Cplx(1) + Cplx::parse("1e-12")), pole_proximity);
}

TEST_CASE("shifted factorial is the product of stepped evaluations") {
    auto br = BracketFunction::trigonometric(Cplx::parse("0.9", "0.1"));
    Cplx z = Cplx::parse("0.4", "-0.2"), d = Cplx::parse("0.21", "0.13");
    CHECK(abs(br.shifted_factorial(z, 0, d) - Cplx(1)) == Real(0));

    Cplx manual(1);
    for (int j = 0; j < 4; ++j) manual *= br.eval(z + Cplx(j) * d);
    CHECK(abs(br.shifted_factorial(z, 4, d) - manual) < tolerance(-65));
    CHECK_THROWS_AS(br.shifted_factorial(z, -1, d), invalid_parameters);

    Point x = {Cplx(1), Cplx::parse("0.3"), Cplx::parse("-0.4")};
    Cplx vm = br.eval(x[0] - x[1]) * br.eval(x[0] - x[2]) * br.eval(x[1] - x[2]);
    CHECK(abs(br.delta_product(x) - vm) < tolerance(-65));
}

TEST_CASE("constructors reject unusable parameters") {
    CHECK_THROWS_AS(BracketFunction::rational(Cplx(0), 8), invalid_parameters);
    CHECK_THROWS_AS(BracketFunction::trigonometric(Cplx(0)), invalid_parameters);
    CHECK_THROWS_AS(BracketFunction::elliptic(Cplx(1), Cplx::parse("0.5")), invalid_parameters);
    CHECK_THROWS_AS(BracketFunction::elliptic(Cplx(0), Cplx::parse("0", "1")), invalid_parameters);
}

TEST_CASE("theta truncation cap surfaces as a precision error") {
    auto br = BracketFunction::elliptic(Cplx(1), Cplx::parse("0", "1e-9"));
    CHECK_THROWS_AS(br.eval(Cplx::parse("0.3")), precision_unreachable);
}
