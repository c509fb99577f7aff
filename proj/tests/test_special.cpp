#include "doctest.h"

#include <cmath>

#include "sphfn/special.hpp"

#include "oracles.hpp"

using namespace sphfn;
using special::BesselZeroMode;

namespace {
constexpr double pi = 3.141592653589793238462643383279502884;

double rel_err(double got, double want)
{
    return std::fabs(got - want) / std::fabs(want);
}
} // namespace

TEST_CASE("gamma: fixed points and poles")
{
    CHECK(special::gamma(cplx(1.0, 0.0)).real() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(special::gamma(cplx(0.5, 0.0)).real() ==
          doctest::Approx(std::sqrt(pi)).epsilon(1e-13));
    // Frozen from the Euler-integral oracle; recomputed alongside.
    const double g73 = 1271.4236336639088;
    CHECK(rel_err(special::gamma(cplx(7.3, 0.0)).real(), g73) < 1e-12);
    CHECK(rel_err(static_cast<double>(oracles::gamma_euler(7.3L)), g73) < 1e-13);

    CHECK_THROWS_AS(special::gamma(cplx(0.0, 0.0)), DomainError);
    CHECK_THROWS_AS(special::gamma(cplx(-3.0, 0.0)), DomainError);
}

TEST_CASE("gamma: rational approximation holds 1e-12 on [0.5, 50]")
{
    double worst = 0.0;
    for (double x = 0.5; x <= 50.0; x += 0.37) {
        double ref = static_cast<double>(oracles::gamma_euler(static_cast<long double>(x)));
        worst = std::max(worst, rel_err(special::gamma(cplx(x, 0.0)).real(), ref));
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("gamma: reflection branch")
{
    // Gamma(-0.5) = -2 sqrt(pi)
    CHECK(rel_err(special::gamma(cplx(-0.5, 0.0)).real(), -2.0 * std::sqrt(pi)) < 1e-13);
    // |Gamma(1/2 + iy)|^2 = pi / cosh(pi y)
    double y = 1.7;
    double want = pi / std::cosh(pi * y);
    cplx g = special::gamma(cplx(0.5, y));
    CHECK(rel_err(std::norm(g), want) < 1e-12);
}

TEST_CASE("pochhammer: products and recursion")
{
    CHECK(special::pochhammer(cplx(3.7, -1.2), 0) == cplx(1.0, 0.0));
    CHECK(special::pochhammer(cplx(1.0, 0.0), 5).real() == doctest::Approx(120.0));
    CHECK(special::pochhammer(cplx(2.5, 0.0), 3).real() == doctest::Approx(39.375)); // 2.5*3.5*4.5

    // (m)_{k+1} == (m)_k * (m+k), bitwise.
    cplx m(0.37, 2.1);
    for (int k = 0; k < 12; ++k) {
        cplx lhs = special::pochhammer(m, k + 1);
        cplx rhs = special::pochhammer(m, k) * (m + static_cast<double>(k));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("gauss_2f1: pinned values")
{
    special::HypParams p112{cplx(1, 0), cplx(1, 0), cplx(2, 0)};
    CHECK(special::gauss_2f1(p112, cplx(0, 0)).value == cplx(1.0, 0.0));
    CHECK(special::gauss_2f1(p112, cplx(0, 0)).terms_used == 1);

    // series is -ln(1-z)/z at (1,1,2)
    double want = 2.0 * std::log(2.0);
    CHECK(rel_err(special::gauss_2f1(p112, cplx(0.5, 0)).value.real(), want) < 1e-12);

    // Negative-axis evaluation, frozen from the brute-force series oracle
    // and cross-checked against direct integration of the equation.
    special::HypParams p{cplx(0.75, 0), cplx(0.25, 0), cplx(1.5, 0)};
    const double frozen = 0.9241763718304448;
    CHECK(rel_err(special::gauss_2f1(p, cplx(-0.8, 0)).value.real(), frozen) < 5e-12);
    CHECK(rel_err(static_cast<double>(oracles::gauss_2f1_brute(0.75L, 0.25L, 1.5L, -0.8L)),
                  frozen) < 1e-15);
    CHECK(rel_err(static_cast<double>(oracles::gauss_2f1_ode(0.75L, 0.25L, 1.5L, -0.8L)),
                  frozen) < 1e-11);
}

TEST_CASE("gauss_2f1: domain errors")
{
    special::HypParams pole{cplx(1, 0), cplx(1, 0), cplx(-2, 0)};
    CHECK_THROWS_AS(special::gauss_2f1(pole, cplx(0.1, 0)), DomainError);
    special::HypParams p{cplx(1, 0), cplx(1, 0), cplx(2, 0)};
    CHECK_THROWS_AS(special::gauss_2f1(p, cplx(0.7, 0.8)), DomainError); // |z| > 1
}

TEST_CASE("series budget exhaustion raises a convergence error")
{
    // Transformed argument creeps toward 1 for very large t-like inputs,
    // pushing the term count past the fixed budget.
    special::HypParams p{cplx(5, 0), cplx(5, 0), cplx(1.5, 0)};
    CHECK_THROWS_AS(special::gauss_2f1(p, cplx(-7e9, 0)), ConvergenceError);
    CHECK_THROWS_AS(special::confluent_1f1(cplx(0.5, 0), cplx(1.5, 0), cplx(50000, 0)),
                    ConvergenceError);
}

TEST_CASE("gauss_2f1: a<->b symmetry")
{
    const double zs[] = {0.3, 0.85, -0.5, -6.0};
    const cplx as[] = {cplx(0.4, 0.0), cplx(1.3, -0.7)};
    const cplx bs[] = {cplx(2.2, 0.0), cplx(0.1, 1.1)};
    for (double z : zs)
        for (cplx a : as)
            for (cplx b : bs) {
                cplx f1 = special::gauss_2f1({a, b, cplx(1.75, 0)}, cplx(z, 0)).value;
                cplx f2 = special::gauss_2f1({b, a, cplx(1.75, 0)}, cplx(z, 0)).value;
                CHECK(std::abs(f1 - f2) <= 1e-13 * std::max(1.0, std::abs(f1)));
            }
}

TEST_CASE("series results: real inputs stay real, tails honest")
{
    special::HypParams p{cplx(0.6, 0), cplx(1.9, 0), cplx(2.4, 0)};
    for (double z : {0.45, -0.9, -4.0}) {
        auto r = special::gauss_2f1(p, cplx(z, 0));
        CHECK(std::fabs(r.value.imag()) <= 1e-13 * std::abs(r.value));
        CHECK(r.terms_used >= 1);
        CHECK(r.tail_estimate <= special::default_tol * std::abs(r.value) + 1e-300);

        // re-evaluating at tol/10 moves the value by at most 10*tol*|value|
        auto tight = special::gauss_2f1(p, cplx(z, 0), special::default_tol / 10.0);
        CHECK(std::abs(tight.value - r.value) <=
              10.0 * special::default_tol * std::abs(r.value));
    }
}

TEST_CASE("confluent_1f1: pinned values")
{
    CHECK(special::confluent_1f1(cplx(0.3, 0), cplx(0.9, 0), cplx(0, 0)).value ==
          cplx(1.0, 0.0));
    // a == c collapses the series to exp(z)
    CHECK(rel_err(special::confluent_1f1(cplx(0.7, 0), cplx(0.7, 0), cplx(1, 0)).value.real(),
                  std::exp(1.0)) < 1e-12);

    // Frozen from the direct-summation oracle; equals
    // sqrt(pi) erf(sqrt(2)) / (2 sqrt(2)) in closed form.
    const double frozen = 0.59814400666130407;
    CHECK(rel_err(special::confluent_1f1(cplx(0.5, 0), cplx(1.5, 0), cplx(-2, 0)).value.real(),
                  frozen) < 1e-12);
    CHECK(rel_err(static_cast<double>(oracles::confluent_1f1_brute(0.5L, 1.5L, -2.0L)), frozen) <
          1e-15);
    CHECK(rel_err(std::sqrt(pi) * std::erf(std::sqrt(2.0)) / (2.0 * std::sqrt(2.0)), frozen) <
          1e-15);

    CHECK_THROWS_AS(special::confluent_1f1(cplx(1, 0), cplx(0, 0), cplx(1, 0)), DomainError);
}

TEST_CASE("confluent_limit: deviations shrink along b")
{
    special::HypParams p{cplx(0.5, 0), cplx(0, 0), cplx(1.5, 0)};
    auto devs = special::confluent_limit(p, cplx(1.0, 0), {10.0, 100.0, 1000.0});
    REQUIRE(devs.size() == 3);
    CHECK(devs[0].deviation > devs[1].deviation);
    CHECK(devs[1].deviation > devs[2].deviation);
    CHECK(devs[2].deviation < 1e-3);

    // z = 0 makes both sides exactly 1.
    auto zero = special::confluent_limit(p, cplx(0, 0), {10.0});
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].deviation == 0.0);

    CHECK_THROWS_AS(special::confluent_limit(p, cplx(5.0, 0), {2.0}), DomainError);
}

TEST_CASE("bessel_j: anchors and parity")
{
    CHECK(special::bessel_j(0, 0).value == cplx(1.0, 0.0));
    CHECK(special::bessel_j(2, 0).value == cplx(0.0, 0.0));

    // parity: J_{-n} = (-1)^n J_n, implemented exactly
    for (double x : {0.5, 2.0, 5.0}) {
        cplx lhs = special::bessel_j(-3, x).value;
        cplx rhs = -special::bessel_j(3, x).value;
        CHECK(lhs == rhs);
    }

    // half order closed forms J_{1/2} = sqrt(2/(pi x)) sin x and
    // J_{-1/2} = sqrt(2/(pi x)) cos x, hitting both evaluation paths
    for (double x : {0.3, 2.0, 11.0, 30.0}) {
        double s = std::sqrt(2.0 / (pi * x));
        CHECK(std::fabs(special::bessel_j(0.5, x).value.real() - s * std::sin(x)) < 1e-13);
        CHECK(std::fabs(special::bessel_j(-0.5, x).value.real() - s * std::cos(x)) < 1e-13);
    }

    CHECK_THROWS_AS(special::bessel_j(0, -1.0), DomainError);
    CHECK_THROWS_AS(special::bessel_j(-0.5, 0.0), DomainError);
    CHECK_THROWS_AS(special::bessel_j(0, 41.0), DomainError);
}

TEST_CASE("bessel_j: agrees with downward recurrence across the method seam")
{
    for (double x : {1.0, 8.0, 19.5, 20.5, 27.0, 38.0}) {
        for (int n : {0, 1, 4}) {
            double ref = static_cast<double>(oracles::bessel_jn_miller(n, x));
            CHECK(std::fabs(special::bessel_j(n, x).value.real() - ref) < 1e-12);
        }
    }
}

TEST_CASE("bessel_j: three-term recurrence")
{
    for (int n : {1, 2, 5}) {
        for (double x = 0.5; x <= 20.0; x += 0.75) {
            double jm = special::bessel_j(n - 1, x).value.real();
            double jp = special::bessel_j(n + 1, x).value.real();
            double jc = special::bessel_j(n, x).value.real();
            double scale = std::fabs(jm) + std::fabs(jp) + std::fabs(2.0 * n / x * jc);
            CHECK(std::fabs(jm + jp - 2.0 * n / x * jc) <= 1e-10 * scale);
        }
    }
}

TEST_CASE("normalized_bessel: zero-point conventions")
{
    for (double mu : {0.0, 0.5, 1.5, 2.0}) {
        CHECK(special::normalized_bessel(mu, 0.0, BesselZeroMode::literal_zero) == 0.0);
        double limit = special::normalized_bessel_limit0(mu);
        CHECK(limit > 0.0);
        // the z > 0 branch approaches the closed-form limit
        double near6 = special::normalized_bessel(mu, 1e-6, BesselZeroMode::continuous);
        double near7 = special::normalized_bessel(mu, 1e-7, BesselZeroMode::continuous);
        CHECK(std::fabs(near6 - limit) < 1e-11);
        CHECK(std::fabs(near7 - limit) < 1e-12);
        CHECK(std::fabs(near7 - limit) <= std::fabs(near6 - limit));
        CHECK(special::normalized_bessel(mu, 0.0, BesselZeroMode::continuous) ==
              doctest::Approx(limit));
    }

    // mu = 0 reduces to (pi/2) J_0(z), in either mode.
    for (double z : {0.4, 3.0, 9.0}) {
        double want = 0.5 * pi * special::bessel_j(0, z).value.real();
        CHECK(special::normalized_bessel(0.0, z, BesselZeroMode::literal_zero) ==
              doctest::Approx(want).epsilon(1e-12));
        CHECK(special::normalized_bessel(0.0, z, BesselZeroMode::continuous) ==
              doctest::Approx(want).epsilon(1e-12));
    }

    // modes agree away from zero
    CHECK(special::normalized_bessel(1.5, 0.8, BesselZeroMode::literal_zero) ==
          special::normalized_bessel(1.5, 0.8, BesselZeroMode::continuous));
}
