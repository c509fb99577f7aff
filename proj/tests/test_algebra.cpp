#include "doctest.h"

#include <cmath>

#include "sphfn/algebra.hpp"

using namespace sphfn;
using namespace sphfn::algebra;

namespace {

std::shared_ptr<const EvalContext> ctx()
{
    static auto c = std::make_shared<const EvalContext>(
        EvalContext{GroupRank1::make("sl2r-sec4", 2, 0), 1e-10,
                    special::BesselZeroMode::continuous});
    return c;
}

IndexedFunction sph(cplx lam)
{
    return IndexedFunction::spherical(lam, ctx());
}

} // namespace

TEST_CASE("delta operations act on indices")
{
    auto xi = sph(cplx(0, 0)); // the index-zero element
    auto lam = cplx(1.0, 2.0);

    CHECK(delta_add(sph(lam), xi) == sph(lam));
    CHECK(delta_add(sph(lam), sph(-lam)) == xi);
    CHECK(delta_add(sph(cplx(1, 2)), sph(cplx(3, 0))).index() == cplx(4, 2));

    CHECK(delta_scale(cplx(1, 0), sph(lam)) == sph(lam));
    CHECK(delta_scale(cplx(0, 0), sph(lam)) == xi);
    CHECK(delta_scale(cplx(2, 0), sph(cplx(3, 0))).index() == cplx(6, 0));

    auto one = sph(cplx(1, 0));
    CHECK(delta_mul(one, sph(lam)) == sph(lam));
    CHECK(delta_mul(xi, sph(lam)) == xi);
    CHECK(delta_mul(sph(cplx(2, 0)), sph(cplx(3, 1))).index() == cplx(6, 2));

    auto conf = sigma_map(sph(lam));
    CHECK_THROWS_AS(delta_add(sph(lam), conf), DomainError);
    CHECK_THROWS_AS(delta_mul(sph(lam), conf), DomainError);
}

TEST_CASE("equality is the Weyl quotient, at both levels")
{
    cplx lam(0.9, 0.4);
    CHECK(sph(lam) == sph(-lam));
    CHECK_FALSE(sph(lam) == sph(lam + cplx(1e-14, 0)));
    CHECK_FALSE(sph(lam) == sigma_map(sph(lam)));

    // the evaluators agree numerically as well
    for (double t : {0.2, 0.8}) {
        CHECK(std::abs(sph(lam).evaluate(t) - sph(-lam).evaluate(t)) < 1e-10);
        auto c1 = sigma_map(sph(lam)), c2 = sigma_map(sph(-lam));
        CHECK(c1.evaluate(t) == c2.evaluate(t)); // |lambda| makes this bitwise
    }
}

TEST_CASE("sigma map: linearity at the index level and evenness")
{
    cplx l1(2, 1), l2(-0.5, 3), alpha(1.5, -0.5);
    CHECK(sigma_map(delta_add(sph(l1), sph(l2))) ==
          delta_add(sigma_map(sph(l1)), sigma_map(sph(l2))));
    CHECK(sigma_map(delta_scale(alpha, sph(l1))) == delta_scale(alpha, sigma_map(sph(l1))));
    CHECK(sigma_map(sph(l1)).family() == Family::confluent);
    CHECK(sigma_map(sph(l1)).index() == l1);

    // restricted to positive real indices, index extraction inverts it
    for (double lam : {0.3, 1.0, 7.5}) {
        auto image = sigma_map(sph(cplx(lam, 0)));
        CHECK(image.index().real() == lam);
        CHECK(image.index().imag() == 0.0);
    }

    CHECK_THROWS_AS(sigma_map(sigma_map(sph(l1))), DomainError);
}

TEST_CASE("spherical evaluator: normalized at the identity")
{
    CHECK(sph(cplx(0.7, 0)).evaluate(0.0) == cplx(1.0, 0.0));
    // index rho0 gives the constant function
    CHECK(std::abs(sph(cplx(1.0, 0)).evaluate(1.3) - 1.0) < 1e-12);
}

TEST_CASE("axioms: 1000 randomized trials, deterministic")
{
    auto reports = run_axiom_trials(1000, 12345);
    REQUIRE(reports.size() == 15);
    for (const auto& rep : reports) {
        INFO(rep.label);
        CHECK(rep.passes == rep.trials);
    }

    // identical under the same seed, different draw under another
    auto again = run_axiom_trials(1000, 12345);
    for (std::size_t i = 0; i < reports.size(); ++i)
        CHECK(reports[i].passes == again[i].passes);

    CHECK_THROWS_AS(run_axiom_trials(0, 1), DomainError);
    CHECK(run_axiom_trials(1, 7).size() == 15);
}

TEST_CASE("axioms hold at non-integer indices to rounding accuracy")
{
    // The exact trials use integer draws; spot-check the same identities
    // at generic indices with a tolerance.
    cplx l1(0.137, -2.4142), l2(3.1415, 0.577), l3(-1.618, 0.693), a(0.707, -0.301);
    auto close = [](const IndexedFunction& x, const IndexedFunction& y) {
        return std::abs(x.index() - y.index()) < 1e-12 && x.family() == y.family();
    };
    CHECK(close(delta_add(sph(l1), delta_add(sph(l2), sph(l3))),
                delta_add(delta_add(sph(l1), sph(l2)), sph(l3))));
    CHECK(close(delta_mul(sph(l1), delta_add(sph(l2), sph(l3))),
                delta_add(delta_mul(sph(l1), sph(l2)), delta_mul(sph(l1), sph(l3)))));
    CHECK(close(delta_scale(a, delta_add(sph(l1), sph(l2))),
                delta_add(delta_scale(a, sph(l1)), delta_scale(a, sph(l2)))));
}
