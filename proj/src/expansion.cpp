#include "sphfn/expansion.hpp"

#include <cmath>

#include "sphfn/ode.hpp"

namespace sphfn::expansion {

namespace {

double bessel_order0(const GroupRank1& g)
{
    return (g.n() - 2) / 2.0;
}

} // namespace

double prefactor(const StExpansion& e, double t)
{
    if (!(t > 0.0))
        throw DomainError("prefactor: t must be > 0");
    const GroupRank1& g = e.group;
    double ratio = std::pow(t, g.n() - 1) / jacobian_D(g, t);
    return c0_constant(g) * std::sqrt(ratio);
}

double prefactor_limit0(const GroupRank1& g)
{
    // t^{n-1}/D(t) -> 2^{-p} 4^{-q} as t -> 0.
    return c0_constant(g) * std::pow(2.0, -g.p / 2.0 - g.q);
}

namespace {

cplx evaluate_expansion(const StExpansion& e, double bessel_arg, double t)
{
    const GroupRank1& g = e.group;
    if (!(t <= e.validity_radius))
        throw DomainError("st_evaluate: t = " + std::to_string(t) +
                          " outside the validity radius " +
                          std::to_string(e.validity_radius));
    int M = e.truncation_order;
    if (M < 0)
        throw DomainError("st_evaluate: truncation order must be >= 0");
    if (M > static_cast<int>(e.higher_coeffs.size()))
        throw DomainError("st_evaluate: coefficients a_m for m >= 1 must be supplied "
                          "explicitly; only M = " +
                          std::to_string(e.higher_coeffs.size()) + " terms are available");

    double mu0 = bessel_order0(g);
    double pref = t > 0.0 ? prefactor(e, t) : prefactor_limit0(g);
    double sum = special::normalized_bessel(mu0, std::abs(bessel_arg) * t, e.bessel_mode);
    double t2m = 1.0;
    for (int m = 1; m <= M; ++m) {
        t2m *= t * t;
        double am = e.higher_coeffs[m - 1](t);
        sum += t2m * am * special::normalized_bessel(mu0 + m, std::abs(bessel_arg) * t,
                                                     e.bessel_mode);
    }
    return cplx(pref * sum, 0.0);
}

} // namespace

cplx st_evaluate(const StExpansion& e, cplx lam, double t)
{
    if (!(t > 0.0))
        throw DomainError("st_evaluate: t must be > 0");
    if (lam.imag() != 0.0)
        throw DomainError("st_evaluate: the Bessel argument lambda*t must be real; use the "
                          "confluent evaluation for complex spectral parameters");
    return evaluate_expansion(e, lam.real(), t);
}

cplx confluent_spherical(const GroupRank1& g, cplx lam, double t, special::BesselZeroMode mode,
                         double validity_radius)
{
    if (!(t >= 0.0))
        throw DomainError("confluent_spherical: t must be >= 0");
    StExpansion e{g, 0, {}, validity_radius, mode};
    return evaluate_expansion(e, std::abs(lam), t);
}

double normalization_kappa(const GroupRank1& g)
{
    double mu0 = bessel_order0(g);
    double limit = prefactor_limit0(g) * special::normalized_bessel_limit0(mu0);
    return 1.0 / limit;
}

OrderFit error_order_check(const GroupRank1& g, cplx lam, int M,
                           const std::vector<double>& t_values)
{
    if (M != 0)
        throw DomainError("error_order_check: only M = 0 has complete coefficients");
    if (t_values.size() < 4)
        throw DomainError("error_order_check: need at least 4 points for the fit");
    for (double t : t_values) {
        if (!(t > 0.0 && t <= 0.1))
            throw DomainError("error_order_check: t values must lie in (0, 0.1]");
        if (std::abs(lam) * t > 1.0 + 1e-15)
            throw DomainError("error_order_check: |lambda*t| <= 1 required");
    }
    if (lam.imag() != 0.0)
        throw DomainError("error_order_check: lambda must be real");

    StExpansion e{g, 0, {}, 1.0, special::BesselZeroMode::continuous};
    double kappa = normalization_kappa(g);
    special::HypParams hp = hyp_params(g, lam);

    std::vector<double> lx, ly;
    for (double t : t_values) {
        cplx ref = special::gauss_2f1(hp, ode::to_hypergeometric_z(t)).value;
        double err = std::abs(ref - kappa * st_evaluate(e, lam, t));
        if (err == 0.0) {
            OrderFit fit;
            fit.skipped = true;
            fit.skip_reason = "exact-zero deviation at t = " + std::to_string(t) +
                              " (degenerate spectral parameter); log-log fit undefined";
            return fit;
        }
        lx.push_back(std::log(t));
        ly.push_back(std::log(err));
    }

    double n = static_cast<double>(lx.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        sx += lx[i];
        sy += ly[i];
        sxx += lx[i] * lx[i];
        sxy += lx[i] * ly[i];
    }
    OrderFit fit;
    fit.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    fit.intercept = (sy - fit.slope * sx) / n;
    double ss = 0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        double r = ly[i] - (fit.intercept + fit.slope * lx[i]);
        ss += r * r;
    }
    fit.fit_residual = std::sqrt(ss / n);
    return fit;
}

} // namespace sphfn::expansion
