#pragma once

#include <functional>
#include <vector>

#include "sphfn/group.hpp"
#include "sphfn/special.hpp"

namespace sphfn::expansion {

/// Truncated Bessel expansion of a spherical function around t = 0:
///   c0 [t^{n-1}/D(t)]^{1/2} sum_{m=0}^{M} t^{2m} a_m(t) J~_{(n-2)/2+m}(arg t)
/// with a_0 == 1. Coefficients a_m for m >= 1 have no closed form here;
/// they must be supplied explicitly through `higher_coeffs` (entry 0 is
/// a_1), otherwise only M = 0 is available.
struct StExpansion {
    GroupRank1 group;
    int truncation_order = 0; // M
    std::vector<std::function<double(double)>> higher_coeffs;
    double validity_radius = 1.0; // R0
    special::BesselZeroMode bessel_mode = special::BesselZeroMode::continuous;
};

/// Weight in front of the Bessel sum, c0 * sqrt(t^{n-1}/D(t)). Finite
/// and positive on (0, R0], with limit c0 * 2^{-p/2 - q} at t = 0.
double prefactor(const StExpansion& e, double t);
double prefactor_limit0(const GroupRank1& g);

/// Value of the truncated expansion at real spectral parameter lam
/// (the Bessel argument lam * t must be real). Requires 0 < t <= R0.
cplx st_evaluate(const StExpansion& e, cplx lam, double t);

/// Confluent spherical function: the same expansion evaluated at
/// |lambda| * t, which makes it even in lambda by construction and
/// defined for every complex lambda. Requires 0 <= t <= R0. In
/// literal-zero mode the value at t = 0 (and everywhere at lambda = 0)
/// is 0.
cplx confluent_spherical(const GroupRank1& g, cplx lam, double t,
                         special::BesselZeroMode mode = special::BesselZeroMode::continuous,
                         double validity_radius = 1.0);

/// Normalization constant kappa(p, q) that scales the M = 0 expansion
/// term to match the spherical normalization f(0) = 1. The printed
/// combination of c0, D and the normalized Bessel function has the
/// finite positive t -> 0 limit 1/kappa rather than 1; the order checks
/// below compare against kappa-scaled values so that only the
/// truncation order is asserted, never the overall constant.
double normalization_kappa(const GroupRank1& g);

struct OrderFit {
    double slope = 0.0;
    double intercept = 0.0;
    double fit_residual = 0.0; // RMS residual of the log-log fit
    bool skipped = false;
    std::string skip_reason;
};

/// Least-squares slope of log|error| against log t, where error is the
/// deviation between the Gauss-series reference route and the
/// kappa-scaled M = 0 expansion term. Preconditions: M == 0, at least 4
/// points, every t in (0, 0.1], |lam * t| <= 1 throughout.
OrderFit error_order_check(const GroupRank1& g, cplx lam, int M,
                           const std::vector<double>& t_values);

} // namespace sphfn::expansion
