#pragma once

#include "sphfn/series.hpp"

namespace sphfn::integrals {

/// Spherical-function integral
///   (1/2pi) int_0^{2pi} (cosh t + sinh t cos h)^{lambda - 1/2} dh,
/// by the periodic trapezoid rule with `nodes` points. t >= 0,
/// nodes >= 16. The integrand is positive and analytic, so convergence
/// in the node count is spectral.
cplx hc_integral(cplx lam, double t, int nodes);

/// Node-doubling driver for hc_integral: starts at 16 nodes and doubles
/// until successive values differ by <= 1e-10, up to `max_nodes`.
/// terms_used reports the final node count, tail_estimate the last
/// doubling difference. Throws ConvergenceError if doubling still moves
/// the value at max_nodes.
SeriesResult hc_integral_converged(cplx lam, double t, int max_nodes = 8192);

/// Companion integral representation
///   c * int_0^t cosh(lambda s) (cosh t - cosh s)^{-1/2} ds,  t > 0,
/// with the endpoint square-root singularity absorbed by Chebyshev
/// nodes (s = t cos u against the (t^2-s^2)^{-1/2} weight). `c_cal` is
/// the overall constant, left open by the representation and fixed by
/// calibrate_contour_constant.
///
/// For purely imaginary lambda = i*b the kernel cosh(lambda s) is
/// cos(b s), which is the small-t regime in which the integral reduces
/// to a Bessel function of order zero.
cplx contour_integral(cplx lam, double t, double c_cal, int nodes);

/// Node-doubling driver for contour_integral, same contract as
/// hc_integral_converged.
SeriesResult contour_integral_converged(cplx lam, double t, double c_cal,
                                        int max_nodes = 8192);

/// Determines the contour constant by matching contour_integral to
/// hc_integral at (lam_ref, t_ref), then validates the same constant at
/// five other (lambda, t) points to 1e-5. A validation failure throws
/// ConvergenceError — it would mean the two representations do not
/// describe the same function. Requires t_ref in (0, 1] and real
/// lam_ref.
double calibrate_contour_constant(double t_ref, cplx lam_ref);

} // namespace sphfn::integrals
