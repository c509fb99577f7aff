#pragma once

#include <vector>

#include "sphfn/group.hpp"
#include "sphfn/series.hpp"

namespace sphfn::ode {

/// Radial second-order operator  d^2/dt^2 + drift(t) d/dt (+ potential),
/// in one of two conventions:
///  - rank1(p,q):   drift (p+q) coth t + q tanh t, no potential term;
///  - sl2r_sec2():  drift 2 coth 2t, constant potential 1 (folded into
///    the eigenvalue as mu = lambda^2 - 1).
struct RadialOperator {
    enum class Kind { rank1, sl2r_sec2 };

    Kind kind = Kind::rank1;
    int p = 0;
    int q = 0;

    static RadialOperator rank1(int p, int q);
    static RadialOperator sl2r_sec2();

    double drift(double t) const;
    double potential() const { return kind == Kind::sl2r_sec2 ? 1.0 : 0.0; }

    /// Leading drift behavior s/t + w*t + O(t^3) near the singular point.
    double sing_s() const;
    double sing_w() const;

    /// Eigenvalue of the normalized equation f'' + drift f' = mu f.
    cplx mu_for(cplx lam) const;
};

/// Solution samples on an ascending positive grid, with first
/// derivatives and the largest equation residual seen at the grid
/// points (from re-differentiating the integrator's local interpolant).
struct OdeSolution {
    std::vector<double> grid;
    std::vector<cplx> values;
    std::vector<cplx> derivative_values;
    double residual_max = 0.0;
};

struct SingularStart {
    cplx f;
    cplx df;
};

/// Start values for the regular solution normalized by f(0) = 1, from
/// the local expansion f(t) = 1 + c2 t^2 + c4 t^4 with
/// c2 = mu / (2(1+s)) and c4 = c2 (mu - 2w) / (4(3+s)).
/// `order` is 2 or 4; requires 0 < t0 <= 1e-2.
SingularStart singular_start(const RadialOperator& op, cplx mu, double t0, int order = 2);

inline constexpr double default_start_offset = 1e-3;
inline constexpr int default_start_order = 2;

/// Integrates f'' + drift(t) f' = mu f from the singular-point expansion
/// through the requested grid. Adaptive embedded Runge-Kutta (order 5
/// with order-4 error control) with dense output; local error per unit
/// step is held an order below `tol` so the residual contract
/// residual_max <= 100*tol has margin. The expansion offset and order
/// are configurable; the offset is capped by the first grid point.
OdeSolution integrate(const RadialOperator& op, cplx mu, const std::vector<double>& t_grid,
                      double tol, double start_offset = default_start_offset,
                      int start_order = default_start_order);

/// z = -(sinh t)^2. Maps the radial variable to the Gauss-series
/// argument; always <= 0.
double to_hypergeometric_z(double t);

/// z = cosh 2t, t >= 0. Maps the radial variable to the Legendre
/// variable; always >= 1.
double to_legendre_z(double t);

/// Integrates (1-z^2) F'' - 2z F' + ((lambda^2-1)/4) F = 0 on z >= 1
/// with the normalization F(1) = 1 (regular branch at the singular
/// endpoint z = 1).
OdeSolution legendre_solve(cplx lam, const std::vector<double>& z_grid, double tol);

} // namespace sphfn::ode
