#include "sphfn/ode.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>

namespace sphfn::ode {

namespace {

using State = std::array<cplx, 2>; // (f, f')

// Dormand-Prince 5(4) pair with Hairer's quartic dense output.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
constexpr double d1 = -12715105075.0 / 11282082432.0, d3 = 87487479700.0 / 32700410799.0,
                 d4 = -10690763975.0 / 1880347072.0, d5 = 701980252875.0 / 199316789632.0,
                 d6 = -1453857185.0 / 822651844.0, d7 = 69997945.0 / 29380423.0;

// One component of the dense interpolant in the power basis, so the
// residual can re-differentiate it exactly.
struct DensePoly {
    double coef[5];

    double eval(double th) const
    {
        return ((coef[4] * th + coef[3]) * th + coef[2]) * th * th + coef[1] * th + coef[0];
    }
    double deriv(double th, double h) const
    {
        return (((4.0 * coef[4] * th + 3.0 * coef[3]) * th + 2.0 * coef[2]) * th + coef[1]) / h;
    }
};

DensePoly make_poly(double r1, double r2, double r3, double r4, double r5)
{
    // r1 + th*r2 + th(1-th)r3 + th^2(1-th)r4 + th^2(1-th)^2 r5
    return DensePoly{{r1, r2 + r3, -r3 + r4 + r5, -r4 - 2.0 * r5, r5}};
}

struct StepInterp {
    double t0 = 0.0;
    double h = 0.0;
    DensePoly f_re, f_im, df_re, df_im;

    cplx value(double t) const
    {
        double th = (t - t0) / h;
        return {f_re.eval(th), f_im.eval(th)};
    }
    cplx derivative(double t) const
    {
        double th = (t - t0) / h;
        return {df_re.eval(th), df_im.eval(th)};
    }
    cplx second_derivative(double t) const
    {
        double th = (t - t0) / h;
        return {df_re.deriv(th, h), df_im.deriv(th, h)};
    }
};

struct Problem {
    std::function<double(double)> drift;
    std::function<cplx(double)> mucoef; // f'' + drift f' = mucoef * f
};

State rhs(const Problem& pr, double t, const State& y)
{
    return State{y[1], pr.mucoef(t) * y[0] - pr.drift(t) * y[1]};
}

double residual_at(const Problem& pr, const StepInterp& in, double t)
{
    cplx f = in.value(t);
    cplx df = in.derivative(t);
    cplx ddf = in.second_derivative(t);
    return std::abs(ddf + pr.drift(t) * df - pr.mucoef(t) * f);
}

// Adaptive integration from (t_start, y_start) filling solution samples
// at the requested grid points. Local error per unit step is controlled
// against tol; grid values come from the dense interpolant of the step
// that covers them.
void integrate_adaptive(const Problem& pr, double t_start, State y, double tol,
                        const std::vector<double>& grid, std::size_t first_unfilled,
                        OdeSolution& out)
{
    const double t_end = grid.back();
    std::size_t gi = first_unfilled;
    if (gi >= grid.size())
        return;

    double t = t_start;
    double h = std::min({1e-4, 0.1 * std::max(t, 1e-6), t_end - t});
    h = std::max(h, 1e-12);
    State k1 = rhs(pr, t, y);

    const int max_steps = 2000000;
    for (int step = 0; step < max_steps && gi < grid.size(); ++step) {
        if (t + h > t_end)
            h = t_end - t;
        if (!(h > 1e-13 * std::max(1.0, std::abs(t))))
            throw ConvergenceError("ode: step-size underflow at t = " + std::to_string(t));

        State k2, k3, k4, k5, k6, k7, y5;
        auto axpy = [&](std::initializer_list<std::pair<double, const State*>> terms) {
            State r = y;
            for (auto& [a, k] : terms) {
                r[0] += h * a * (*k)[0];
                r[1] += h * a * (*k)[1];
            }
            return r;
        };
        k2 = rhs(pr, t + c2 * h, axpy({{a21, &k1}}));
        k3 = rhs(pr, t + c3 * h, axpy({{a31, &k1}, {a32, &k2}}));
        k4 = rhs(pr, t + c4 * h, axpy({{a41, &k1}, {a42, &k2}, {a43, &k3}}));
        k5 = rhs(pr, t + c5 * h, axpy({{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}));
        k6 = rhs(pr, t + h, axpy({{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}));
        y5 = axpy({{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}});
        k7 = rhs(pr, t + h, y5);

        double err = 0.0;
        for (int i = 0; i < 2; ++i) {
            cplx e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] +
                          e7 * k7[i]);
            double sc = 1.0 + std::max(std::abs(y[i]), std::abs(y5[i]));
            double r = std::abs(e) / sc;
            err += r * r;
        }
        err = std::sqrt(0.5 * err);

        double target = tol * h; // error per unit step
        if (err <= target) {
            StepInterp in;
            in.t0 = t;
            in.h = h;
            for (int i = 0; i < 2; ++i) {
                cplx ydiff = y5[i] - y[i];
                cplx bspl = h * k1[i] - ydiff;
                cplx r4c = ydiff - h * k7[i] - bspl;
                cplx r5c = h * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] +
                                d6 * k6[i] + d7 * k7[i]);
                DensePoly re = make_poly(y[i].real(), ydiff.real(), bspl.real(), r4c.real(),
                                         r5c.real());
                DensePoly im = make_poly(y[i].imag(), ydiff.imag(), bspl.imag(), r4c.imag(),
                                         r5c.imag());
                if (i == 0) {
                    in.f_re = re;
                    in.f_im = im;
                } else {
                    in.df_re = re;
                    in.df_im = im;
                }
            }
            double t_new = t + h;
            while (gi < grid.size() && grid[gi] <= t_new + 1e-14 * std::max(1.0, t_new)) {
                double tg = std::min(grid[gi], t_new);
                out.values[gi] = in.value(tg);
                out.derivative_values[gi] = in.derivative(tg);
                out.residual_max = std::max(out.residual_max, residual_at(pr, in, tg));
                ++gi;
            }
            t = t_new;
            y = y5;
            k1 = k7; // first-same-as-last
            double fac = 0.9 * std::pow(target / std::max(err, 1e-300), 0.25);
            h *= std::clamp(fac, 0.25, 4.0);
        } else {
            double fac = 0.9 * std::pow(target / err, 0.25);
            h *= std::clamp(fac, 0.1, 1.0);
        }
    }
    if (gi < grid.size())
        throw ConvergenceError("ode: step budget exhausted before reaching t = " +
                               std::to_string(grid[gi]));
}

void check_grid(const std::vector<double>& grid, double lower, const char* what)
{
    if (grid.empty())
        throw DomainError(std::string(what) + ": empty grid");
    double prev = -std::numeric_limits<double>::infinity();
    for (double t : grid) {
        if (!(t >= lower))
            throw DomainError(std::string(what) + ": grid point " + std::to_string(t) +
                              " below domain");
        if (!(t > prev))
            throw DomainError(std::string(what) + ": grid must be strictly ascending");
        prev = t;
    }
}

} // namespace

RadialOperator RadialOperator::rank1(int p, int q)
{
    if (p < 1 || q < 0)
        throw DomainError("RadialOperator: need p >= 1, q >= 0");
    return RadialOperator{Kind::rank1, p, q};
}

RadialOperator RadialOperator::sl2r_sec2()
{
    return RadialOperator{Kind::sl2r_sec2, 0, 0};
}

double RadialOperator::drift(double t) const
{
    if (kind == Kind::sl2r_sec2)
        return 2.0 / std::tanh(2.0 * t);
    return (p + q) / std::tanh(t) + q * std::tanh(t);
}

double RadialOperator::sing_s() const
{
    return kind == Kind::sl2r_sec2 ? 1.0 : p + q;
}

double RadialOperator::sing_w() const
{
    // coth t = 1/t + t/3 + O(t^3), tanh t = t + O(t^3);
    // 2 coth 2t = 1/t + 4t/3 + O(t^3).
    if (kind == Kind::sl2r_sec2)
        return 4.0 / 3.0;
    return (p + q) / 3.0 + q;
}

cplx RadialOperator::mu_for(cplx lam) const
{
    if (kind == Kind::sl2r_sec2)
        return lam * lam - 1.0;
    double rho0 = 0.5 * (p + 2 * q);
    return lam * lam - rho0 * rho0;
}

SingularStart singular_start(const RadialOperator& op, cplx mu, double t0, int order)
{
    if (!(t0 > 0.0) || t0 > 1e-2)
        throw DomainError("singular_start: t0 must lie in (0, 1e-2], got " +
                          std::to_string(t0));
    if (order != 2 && order != 4)
        throw DomainError("singular_start: expansion order must be 2 or 4");

    double s = op.sing_s();
    cplx c2t = mu / (2.0 * (1.0 + s));
    cplx f = 1.0 + c2t * t0 * t0;
    cplx df = 2.0 * c2t * t0;
    if (order == 4) {
        cplx c4t = c2t * (mu - 2.0 * op.sing_w()) / (4.0 * (3.0 + s));
        f += c4t * t0 * t0 * t0 * t0;
        df += 4.0 * c4t * t0 * t0 * t0;
    }
    return SingularStart{f, df};
}

OdeSolution integrate(const RadialOperator& op, cplx mu, const std::vector<double>& t_grid,
                      double tol, double start_offset, int start_order)
{
    check_grid(t_grid, std::numeric_limits<double>::min(), "integrate");
    if (!(tol > 0.0))
        throw DomainError("integrate: tol must be > 0");

    OdeSolution out;
    out.grid = t_grid;
    out.values.resize(t_grid.size());
    out.derivative_values.resize(t_grid.size());

    double t0 = std::min(start_offset, t_grid.front());
    SingularStart start = singular_start(op, mu, t0, start_order);

    Problem pr{[&op](double t) { return op.drift(t); }, [mu](double) { return mu; }};

    std::size_t first = 0;
    if (t_grid.front() <= t0) {
        // The grid begins at the expansion point itself.
        out.values[0] = start.f;
        out.derivative_values[0] = start.df;
        double s = op.sing_s();
        cplx c2t = mu / (2.0 * (1.0 + s));
        cplx ddf = 2.0 * c2t;
        if (start_order == 4) {
            cplx c4t = c2t * (mu - 2.0 * op.sing_w()) / (4.0 * (3.0 + s));
            ddf += 12.0 * c4t * t0 * t0;
        }
        out.residual_max = std::abs(ddf + op.drift(t0) * start.df - mu * start.f);
        first = 1;
    }
    integrate_adaptive(pr, t0, State{start.f, start.df}, tol / 10.0, t_grid, first, out);
    return out;
}

double to_hypergeometric_z(double t)
{
    double s = std::sinh(t);
    return -s * s;
}

double to_legendre_z(double t)
{
    if (!(t >= 0.0))
        throw DomainError("to_legendre_z: t must be >= 0");
    return std::cosh(2.0 * t);
}

namespace {

// Regular branch at z = 1, as a power series in x = z - 1:
//   F = sum_k g_k x^k,  g_0 = 1,  g_k = g_{k-1} (nu_e - (k-1)k) / (2 k^2),
// where nu_e = (lambda^2-1)/4 is the eigenterm. Converges fast for
// |x| << 1; also returns F' and F'' for the residual bookkeeping.
// (Validated against the Gauss-series representation in the tests.)
struct LocalLegendre {
    cplx f, df, ddf;
};

LocalLegendre legendre_series(cplx nu_e, double x)
{
    cplx g(1.0, 0.0);
    cplx f = g, df = 0.0, ddf = 0.0;
    double xk = 1.0;
    for (int k = 1; k <= 40; ++k) {
        g *= (nu_e - (k - 1.0) * k) / (2.0 * k * k);
        cplx term = g * xk; // g_k x^{k-1}
        df += static_cast<double>(k) * term;
        if (k >= 2)
            ddf += static_cast<double>(k) * (k - 1.0) * term / x;
        xk *= x;
        f += g * xk;
        if (std::abs(g) * xk < 1e-18 * std::abs(f) && k > 3)
            break;
    }
    return LocalLegendre{f, df, ddf};
}

} // namespace

OdeSolution legendre_solve(cplx lam, const std::vector<double>& z_grid, double tol)
{
    check_grid(z_grid, 1.0, "legendre_solve");
    if (!(tol > 0.0))
        throw DomainError("legendre_solve: tol must be > 0");

    const cplx nu_e = (lam * lam - 1.0) / 4.0;

    OdeSolution out;
    out.grid = z_grid;
    out.values.resize(z_grid.size());
    out.derivative_values.resize(z_grid.size());

    Problem pr{[](double z) { return 2.0 * z / (z * z - 1.0); },
               [nu_e](double z) { return nu_e / (z * z - 1.0); }};

    const double x0 = 1e-2;
    const double z_start = 1.0 + x0;
    std::size_t gi = 0;
    while (gi < z_grid.size() && z_grid[gi] <= z_start) {
        double x = z_grid[gi] - 1.0;
        if (x <= 0.0) {
            out.values[gi] = cplx(1.0, 0.0);
            out.derivative_values[gi] = nu_e / 2.0;
        } else {
            LocalLegendre loc = legendre_series(nu_e, x);
            out.values[gi] = loc.f;
            out.derivative_values[gi] = loc.df;
            double z = z_grid[gi];
            out.residual_max =
                std::max(out.residual_max,
                         std::abs(loc.ddf + pr.drift(z) * loc.df - pr.mucoef(z) * loc.f));
        }
        ++gi;
    }
    if (gi == z_grid.size())
        return out;

    LocalLegendre start = legendre_series(nu_e, x0);
    integrate_adaptive(pr, z_start, State{start.f, start.df}, tol / 10.0, z_grid, gi, out);
    return out;
}

} // namespace sphfn::ode
