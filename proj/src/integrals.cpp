#include "sphfn/integrals.hpp"

#include <cmath>

namespace sphfn::integrals {

namespace {

constexpr double pi = 3.141592653589793238462643383279502884;

template <typename Eval>
SeriesResult doubled_until_stable(Eval eval, int start_nodes, int max_nodes, const char* what)
{
    int n = start_nodes;
    cplx prev = eval(n);
    while (2 * n <= max_nodes) {
        n *= 2;
        cplx cur = eval(n);
        double delta = std::abs(cur - prev);
        if (delta <= 1e-10 * std::max(1.0, std::abs(cur)))
            return SeriesResult{cur, n, delta};
        prev = cur;
    }
    throw ConvergenceError(std::string(what) +
                           ": node doubling still moves the value at n = " +
                           std::to_string(n));
}

} // namespace

cplx hc_integral(cplx lam, double t, int nodes)
{
    if (!(t >= 0.0))
        throw DomainError("hc_integral: t must be >= 0");
    if (nodes < 16)
        throw DomainError("hc_integral: need at least 16 nodes");

    double ch = std::cosh(t), sh = std::sinh(t);
    cplx expo = lam - 0.5;
    cplx sum(0.0, 0.0);
    for (int k = 0; k < nodes; ++k) {
        double theta = 2.0 * pi * k / nodes;
        double base = ch + sh * std::cos(theta); // > 0 for all t >= 0
        sum += std::pow(cplx(base, 0.0), expo);
    }
    return sum / static_cast<double>(nodes);
}

SeriesResult hc_integral_converged(cplx lam, double t, int max_nodes)
{
    return doubled_until_stable([&](int n) { return hc_integral(lam, t, n); }, 16, max_nodes,
                                "hc_integral");
}

cplx contour_integral(cplx lam, double t, double c_cal, int nodes)
{
    if (!(t > 0.0))
        throw DomainError("contour_integral: t must be > 0");
    if (nodes < 8)
        throw DomainError("contour_integral: need at least 8 nodes");

    // int_{-t}^{t} g(s) (t^2-s^2)^{-1/2} ds with Chebyshev nodes
    // s_k = t cos((2k-1)pi/2N) and uniform weight pi/N; the remaining
    // factor g(s) = cosh(lambda s) sqrt((t^2-s^2)/(cosh t - cosh s)) is
    // analytic across s = +-t. The difference of coshes is evaluated as
    // 2 sinh((t+s)/2) sinh((t-s)/2) to keep the endpoints exact.
    cplx sum(0.0, 0.0);
    for (int k = 1; k <= nodes; ++k) {
        double u = (2.0 * k - 1.0) * pi / (2.0 * nodes);
        double s = t * std::cos(u);
        double d = 2.0 * t * std::sin(u / 2.0) * std::sin(u / 2.0); // t - s, cancellation-free
        double w = 2.0 * std::sinh(0.5 * (t + s)) * std::sinh(0.5 * d);
        double ratio = (d * (t + s)) / w;
        sum += std::cosh(lam * s) * std::sqrt(ratio);
    }
    // Halve for the symmetric fold back to [0, t].
    return c_cal * 0.5 * (pi / nodes) * sum;
}

SeriesResult contour_integral_converged(cplx lam, double t, double c_cal, int max_nodes)
{
    return doubled_until_stable([&](int n) { return contour_integral(lam, t, c_cal, n); }, 32,
                                max_nodes, "contour_integral");
}

double calibrate_contour_constant(double t_ref, cplx lam_ref)
{
    if (!(t_ref > 0.0 && t_ref <= 1.0))
        throw DomainError("calibrate_contour_constant: t_ref must lie in (0, 1]");
    if (lam_ref.imag() != 0.0)
        throw DomainError("calibrate_contour_constant: lam_ref must be real");

    cplx target = hc_integral_converged(lam_ref, t_ref).value;
    cplx raw = contour_integral_converged(lam_ref, t_ref, 1.0).value;
    double c = (target / raw).real();

    const struct {
        double lam, t;
    } checks[] = {{0.7, 0.3}, {1.5, 0.8}, {0.9, 1.0}, {2.0, 0.25}, {0.4, 1.2}};
    for (auto [lam, t] : checks) {
        cplx want = hc_integral_converged(cplx(lam, 0.0), t).value;
        cplx got = contour_integral_converged(cplx(lam, 0.0), t, c).value;
        if (std::abs(want - got) > 1e-5)
            throw ConvergenceError(
                "calibrate_contour_constant: validation failed at (lambda, t) = (" +
                std::to_string(lam) + ", " + std::to_string(t) +
                "); the representations disagree");
    }
    return c;
}

} // namespace sphfn::integrals
