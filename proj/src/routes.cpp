#include "sphfn/routes.hpp"

#include <cmath>
#include <mutex>

#include "sphfn/expansion.hpp"
#include "sphfn/integrals.hpp"
#include "sphfn/ode.hpp"

namespace sphfn::routes {

Route parse_route(const std::string& name)
{
    if (name == "hyp")
        return Route::hyp;
    if (name == "ode")
        return Route::ode;
    if (name == "integral-hc")
        return Route::integral_hc;
    if (name == "integral-contour")
        return Route::integral_contour;
    if (name == "stanton-tomas")
        return Route::stanton_tomas;
    if (name == "confluent")
        return Route::confluent;
    throw DomainError("unknown route '" + name +
                      "' (expected hyp, ode, integral-hc, integral-contour, stanton-tomas "
                      "or confluent)");
}

std::string route_name(Route r)
{
    switch (r) {
    case Route::hyp: return "hyp";
    case Route::ode: return "ode";
    case Route::integral_hc: return "integral-hc";
    case Route::integral_contour: return "integral-contour";
    case Route::stanton_tomas: return "stanton-tomas";
    case Route::confluent: return "confluent";
    }
    return "?";
}

std::vector<Route> all_routes()
{
    return {Route::hyp, Route::ode, Route::integral_hc, Route::integral_contour,
            Route::stanton_tomas, Route::confluent};
}

Model builtin_sl2r_sec4()
{
    return Model{Model::Kind::rank1, "sl2r-sec4", GroupRank1::make("sl2r-sec4", 2, 0)};
}

Model builtin_sl2r_sec2()
{
    return Model{Model::Kind::sl2r_sec2, "sl2r-sec2", GroupRank1{}};
}

Model model_from_group(GroupRank1 g)
{
    std::string name = g.name;
    return Model{Model::Kind::rank1, std::move(name), std::move(g)};
}

namespace {

// The contour constant is fixed once per process from a fixed reference
// point, so every later evaluation is deterministic.
double calibrated_contour_constant()
{
    static std::once_flag flag;
    static double c = 0.0;
    std::call_once(flag, [] { c = integrals::calibrate_contour_constant(0.5, cplx(0.8, 0.0)); });
    return c;
}

const GroupRank1& require_rank1(const Model& m, Route r)
{
    if (!m.is_rank1())
        throw DomainError("route " + route_name(r) + " needs a rank-1 group model; '" +
                          m.name + "' does not provide multiplicities");
    return m.group;
}

} // namespace

RouteResult evaluate_route(const Model& m, Route r, cplx lam, double t, const EvalOptions& opts)
{
    switch (r) {
    case Route::hyp: {
        const GroupRank1& g = require_rank1(m, r);
        auto hp = hyp_params(g, lam);
        auto sr = special::gauss_2f1(hp, ode::to_hypergeometric_z(t),
                                     std::min(opts.tol, special::default_tol));
        return RouteResult{sr.value, "terms", static_cast<double>(sr.terms_used),
                           sr.tail_estimate};
    }
    case Route::ode: {
        if (!(t >= 0.0))
            throw DomainError("ode route: t must be >= 0");
        if (t == 0.0)
            return RouteResult{cplx(1.0, 0.0), "residual_max", 0.0, 0.0};
        ode::RadialOperator op = m.is_rank1()
                                     ? ode::RadialOperator::rank1(m.group.p, m.group.q)
                                     : ode::RadialOperator::sl2r_sec2();
        cplx mu = op.mu_for(lam);
        auto sol = ode::integrate(op, mu, {t}, opts.tol);
        return RouteResult{sol.values.front(), "residual_max", sol.residual_max, 0.0};
    }
    case Route::integral_hc: {
        if (m.kind != Model::Kind::sl2r_sec2)
            throw DomainError("integral routes require the sl2r-sec2 model");
        auto sr = integrals::hc_integral_converged(lam, t);
        return RouteResult{sr.value, "nodes", static_cast<double>(sr.terms_used),
                           sr.tail_estimate};
    }
    case Route::integral_contour: {
        if (m.kind != Model::Kind::sl2r_sec2)
            throw DomainError("integral routes require the sl2r-sec2 model");
        if (!(t > 0.0))
            throw DomainError("integral-contour route: t must be > 0");
        double c = calibrated_contour_constant();
        auto sr = integrals::contour_integral_converged(lam, t, c);
        return RouteResult{sr.value, "nodes", static_cast<double>(sr.terms_used),
                           sr.tail_estimate};
    }
    case Route::stanton_tomas: {
        const GroupRank1& g = require_rank1(m, r);
        expansion::StExpansion e{g, 0, {}, opts.validity_radius, opts.mode};
        return RouteResult{expansion::st_evaluate(e, lam, t), "expansion_terms", 1.0, 0.0};
    }
    case Route::confluent: {
        const GroupRank1& g = require_rank1(m, r);
        cplx v = expansion::confluent_spherical(g, lam, t, opts.mode, opts.validity_radius);
        return RouteResult{v, "expansion_terms", 1.0, 0.0};
    }
    }
    throw DomainError("evaluate_route: unhandled route");
}

} // namespace sphfn::routes
