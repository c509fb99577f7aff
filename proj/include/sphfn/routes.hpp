#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sphfn/group.hpp"
#include "sphfn/special.hpp"

namespace sphfn::routes {

/// The independent evaluation routes the engine cross-validates.
enum class Route {
    hyp,              // Gauss series with the (p,q) parameter map
    ode,              // radial-equation integration
    integral_hc,      // periodic-trapezoid integral representation
    integral_contour, // calibrated endpoint-singular integral
    stanton_tomas,    // truncated Bessel expansion, literal normalization
    confluent,        // Bessel expansion at |lambda|
};

Route parse_route(const std::string& name);
std::string route_name(Route r);
std::vector<Route> all_routes();

/// A named operator convention: either a rank-1 group given by (p,q) or
/// the bundled 2 coth 2t convention for SL(2,R). The two SL(2,R)
/// conventions ("sl2r-sec4" with p=2,q=0 and "sl2r-sec2") use different
/// time normalizations and are never converted into one another.
struct Model {
    enum class Kind { rank1, sl2r_sec2 };
    Kind kind = Kind::rank1;
    std::string name;
    GroupRank1 group; // valid when kind == rank1

    bool is_rank1() const { return kind == Kind::rank1; }
};

Model builtin_sl2r_sec4();
Model builtin_sl2r_sec2();
Model model_from_group(GroupRank1 g);

struct EvalOptions {
    double tol = 1e-8;
    special::BesselZeroMode mode = special::BesselZeroMode::continuous;
    double validity_radius = 1.0; // for the expansion routes
};

struct RouteResult {
    cplx value{};
    std::string diag_name;   // "terms", "residual_max", "nodes", ...
    double diag_value = 0.0;
    double aux = 0.0; // tail estimate / doubling delta where applicable
};

/// Evaluates one route at (lambda, t) under a model. Routes that do not
/// apply to the model (integral routes outside sl2r-sec2, series and
/// expansion routes on sl2r-sec2) throw DomainError.
RouteResult evaluate_route(const Model& m, Route r, cplx lam, double t,
                           const EvalOptions& opts = {});

} // namespace sphfn::routes
