// Command-line front end: single-point evaluation, cross-route
// comparison sweeps, algebra axiom checks and expansion order fits.
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "sphfn/algebra.hpp"
#include "sphfn/expansion.hpp"
#include "sphfn/group.hpp"
#include "sphfn/routes.hpp"
#include "sphfn/sweep.hpp"

using namespace sphfn;

namespace {

// Locale-independent shortest round-trip formatting.
std::string fmt(double v)
{
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

// Accepts "1.5", "-0.3", "2+1i", "0.5-2i", "1i", "-i", "i".
cplx parse_complex(const std::string& raw)
{
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s += c;
    if (s.empty())
        throw DomainError("lambda: empty value");

    auto to_double = [](const std::string& txt) {
        if (txt.empty() || txt == "+")
            return 1.0;
        if (txt == "-")
            return -1.0;
        std::size_t pos = 0;
        double v;
        try {
            v = std::stod(txt, &pos);
        } catch (const std::exception&) {
            throw DomainError("lambda: cannot parse number '" + txt + "'");
        }
        if (pos != txt.size())
            throw DomainError("lambda: trailing characters in '" + txt + "'");
        return v;
    };

    if (s.back() != 'i' && s.back() != 'I')
        return cplx(to_double(s), 0.0);

    std::string body = s.substr(0, s.size() - 1);
    // Split at the last top-level +/- that is not an exponent sign.
    std::size_t split = std::string::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
        char c = body[i];
        if ((c == '+' || c == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    if (split == std::string::npos)
        return cplx(0.0, to_double(body));
    double re = to_double(body.substr(0, split));
    std::string im = body.substr(split);
    return cplx(re, to_double(im));
}

std::vector<cplx> parse_lambda_list(const std::vector<std::string>& raw)
{
    std::vector<cplx> out;
    for (const auto& item : raw) {
        std::size_t start = 0;
        while (start <= item.size()) {
            auto comma = item.find(',', start);
            std::string piece =
                item.substr(start, comma == std::string::npos ? comma : comma - start);
            if (!piece.empty())
                out.push_back(parse_complex(piece));
            if (comma == std::string::npos)
                break;
            start = comma + 1;
        }
    }
    if (out.empty())
        throw DomainError("at least one --lambda is required");
    return out;
}

struct ModelChoice {
    std::string group_name = "sl2r-sec4";
    std::string catalog_path;
    int p_override = -1;
    int q_override = 0;
};

void add_model_flags(CLI::App* cmd, ModelChoice& mc)
{
    cmd->add_option("--group", mc.group_name, "model name (built in: sl2r-sec4, sl2r-sec2)");
    cmd->add_option("--catalog", mc.catalog_path,
                    "group catalog file (default: $SPHFN_CATALOG if set)");
    cmd->add_option("--p", mc.p_override, "override multiplicity p (with --q)");
    cmd->add_option("--q", mc.q_override, "override multiplicity q");
}

routes::Model resolve_model(const ModelChoice& mc)
{
    if (mc.p_override >= 0) {
        bool builtin = mc.group_name == "sl2r-sec4" || mc.group_name == "sl2r-sec2";
        return routes::model_from_group(GroupRank1::make(builtin ? "custom" : mc.group_name,
                                                         mc.p_override, mc.q_override));
    }
    if (mc.group_name == "sl2r-sec4")
        return routes::builtin_sl2r_sec4();
    if (mc.group_name == "sl2r-sec2")
        return routes::builtin_sl2r_sec2();

    std::string path = mc.catalog_path;
    if (path.empty())
        if (const char* env = std::getenv("SPHFN_CATALOG"))
            path = env;
    if (path.empty())
        throw DomainError("group '" + mc.group_name +
                          "' is not built in and no catalog was given (--catalog or "
                          "SPHFN_CATALOG)");
    for (auto& g : load_catalog_file(path)) {
        if (g.name == "sl2r-sec4" || g.name == "sl2r-sec2")
            throw DomainError("catalog redefines built-in model '" + g.name + "'");
        if (g.name == mc.group_name)
            return routes::model_from_group(std::move(g));
    }
    throw DomainError("group '" + mc.group_name + "' not found in catalog '" + path + "'");
}

special::BesselZeroMode parse_mode(const std::string& mode)
{
    if (mode == "paper-literal")
        return special::BesselZeroMode::literal_zero;
    if (mode == "continuous")
        return special::BesselZeroMode::continuous;
    throw DomainError("--mode must be 'paper-literal' or 'continuous'");
}

constexpr const char* csv_header =
    "group,lambda_re,lambda_im,t,route,value_re,value_im,abs_diff_vs_first";

int cmd_eval(const ModelChoice& mc, const std::string& lambda_raw, double t,
             const std::string& route_name, double tol, const std::string& mode,
             const std::string& format)
{
    routes::Model model = resolve_model(mc);
    routes::Route route = routes::parse_route(route_name);
    routes::EvalOptions opts;
    opts.tol = tol;
    opts.mode = parse_mode(mode);
    cplx lam = parse_complex(lambda_raw);

    routes::RouteResult res = routes::evaluate_route(model, route, lam, t, opts);

    if (format == "csv") {
        std::cout << csv_header << "\n"
                  << model.name << ',' << fmt(lam.real()) << ',' << fmt(lam.imag()) << ','
                  << fmt(t) << ',' << routes::route_name(route) << ','
                  << fmt(res.value.real()) << ',' << fmt(res.value.imag()) << ",0\n";
    } else if (format == "pretty") {
        std::cout << "group     " << model.name << "\n"
                  << "lambda    " << fmt(lam.real()) << (lam.imag() < 0 ? "" : "+")
                  << fmt(lam.imag()) << "i\n"
                  << "t         " << fmt(t) << "\n"
                  << "route     " << routes::route_name(route) << "\n"
                  << "value_re  " << fmt(res.value.real()) << "\n"
                  << "value_im  " << fmt(res.value.imag()) << "\n"
                  << res.diag_name << "  " << fmt(res.diag_value) << "\n"
                  << "tail      " << fmt(res.aux) << "\n";
    } else {
        throw DomainError("--format must be 'csv' or 'pretty'");
    }
    return 0;
}

int cmd_compare(const ModelChoice& mc, const std::vector<std::string>& lambda_raw,
                std::optional<double> t_single, double t_min, double t_max, int t_steps,
                const std::string& routes_raw, double tol, const std::string& mode,
                bool serial)
{
    sweep::SweepRequest req;
    req.model = resolve_model(mc);
    req.lambdas = parse_lambda_list(lambda_raw);
    // `tol` is the pass/fail threshold on route differences; evaluation
    // runs at least as tight so the comparison measures the routes, not
    // the solvers.
    req.opts.tol = tol > 0.0 ? std::min(tol, 1e-8) : 1e-10;
    req.opts.mode = parse_mode(mode);

    if (t_single) {
        req.ts = {*t_single};
    } else {
        if (t_steps < 1)
            throw DomainError("--t-steps must be >= 1");
        if (!(t_max >= t_min))
            throw DomainError("--t-max must be >= --t-min");
        for (int i = 0; i < t_steps; ++i)
            req.ts.push_back(t_steps == 1
                                 ? t_min
                                 : t_min + i * (t_max - t_min) / (t_steps - 1));
    }

    std::size_t start = 0;
    while (start <= routes_raw.size()) {
        auto comma = routes_raw.find(',', start);
        std::string piece =
            routes_raw.substr(start, comma == std::string::npos ? comma : comma - start);
        if (!piece.empty())
            req.route_list.push_back(routes::parse_route(piece));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    if (req.route_list.size() < 2)
        throw DomainError("compare needs at least 2 routes");

    auto rows = serial ? sweep::sweep_serial(req) : sweep::sweep_parallel(req);

    bool any_failure = false;
    bool over_tol = false;
    std::cout << csv_header << "\n";
    for (const auto& row : rows) {
        const cplx lam = req.lambdas[row.lambda_index];
        std::cout << req.model.name << ',' << fmt(lam.real()) << ',' << fmt(lam.imag())
                  << ',' << fmt(req.ts[row.t_index]) << ',' << routes::route_name(row.route)
                  << ',';
        if (row.ok) {
            std::cout << fmt(row.value.real()) << ',' << fmt(row.value.imag()) << ',';
            if (std::isnan(row.abs_diff_vs_first)) {
                std::cout << "\n"; // reference route failed for this point
                any_failure = true;
            } else {
                std::cout << fmt(row.abs_diff_vs_first) << "\n";
                if (row.abs_diff_vs_first > tol)
                    over_tol = true;
            }
        } else {
            std::cout << ",,\n";
            any_failure = true;
        }
    }
    if (any_failure)
        return 4;
    return over_tol ? 1 : 0;
}

int cmd_axioms(int trials, std::uint64_t seed)
{
    auto reports = algebra::run_axiom_trials(trials, seed);
    bool all_pass = true;
    for (const auto& rep : reports) {
        bool ok = rep.passes == rep.trials;
        all_pass = all_pass && ok;
        std::printf("%-36s %d/%d %s\n", rep.label.c_str(), rep.passes, rep.trials,
                    ok ? "pass" : "FAIL");
    }
    std::printf("axioms: %zu checked, seed-deterministic\n", reports.size());
    return all_pass ? 0 : 1;
}

int cmd_error_order(const ModelChoice& mc, const std::string& lambda_raw, int M,
                    double t_start, int points)
{
    routes::Model model = resolve_model(mc);
    if (!model.is_rank1())
        throw DomainError("error-order needs a rank-1 group model");
    if (points < 4)
        throw DomainError("error-order: need at least 4 points for a fit");
    cplx lam = parse_complex(lambda_raw);

    std::vector<double> ts;
    for (int i = 0; i < points; ++i)
        ts.push_back(t_start / std::pow(2.0, i));

    auto fit = expansion::error_order_check(model.group, lam, M, ts);
    if (fit.skipped) {
        std::cout << "skipped: " << fit.skip_reason << "\n";
        return 0;
    }
    double threshold = 2.0 * (M + 1) - 0.2;
    bool pass = fit.slope >= threshold;
    std::cout << "slope      " << fmt(fit.slope) << "\n"
              << "residual   " << fmt(fit.fit_residual) << "\n"
              << "threshold  " << fmt(threshold) << "\n"
              << "verdict    " << (pass ? "pass" : "fail") << "\n";
    return pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"spherical and confluent spherical function evaluator"};
    app.require_subcommand(1);

    ModelChoice eval_mc, cmp_mc, ord_mc;
    std::string eval_lambda = "1", eval_route = "hyp", eval_mode = "continuous",
                eval_format = "pretty";
    double eval_t = 0.5, eval_tol = 1e-8;
    auto* eval = app.add_subcommand("eval", "evaluate one route at one point");
    add_model_flags(eval, eval_mc);
    eval->add_option("--lambda", eval_lambda, "spectral parameter, a+bi syntax");
    eval->add_option("--t", eval_t, "radial coordinate");
    eval->add_option("--route", eval_route,
                     "hyp | ode | integral-hc | integral-contour | stanton-tomas | confluent");
    eval->add_option("--tol", eval_tol, "tolerance");
    eval->add_option("--mode", eval_mode, "paper-literal | continuous");
    eval->add_option("--format", eval_format, "csv | pretty");

    std::vector<std::string> cmp_lambda;
    std::string cmp_routes = "hyp,ode", cmp_mode = "continuous";
    std::optional<double> cmp_t;
    double cmp_tmin = 0.01, cmp_tmax = 2.0, cmp_tol = 1e-8;
    int cmp_tsteps = 20;
    bool cmp_serial = false;
    auto* cmp = app.add_subcommand("compare", "cross-route comparison sweep (CSV)");
    add_model_flags(cmp, cmp_mc);
    cmp->add_option("--lambda", cmp_lambda, "spectral parameters (repeat or comma-separate)");
    cmp->add_option("--t", cmp_t, "single t value");
    cmp->add_option("--t-min", cmp_tmin, "sweep start");
    cmp->add_option("--t-max", cmp_tmax, "sweep end");
    cmp->add_option("--t-steps", cmp_tsteps, "sweep point count");
    cmp->add_option("--routes", cmp_routes, "comma-separated route list (>= 2)");
    cmp->add_option("--tol", cmp_tol, "pass/fail tolerance on abs_diff_vs_first");
    cmp->add_option("--mode", cmp_mode, "paper-literal | continuous");
    cmp->add_flag("--serial", cmp_serial, "run the serial reference sweep");

    int ax_trials = 1000;
    std::uint64_t ax_seed = 20240801;
    auto* ax = app.add_subcommand("axioms", "randomized index-algebra axiom checks");
    ax->add_option("--trials", ax_trials, "trials per axiom");
    ax->add_option("--seed", ax_seed, "random seed");

    std::string ord_lambda = "0.7";
    int ord_m = 0, ord_points = 4;
    double ord_tstart = 1e-2;
    auto* ord = app.add_subcommand("error-order", "truncation order fit for the expansion");
    add_model_flags(ord, ord_mc);
    ord->add_option("--lambda", ord_lambda, "spectral parameter (real)");
    ord->add_option("--m", ord_m, "truncation order (0)");
    ord->add_option("--t-start", ord_tstart, "largest t of the geometric sequence");
    ord->add_option("--points", ord_points, "number of geometric points (>= 4)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (eval->parsed())
            return cmd_eval(eval_mc, eval_lambda, eval_t, eval_route, eval_tol, eval_mode,
                            eval_format);
        if (cmp->parsed())
            return cmd_compare(cmp_mc, cmp_lambda, cmp_t, cmp_tmin, cmp_tmax, cmp_tsteps,
                               cmp_routes, cmp_tol, cmp_mode, cmp_serial);
        if (ax->parsed())
            return cmd_axioms(ax_trials, ax_seed);
        if (ord->parsed())
            return cmd_error_order(ord_mc, ord_lambda, ord_m, ord_tstart, ord_points);
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ConvergenceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
