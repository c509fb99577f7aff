#include "sphfn/sweep.hpp"

#include <cmath>
#include <limits>

namespace sphfn::sweep {

namespace {

// Evaluates every route at one (lambda, t) point, writing into the
// row block for that point. Pure function of the request; safe to run
// on any thread.
void evaluate_point(const SweepRequest& req, std::size_t li, std::size_t ti, SweepRow* rows)
{
    const std::size_t nr = req.route_list.size();
    for (std::size_t ri = 0; ri < nr; ++ri) {
        SweepRow& row = rows[ri];
        row.lambda_index = li;
        row.t_index = ti;
        row.route = req.route_list[ri];
        try {
            auto res = routes::evaluate_route(req.model, req.route_list[ri], req.lambdas[li],
                                              req.ts[ti], req.opts);
            row.ok = true;
            row.value = res.value;
        } catch (const std::exception& e) {
            row.ok = false;
            row.error = e.what();
        }
    }
    for (std::size_t ri = 0; ri < nr; ++ri) {
        SweepRow& row = rows[ri];
        row.abs_diff_vs_first =
            (row.ok && rows[0].ok) ? std::abs(row.value - rows[0].value)
                                   : std::numeric_limits<double>::quiet_NaN();
    }
}

} // namespace

std::vector<SweepRow> sweep_serial(const SweepRequest& req)
{
    const std::size_t nl = req.lambdas.size(), nt = req.ts.size(), nr = req.route_list.size();
    std::vector<SweepRow> rows(nl * nt * nr);
    for (std::size_t li = 0; li < nl; ++li)
        for (std::size_t ti = 0; ti < nt; ++ti)
            evaluate_point(req, li, ti, rows.data() + (li * nt + ti) * nr);
    return rows;
}

std::vector<SweepRow> sweep_parallel(const SweepRequest& req)
{
    const std::size_t nl = req.lambdas.size(), nt = req.ts.size(), nr = req.route_list.size();
    std::vector<SweepRow> rows(nl * nt * nr);
    const long npoints = static_cast<long>(nl * nt);
#pragma omp parallel for schedule(dynamic)
    for (long idx = 0; idx < npoints; ++idx) {
        std::size_t li = static_cast<std::size_t>(idx) / nt;
        std::size_t ti = static_cast<std::size_t>(idx) % nt;
        evaluate_point(req, li, ti, rows.data() + static_cast<std::size_t>(idx) * nr);
    }
    return rows;
}

} // namespace sphfn::sweep
