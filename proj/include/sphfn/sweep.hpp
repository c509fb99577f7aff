#pragma once

#include <string>
#include <vector>

#include "sphfn/routes.hpp"

namespace sphfn::sweep {

/// A cross-route evaluation sweep over a lambda set times a t grid.
struct SweepRequest {
    routes::Model model;
    std::vector<cplx> lambdas;
    std::vector<double> ts;
    std::vector<routes::Route> route_list;
    routes::EvalOptions opts;
};

/// One output row. Rows are ordered lambda-major, then t, then route,
/// independent of how the sweep was executed. A failed evaluation keeps
/// its row with `ok == false` and the error message.
struct SweepRow {
    std::size_t lambda_index = 0;
    std::size_t t_index = 0;
    routes::Route route{};
    bool ok = false;
    cplx value{};
    double abs_diff_vs_first = 0.0;
    std::string error;
};

/// Serial reference implementation.
std::vector<SweepRow> sweep_serial(const SweepRequest& req);

/// OpenMP implementation parallelized over grid points. Produces rows
/// bit-identical to sweep_serial in the same order: each point is
/// evaluated by exactly the same code on exactly one thread, and rows
/// are written to preassigned slots.
std::vector<SweepRow> sweep_parallel(const SweepRequest& req);

} // namespace sphfn::sweep
