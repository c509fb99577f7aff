#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace sphfn {

using cplx = std::complex<double>;

/// Result of a truncated-series or node-doubled quadrature evaluation:
/// the value, the number of terms (or nodes) accepted, and the magnitude
/// of the last accepted term as a tail estimate.
struct SeriesResult {
    cplx value{0.0, 0.0};
    int terms_used = 0;
    double tail_estimate = 0.0;
};

/// An input lies outside the domain an operation supports.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An iteration budget was exhausted before the requested tolerance,
/// or a cross-check that must hold at convergence failed.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace sphfn
