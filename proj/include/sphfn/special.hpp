#pragma once

#include <vector>

#include "sphfn/series.hpp"

namespace sphfn::special {

inline constexpr double default_tol = 1e-12;
inline constexpr int max_series_terms = 10000;

/// Parameters of the Gauss series. `c` must not be zero or a negative
/// integer (pole of the series denominators).
struct HypParams {
    cplx a;
    cplx b;
    cplx c;
};

/// Gamma function for complex arguments. Rational (Lanczos) approximation
/// on Re z >= 1/2, reflection formula elsewhere. Throws DomainError at the
/// poles (nonpositive integers).
cplx gamma(cplx z);

/// Rising factorial (m)_k = m (m+1) ... (m+k-1), with (m)_0 = 1.
/// Accumulated left to right, so (m)_{k+1} == (m)_k * (m+k) exactly.
cplx pochhammer(cplx m, int k);

/// Gauss series sum_k (a)_k (b)_k / (c)_k z^k / k!.
///
/// Converges for |z| < 1. Arguments on the negative real axis are mapped
/// back into [0,1) through the Pfaff transformation
///   F(a,b;c;z) = (1-z)^{-a} F(a, c-b; c; z/(z-1)),
/// which extends the usable domain to z in (-inf, 1). Other |z| >= 1
/// inputs are rejected.
SeriesResult gauss_2f1(const HypParams& p, cplx z, double tol = default_tol);

/// Confluent series sum_k (a)_k / (c)_k z^k / k! (entire in z).
SeriesResult confluent_1f1(cplx a, cplx c, cplx z, double tol = default_tol);

struct ConfluentDeviation {
    double b;
    double deviation; // |F(a,b,c; z/b) - 1F1(a,c; z)|
};

/// Deviation of the Gauss series at pulled-back argument z/b from its
/// confluent limit, for each b in `b_values`. Each b must satisfy
/// |z/b| < 1.
std::vector<ConfluentDeviation>
confluent_limit(const HypParams& p, cplx z, const std::vector<double>& b_values,
                double tol = default_tol);

/// Bessel function of the first kind, real order mu, x >= 0.
///
/// Ascending series (extended precision accumulation) for x <= 20; for
/// 20 < x <= 40 the series loses digits to cancellation and the function
/// switches to the Schlaefli integral representation. x > 40 is rejected
/// as outside the supported range. Negative integer orders use
/// J_{-n} = (-1)^n J_n; negative non-integer orders require x > 0.
SeriesResult bessel_j(double mu, double x, double tol = default_tol);

/// Convention for the value of the normalized Bessel function at z = 0:
/// `literal_zero` assigns 0 there (the defining convention of the
/// expansion this function feeds); `continuous` assigns the z -> 0 limit
/// of the z > 0 branch.
enum class BesselZeroMode { literal_zero, continuous };

/// Normalized Bessel function
///   J_mu(z) / z^mu * Gamma(mu + 1/2) Gamma(1/2) 2^{mu-1}   for z > 0,
/// with the z = 0 value picked by `mode`. Both modes agree for z > 0.
double normalized_bessel(double mu, double z,
                         BesselZeroMode mode = BesselZeroMode::continuous,
                         double tol = default_tol);

/// z -> 0 limit of the z > 0 branch of normalized_bessel.
double normalized_bessel_limit0(double mu);

} // namespace sphfn::special
