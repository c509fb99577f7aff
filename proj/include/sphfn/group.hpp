#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "sphfn/series.hpp"
#include "sphfn/special.hpp"

namespace sphfn {

/// A real rank-1 group, reduced to the only structural data the engine
/// needs: the restricted-root multiplicities p = n(alpha) >= 1 and
/// q = n(2*alpha) >= 0. Everything else is derived.
struct GroupRank1 {
    std::string name;
    int p = 0;
    int q = 0;

    double rho0() const { return 0.5 * (p + 2 * q); } // half sum of roots, alpha(H0)=1 scale
    int n() const { return p + q + 1; }               // dim(G/K)

    static GroupRank1 make(std::string name, int p, int q);
};

/// Hypergeometric parameters attached to (group, lambda):
/// a = (p+2q+2*lambda)/4, b = (p+2q-2*lambda)/4, c = (p+q+1)/2.
/// a+b = rho0 and a-b = lambda hold exactly; c >= 1 so it never hits a
/// pole of the series.
special::HypParams hyp_params(const GroupRank1& g, cplx lam);

/// Radial eigenvalue lambda^2 - rho0^2; with `normalized` set, the same
/// value divided by 2(p+4q).
cplx eigenvalue(const GroupRank1& g, cplx lam, bool normalized = false);

/// Polar-decomposition Jacobian
///   D(t) = e^{-2 rho0 t} (e^{2t}-1)^p (e^{4t}-1)^q,  t > 0.
double jacobian_D(const GroupRank1& g, double t);

/// Expansion constant  sqrt(pi) 2^{q/2-2} Gamma((n-1)/2) / Gamma(n/2).
/// Requires n >= 2.
double c0_constant(const GroupRank1& g);

enum class WeylElement { identity, reflection };

/// Fixed-point predicate of a Weyl element acting on the spectral
/// parameter: the identity fixes everything, the reflection
/// (lambda -> -lambda) fixes only lambda = 0.
std::function<bool(cplx)> weyl_fixed_set(WeylElement s);

/// Parses a group catalog: blocks of `key = value` lines (keys name, p,
/// q), separated by blank lines; `#` starts a comment. Throws
/// DomainError on malformed input.
std::vector<GroupRank1> parse_catalog(std::istream& in);
std::vector<GroupRank1> load_catalog_file(const std::string& path);

} // namespace sphfn
