#pragma once

#include <complex>

#include "whittaker/curves.hpp"
#include "whittaker/params.hpp"

namespace whittaker {

// Principal-branch values of the Liouville variables at one point. xi and Z
// carry the cut along gamma_2 and are real (Z > 0) on the positive axis;
// zeta is the analytic turning-point variable with its continuous argument
// phi_zeta; xi_plus_geom = (2/3) zeta^{3/2} with the zeta-consistent branch
// (equal to -xi_plus on the west lobe, +xi_plus elsewhere).
struct BranchValue {
    cplx z;
    cplx Z;
    cplx xi;
    cplx xi_plus;       // principal: xi + const offset
    cplx zeta;
    double phi_zeta;    // continuous arg of zeta in [-pi, pi]
    cplx xi_plus_geom;  // branch following zeta through the cut
    cplx beta;
    cplx tau;
    cplx ln_Z;          // continued log of Z (arg in (-pi/2, 3pi/2])
    bool west = false;
    bool west_lobe = false;
};

// Z(z) = (z^2 - 4 lambda z + 4)^{1/2}, principal branch: positive on the
// positive real axis, cut along gamma_2, Z ~ z at infinity in any direction.
cplx big_Z(cplx z, const GeometryContext& geom);

// xi = Z/2 - lambda ln(Z + z - 2 lambda) - ln((Z - lambda z + 2)/z),
// real on (0, inf), analytic in C+ minus gamma_2.
cplx xi_principal(cplx z, const GeometryContext& geom);

// zeta (analytic through the turning point, zeta(z+) = 0) and the principal
// xi+ = (2/3) zeta^{3/2} branch-matched to xi.
std::pair<cplx, cplx> zeta_and_xi_plus(cplx z, const GeometryContext& geom);

// tau = z - 2 lambda, beta = tau / Z.
std::pair<cplx, cplx> beta_tau(cplx z, const GeometryContext& geom);

// everything at once (single pass; the individual accessors wrap this)
BranchValue branch_values(cplx z, const GeometryContext& geom);

// constant offset xi+ - xi (independent of z):
// lambda ln 2 + (1/2)(1+lambda) ln(1-lambda^2) - (1/2)(1-lambda) pi i
cplx xi_plus_offset(const ParameterSet& params);

}  // namespace whittaker
