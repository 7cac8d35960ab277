#pragma once

#include <complex>
#include <vector>

#include "whittaker/params.hpp"

namespace whittaker {

// Polyline trace of a curve emanating from the turning point, with an
// optional straight-ray extension describing its asymptotic tail.
struct TracedCurve {
    std::vector<cplx> pts;
    bool has_tail = false;
    cplx tail_dir{0.0, 0.0};  // unit direction continuing past pts.back()

    double distance_to(cplx z) const;
};

// Taylor data of the conformal turning-point variable:
// zeta(z) = w * sum_k G_k w^k with w = z - z+, plus the series of
// H = h0 (1 + ...) needed for phi. Valid for |w| < radius.
struct TurningPointSeries {
    cplx zp;                       // z+
    double radius = 0.1;
    std::vector<cplx> G;           // zeta = w * (G[0] + G[1] w + ...)
    std::vector<cplx> logH;        // log(H/h0) series, constant term 0
    cplx h0;

    cplx eval_zeta(cplx w) const;
    cplx eval_logH(cplx w) const;  // log(H(w)) - log(h0)
};

// Immutable per-parameter geometry: the three Stokes curves gamma_j (where
// xi+ is real; gamma_2 carries the branch cut), the sector boundary b1
// between S_1 and S_-1 (where zeta is real negative), and the turning-point
// series. Built once, read-only afterwards.
struct GeometryContext {
    ParameterSet params;
    TurningPointSeries tp;
    TracedCurve gamma1;  // xi+ > 0, toward +inf
    TracedCurve gamma2;  // xi+ < 0, toward 0 (branch cut)
    TracedCurve gamma3;  // xi+ < 0, toward inf e^{i pi}
    TracedCurve b1;      // arg zeta = +-pi, toward the negative real axis

    static GeometryContext make(const ParameterSet& params);

    // side of the composite cut gamma_2 + vertical ray above z+; the cut
    // itself counts as east (the S_-1 side limit used throughout).
    bool west_of_cut(cplx z) const;
    // within the west region: on the S_-1 side of b1 (the lobe reached by
    // crossing gamma_2 from the principal sheet)
    bool in_west_lobe(cplx z) const;

    double dist_gamma(int j, cplx z) const;
};

}  // namespace whittaker
