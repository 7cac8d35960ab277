#pragma once

#include <complex>
#include <utility>

namespace whittaker {

using cplx = std::complex<double>;

// Asymptotic regime descriptor: mu large, lambda = kappa/mu in [0, 1-delta].
// Construction rejects parameters outside the admissible range.
struct ParameterSet {
    double mu = 0.0;
    double kappa = 0.0;
    double lambda = 0.0;
    double delta = 0.0;

    static ParameterSet make(double mu, double kappa, double delta);

    double nu() const;  // sqrt(1 - lambda^2)
    cplx turning_point() const;  // z+ in the first quadrant
};

// Turning points z+- = 2 lambda +- 2i sqrt(1-lambda^2) = 2 e^{+-i theta}.
std::pair<cplx, cplx> turning_points(const ParameterSet& params);

// Sectors of the zeta plane mapped back to z: S_j is where the solution
// recessive at z^{(j+2)} lives (S_-1 holds z=0, S_0 holds +inf, S_1 holds
// inf e^{i pi}).
enum class Sector { S_minus1, S_0, S_1 };

inline const char* sector_name(Sector s) {
    switch (s) {
        case Sector::S_minus1: return "S_-1";
        case Sector::S_0: return "S_0";
        case Sector::S_1: return "S_1";
    }
    return "?";
}

struct RegionLabel {
    Sector sector = Sector::S_0;
    bool in_Z1 = false;
    bool in_Z2 = false;
    bool in_Z3 = false;
    double dist_gamma1 = 0.0;
    double dist_gamma2 = 0.0;
    double dist_gamma3 = 0.0;
};

struct GeometryContext;  // curves.hpp

// Sector from the continuous argument of zeta(z); Z_j membership from the
// distance to the traced gamma_j curve. Points within machine tolerance of a
// sector boundary are assigned deterministically to the sector of smaller j.
RegionLabel classify_region(cplx z, const GeometryContext& geom);

}  // namespace whittaker
