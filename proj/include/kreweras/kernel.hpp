#pragma once

#include "kreweras/report.hpp"
#include "kreweras/tseries.hpp"

namespace kreweras {

/// Parameters of the unified kernel K(x,y;t) = xy - t(x + y + rho*x^2*y^2).
/// rho = 1 is the counting case; rho = pqr is the probabilistic case.
struct KernelParams {
    Rat rho = 1;
    int order = 24;
};

struct KernelData {
    KernelParams params;
    TSeries Y0;          // small kernel root, coefficients Laurent in x
    TSeries e1, e2;      // symmetric functions of Y0, Y1
    TSeries Delta;       // (1 - t/x)^2 - 4*rho*t^2*x
    TSeries Z;           // Z = 1 + 4*rho*t^3*Z^3
    TSeries W;           // W = 2tZ
    TSeries Delta0;      // 1/Z^2
    TSeries DeltaPlus;   // 1 - 4*rho*t^2*Z^2*x
    TSeries DeltaMinus;  // 1 - tZ(1+Z)/x + t^2 Z^2/x^2
    TSeries X2;          // 1/(4*rho*t^2*Z^2)
};

TSeries compute_Y0(const KernelParams& params);
TSeries compute_Z(const KernelParams& params);

/// Fills every field; asserts K(x, Y0) = 0 and the factorization identity.
KernelData compute_kernel(const KernelParams& params);

TSeries X2_series(const KernelParams& params);

/// Checks the substitution invariances of the rational kernel
/// K_r = 1 - t(1/x + 1/y + rho*x*y) under (x,y) -> (1/(rho*x*y), y) and
/// (x,y) -> (x, 1/(rho*x*y)), as exact trivariate Laurent identities.
Report verify_orbit_invariance(const KernelParams& params);

}  // namespace kreweras
