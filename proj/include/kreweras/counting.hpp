#pragma once

#include "kreweras/bseries.hpp"
#include "kreweras/kernel.hpp"
#include "kreweras/report.hpp"

namespace kreweras {

struct CountingBundle {
    BSeries Qfull;
    TSeries Qx0;
    TSeries Qdiag;
    TSeries W;
};

/// Full generating function of Kreweras walks by the step-by-step recurrence.
BSeries q_full_by_recurrence(int order);

/// Theorem 1 closed form for Q(x,0;t); all 1/t and 1/x artifacts cancel.
TSeries q_x0_closed(int order);

/// Theorem 1 closed form for the single-column series [x^i] Q(x,0;t).
TSeries axis_gf_closed(int i, int order);

/// Theorem 1 coefficient formula a_{i,0}(3n+2i).
Rat axis_coeff_formula(int i, int n);

/// Theorem 2 closed form for the diagonal Q_d(x;t).
TSeries q_diag_closed(int order);

CountingBundle counting_bundle(int order);

/// The Q(x,y) display after Theorem 1, verified multiplicatively:
/// K(x,y) (Qfull + 1/(xyt)) against the stated numerator.
Report verify_q_xy_closed(int order);

/// Eq. (kernel2.1): R(x) + R(Y0) = x Y0, and the divided-difference identity
/// multiplied through by sqrt(Delta).
Report verify_kernel_equation_R(int order);

}  // namespace kreweras
