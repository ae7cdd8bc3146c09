#pragma once

#include "kreweras/bseries.hpp"
#include "kreweras/report.hpp"
#include "kreweras/stationary.hpp"

namespace kreweras {

/// Exact law of the chain: p_{i,j}(n) for n <= n_max, as big-integer weights
/// over a common power of `scale` (the lcm of the transition denominators).
class LawTable {
public:
    LawTable(const ChainParams& cp, int n_max);

    int n_max() const { return n_max_; }
    const ChainParams& params() const { return cp_; }
    Rat prob(int n, int i, int j) const;
    Rat row_sum(int n) const;

private:
    ChainParams cp_;
    int n_max_;
    int side_;
    Int scale_;
    std::vector<std::vector<Int>> w_;  // per step, row-major side_ x side_
};

inline LawTable law_dp(const ChainParams& cp, int n_max) { return LawTable(cp, n_max); }

struct SDPair {
    BSeries S, D;
    TSeries Sx0, Dx0;
    TSeries T, E;  // T = x S(x,0), E = x D(x,0)
    BSeries Q;     // Q(x,y) assembled via Eq. (Q-P)
};

SDPair sd_from_oracle(const ChainParams& cp, const LawTable& table, int order);

/// Theorem 5: P_{0,0} from 2pq P_{0,0} + r(1-r) = A_{p,q} + A_{q,p}.
TSeries p00_closed_general(const ChainParams& cp, int order);

/// Theorem 4 (p = q): P_{0,0} = (r/p)(sqrt(Delta_-(p/t))/(1-2pZ) - 1).
TSeries p00_closed_symmetric(const ChainParams& cp, int order);

/// Theorem 4 (p = q): Q(px,0), by exact division by t - x(1-p) + prx^2t^2.
TSeries qpx0_closed_symmetric(const ChainParams& cp, int order);

/// Theorem 5 closed form for S(x,0).
TSeries s_x0_closed(const ChainParams& cp, int order);

struct BCDecomposition {
    TSeries B;       // (Y0 - Y1)(2t - x + pqr t x^3), Laurent in x and t
    TSeries Cplus;   // positive part per Eq. (TUplus); x-exponents >= 3
    TSeries Cminus;  // defined by Eq. (U-def); x-exponents <= 0
    TSeries Cminus_at_p_over_t, Cminus_at_q_over_t;
};

BCDecomposition b_decomposition(const ChainParams& cp, int order);

/// The section 4.1 Note's Lagrange expansion of C^+(x).
TSeries cplus_lagrange(const ChainParams& cp, int order);

/// Theorem 6 closed form for D(x,0); identically zero when p = q.
TSeries d_x0_closed(const ChainParams& cp, int order);

struct BoundaryT {
    TSeries at_tp;  // Eq. (Ptp)
    TSeries at_tq;  // Eq. (Ptq)
    TSeries at_W;   // r t W^2
};

BoundaryT boundary_values_T(const ChainParams& cp, int order);

/// E_2 of the Theorem 6 proof, from the C^-(p/t), C^-(q/t) values.
TSeries e2_closed(const ChainParams& cp, int order);

/// Convergence of p_{0,0}(3n) to 3 p_{0,0} (or to 0 when not ergodic),
/// via a fast floating-point DP up to time 3*max_n.
Report ergodicity_observe(const ChainParams& cp, int max_n = 60);

/// The full oracle-vs-closed-form sweep for one parameter triple.
Report verify_law(const ChainParams& cp, int order);

}  // namespace kreweras
