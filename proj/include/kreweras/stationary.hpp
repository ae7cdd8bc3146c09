#pragma once

#include <vector>

#include "kreweras/rat.hpp"
#include "kreweras/report.hpp"

namespace kreweras {

/// Transition probabilities of the quadrant Markov chain, with the border
/// conditions p' = p/(p+r), r' = r/(p+r), q'' = q/(q+r), r'' = r/(q+r).
struct ChainParams {
    Rat p, q, r;

    ChainParams(const Rat& p_, const Rat& q_, const Rat& r_);

    Rat p_prime() const { return p / (p + r); }
    Rat r_prime() const { return r / (p + r); }
    Rat q_dprime() const { return q / (q + r); }
    Rat r_dprime() const { return r / (q + r); }
    bool ergodic() const { return r < p && r < q; }
};

struct RootW {
    BigFloat w;
    unsigned precision_bits;
};

struct StationaryEstimate {
    int grid = 0;
    std::vector<long double> probs;  // row-major, i * grid + j
    long double residual = 0;
    long double mass = 0;
    int iterations = 0;

    long double at(int i, int j) const {
        if (i < 0 || j < 0 || i >= grid || j >= grid) return 0;
        return probs[static_cast<size_t>(i) * grid + j];
    }
};

/// Smallest positive root of w = 2 + pqr w^3, bracketed by Eq. (ineqwpqr).
RootW solve_w(const ChainParams& cp, unsigned bits = 256);

/// Corollary 1 closed form for p_{0,0}; requires r < min(p, q).
BigFloat p00_closed(const ChainParams& cp, unsigned bits = 256);

/// Taylor coefficients [x^i] Q(x,0), i = 0..i_max, from Theorem 3.
std::vector<BigFloat> qx0_coeffs(const ChainParams& cp, int i_max, unsigned bits = 256);

/// Same for [y^j] Q(0,y).
std::vector<BigFloat> q0y_coeffs(const ChainParams& cp, int j_max, unsigned bits = 256);

/// Stationary axis probabilities p_{i,0} = [x^i]Q(x,0)/r' (i > 0), p_{0,0} at i = 0.
std::vector<BigFloat> stationary_axis(const ChainParams& cp, int i_max, unsigned bits = 256);

/// Power iteration of the cubed transition operator on a truncated grid,
/// phase-averaged over the three period classes.
StationaryEstimate stationary_numeric(const ChainParams& cp, int grid = 200,
                                      long double tol = 1e-13, int max_iter = 20000);

/// Root identities, Eq. (ineqwpqr) bounds and Eq. (double2) for one triple.
Report root_identities(const ChainParams& cp, unsigned bits = 256);

/// Q(1,0) = (q-r)/(3q), the Q(1,1) cross-relations, normalization of the
/// numeric estimate, and the (p-rx)Q(x,1) = pQ(0,1) identity against it.
Report verify_balance_identities(const ChainParams& cp,
                                 const StationaryEstimate* est = nullptr,
                                 unsigned bits = 256);

/// Flatto-Hahn factored forms versus the Theorem 3 forms; requires p < q.
Report flatto_hahn_forms(const ChainParams& cp, int samples = 20, unsigned bits = 256);

struct AsymptoticsResult {
    std::string regime;
    double rate = 0, exponent = 0;
    double expected_rate = 0, expected_exponent = 0;
    bool rate_ok = false, exponent_ok = false;
};

/// Fits the tail of p_{i,0} to c beta^i i^alpha and compares with the
/// Proposition's three regimes.
AsymptoticsResult asymptotics_check(const ChainParams& cp, int i_max = 80,
                                    unsigned bits = 512);

/// Reconstructs interior p_{i,j} from the closed boundary forms through the
/// geometric expansion of Eq. (eq-flatto) and reports the worst stationarity
/// residual over i, j <= check_window.
Report stationary_interior_residual(const ChainParams& cp, int check_window = 18);

/// Deterministic sample of ergodic parameter triples for property sweeps.
std::vector<ChainParams> random_ergodic_triples(int count, unsigned seed);

/// The asymmetry witness of section 3.3.2, evaluated at a sample point.
Report asymmetry_witness(const ChainParams& cp, unsigned bits = 256);

}  // namespace kreweras
