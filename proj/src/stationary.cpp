#include "kreweras/stationary.hpp"

#include <array>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace kreweras {

namespace {

BigFloat bf(const Rat& a) { return BigFloat(numerator(a)) / BigFloat(denominator(a)); }

std::string fstr(const BigFloat& v, int digits = 12) {
    std::ostringstream os;
    os.precision(digits);
    os << v;
    return os.str();
}

/// Q(x,0) of Theorem 3 at a numeric point (general p != q branch).
BigFloat qx0_eval(const ChainParams& cp, const BigFloat& w, const BigFloat& q00,
                  const BigFloat& x) {
    BigFloat p = bf(cp.p), q = bf(cp.q), r = bf(cp.r);
    if (cp.p == cp.q) return q00 / sqrt(1 - r * x / p);
    BigFloat num = (1 - x / (p * w)) * sqrt(1 - x * q * r * w * w) -
                   (q * x / p) * (1 - 1 / (q * w)) * sqrt(1 - p * r * w * w);
    return q00 * num / ((1 - q * x / p) * (1 - r * x / p));
}

BigFloat q0y_eval(const ChainParams& cp, const BigFloat& w, const BigFloat& q00,
                  const BigFloat& y) {
    ChainParams swapped(cp.q, cp.p, cp.r);
    return qx0_eval(swapped, w, q00, y);
}

}  // namespace

ChainParams::ChainParams(const Rat& p_, const Rat& q_, const Rat& r_) : p(p_), q(q_), r(r_) {
    if (p <= 0 || q <= 0 || r <= 0) throw std::invalid_argument("ChainParams: probabilities must be positive");
    if (p + q + r != 1) throw std::invalid_argument("ChainParams: p + q + r must equal 1");
}

RootW solve_w(const ChainParams& cp, unsigned bits) {
    set_float_precision_bits(bits);
    if (cp.p == cp.q) return {bf(Rat(1) / cp.p), bits};
    BigFloat c = bf(cp.p * cp.q * cp.r);
    auto f = [&](const BigFloat& w) { return c * w * w * w - w + 2; };
    Rat M = cp.p > cp.q ? cp.p : cp.q;
    BigFloat lo = bf(Rat(1) / M);
    BigFloat hi = 1 / sqrt(bf(cp.p * cp.q));
    if (f(lo) < 0 || f(hi) > 0)
        throw std::logic_error("solve_w: bracket [1/M, 1/sqrt(pq)] does not contain the root");
    for (unsigned i = 0; i < bits + 8; ++i) {
        BigFloat mid = (lo + hi) / 2;
        (f(mid) >= 0 ? lo : hi) = mid;
    }
    BigFloat w = (lo + hi) / 2;
    for (int i = 0; i < 4; ++i) w -= f(w) / (3 * c * w * w - 1);
    return {w, bits};
}

BigFloat p00_closed(const ChainParams& cp, unsigned bits) {
    set_float_precision_bits(bits);
    if (!cp.ergodic())
        throw std::domain_error(
            "p00_closed: no stationary distribution unless r < min(p, q)");
    BigFloat p = bf(cp.p), q = bf(cp.q), r = bf(cp.r);
    if (cp.p == cp.q) {
        BigFloat u = 1 - r / p;
        return sqrt(u * u * u) / 3;
    }
    BigFloat w = solve_w(cp, bits).w;
    BigFloat num = w * (p - r) * (q - r) * abs(p - q);
    BigFloat den = 6 * p * q * (1 - r * w) * sqrt(1 - p * q * w * w);
    return num / den;
}

std::vector<BigFloat> qx0_coeffs(const ChainParams& cp, int i_max, unsigned bits) {
    set_float_precision_bits(bits);
    if (!cp.ergodic())
        throw std::domain_error("qx0_coeffs: requires r < min(p, q)");
    BigFloat p = bf(cp.p), q = bf(cp.q), r = bf(cp.r);
    BigFloat q00 = p00_closed(cp, bits);
    std::vector<BigFloat> u(i_max + 1, BigFloat(0));
    if (cp.p == cp.q) {
        // Q(0,0) (1 - rx/p)^{-1/2}
        u[0] = q00;
        for (int k = 1; k <= i_max; ++k)
            u[k] = u[k - 1] * (r / p) * (2 * k - 1) / (2 * k);
        return u;
    }
    BigFloat w = solve_w(cp, bits).w;
    BigFloat a = q * r * w * w;
    BigFloat sqrt_pr = sqrt(1 - p * r * w * w);
    // numerator series: (1 - x/(pw)) sqrt(1 - ax) - (qx/p)(1 - 1/(qw)) sqrt(1-prw^2)
    std::vector<BigFloat> s(i_max + 1);  // sqrt(1 - ax) coefficients
    s[0] = 1;
    for (int k = 1; k <= i_max; ++k) s[k] = s[k - 1] * a * (2 * k - 3) / (2 * k);
    std::vector<BigFloat> num(i_max + 1, BigFloat(0));
    for (int k = 0; k <= i_max; ++k) {
        num[k] = s[k];
        if (k >= 1) num[k] -= s[k - 1] / (p * w);
    }
    if (i_max >= 1) num[1] -= (q / p) * (1 - 1 / (q * w)) * sqrt_pr;
    // divide by (1 - qx/p)(1 - rx/p) = 1 - (q+r)/p x + qr/p^2 x^2
    BigFloat d1 = (q + r) / p, d2 = q * r / (p * p);
    for (int k = 0; k <= i_max; ++k) {
        u[k] = num[k];
        if (k >= 1) u[k] += d1 * u[k - 1];
        if (k >= 2) u[k] -= d2 * u[k - 2];
    }
    // u holds the series normalized to u[0] = 1; scale by Q(0,0)
    for (int k = 0; k <= i_max; ++k) u[k] *= q00;
    return u;
}

std::vector<BigFloat> q0y_coeffs(const ChainParams& cp, int j_max, unsigned bits) {
    return qx0_coeffs(ChainParams(cp.q, cp.p, cp.r), j_max, bits);
}

std::vector<BigFloat> stationary_axis(const ChainParams& cp, int i_max, unsigned bits) {
    std::vector<BigFloat> u = qx0_coeffs(cp, i_max, bits);
    BigFloat inv_rp = bf(Rat(1) / cp.r_prime());
    for (int k = 1; k <= i_max; ++k) u[k] *= inv_rp;
    return u;
}

namespace {

void apply_T(const ChainParams& cp, int g, const std::vector<long double>& v,
             std::vector<long double>& out) {
    long double p = static_cast<long double>(cp.p.convert_to<double>());
    long double q = static_cast<long double>(cp.q.convert_to<double>());
    long double r = 1.0L - p - q;
    long double pp = p / (p + r), rp = r / (p + r);
    long double qq = q / (q + r), rq = r / (q + r);
    std::fill(out.begin(), out.end(), 0.0L);
    auto at = [g](std::vector<long double>& a, int i, int j) -> long double& {
        return a[static_cast<size_t>(i) * g + j];
    };
    for (int i = 0; i < g; ++i) {
        for (int j = 0; j < g; ++j) {
            long double m = v[static_cast<size_t>(i) * g + j];
            if (m == 0) continue;
            if (i == 0 && j == 0) {
                if (g > 1) at(out, 1, 1) += m;
            } else if (j == 0) {
                at(out, i - 1, 0) += pp * m;
                if (i + 1 < g) at(out, i + 1, 1) += rp * m;
            } else if (i == 0) {
                at(out, 0, j - 1) += qq * m;
                if (j + 1 < g) at(out, 1, j + 1) += rq * m;
            } else {
                at(out, i - 1, j) += p * m;
                at(out, i, j - 1) += q * m;
                if (i + 1 < g && j + 1 < g) at(out, i + 1, j + 1) += r * m;
            }
        }
    }
}

}  // namespace

StationaryEstimate stationary_numeric(const ChainParams& cp, int grid, long double tol,
                                      int max_iter) {
    if (grid < 50) throw std::invalid_argument("stationary_numeric: grid must be >= 50");
    size_t cells = static_cast<size_t>(grid) * grid;
    std::vector<long double> v(cells, 0.0L), t1(cells), t2(cells), t3(cells);
    v[0] = 1.0L;
    StationaryEstimate est;
    est.grid = grid;
    long double residual = 1;
    int it = 0;
    for (; it < max_iter; ++it) {
        apply_T(cp, grid, v, t1);
        apply_T(cp, grid, t1, t2);
        apply_T(cp, grid, t2, t3);
        residual = 0;
        for (size_t k = 0; k < cells; ++k) {
            long double d = t3[k] - v[k];
            if (d < 0) d = -d;
            if (d > residual) residual = d;
        }
        v.swap(t3);
        if (residual < tol) break;
    }
    apply_T(cp, grid, v, t1);
    apply_T(cp, grid, t1, t2);
    est.probs.assign(cells, 0.0L);
    long double mass = 0;
    for (size_t k = 0; k < cells; ++k) {
        est.probs[k] = (v[k] + t1[k] + t2[k]) / 3.0L;
        mass += est.probs[k];
    }
    est.residual = residual;
    est.mass = mass;
    est.iterations = it;
    return est;
}

Report root_identities(const ChainParams& cp, unsigned bits) {
    set_float_precision_bits(bits);
    Report rep;
    BigFloat p = bf(cp.p), q = bf(cp.q), r = bf(cp.r);
    BigFloat w = solve_w(cp, bits).w;
    BigFloat e1 = (p * w - 1) * (p * w - 1) * (1 - q * r * w * w);
    BigFloat e2 = (q * w - 1) * (q * w - 1) * (1 - p * r * w * w);
    BigFloat e3 = (r * w - 1) * (r * w - 1) * (1 - p * q * w * w);
    BigFloat tol("1e-25");
    rep.add("(pw-1)^2(1-qrw^2) = (qw-1)^2(1-prw^2)", abs(e1 - e2) < tol,
            fstr(abs(e1 - e2)));
    rep.add("(qw-1)^2(1-prw^2) = (rw-1)^2(1-pqw^2)", abs(e2 - e3) < tol,
            fstr(abs(e2 - e3)));
    Rat M = cp.p > cp.q ? cp.p : cp.q;
    Rat m = cp.p > cp.q ? cp.q : cp.p;
    BigFloat lo = bf(Rat(1) / M), mid = 1 / sqrt(bf(cp.p * cp.q)), hi = bf(Rat(1) / m);
    bool bounds = (lo <= w + tol) && (w <= mid + tol) && (mid <= hi) && (hi < bf(Rat(1) / cp.r));
    rep.add("bounds 1/M <= w <= 1/sqrt(pq) <= 1/m < 1/r", bounds);
    BigFloat v1 = (bf(M) * w - 1) * sqrt(1 - bf(m) * r * w * w);
    BigFloat v2 = -(bf(m) * w - 1) * sqrt(1 - bf(M) * r * w * w);
    BigFloat v3 = -(r * w - 1) * sqrt(1 - p * q * w * w);
    rep.add("double2 identity and nonnegativity",
            v1 >= -tol && abs(v1 - v2) < tol && abs(v2 - v3) < tol,
            fstr(abs(v1 - v3)));
    return rep;
}

Report verify_balance_identities(const ChainParams& cp, const StationaryEstimate* est,
                                 unsigned bits) {
    set_float_precision_bits(bits);
    Report rep;
    BigFloat p = bf(cp.p), q = bf(cp.q), r = bf(cp.r);
    BigFloat w = solve_w(cp, bits).w;
    BigFloat q00 = p00_closed(cp, bits);
    BigFloat tight("1e-30");

    BigFloat q10 = qx0_eval(cp, w, q00, BigFloat(1));
    BigFloat q01 = q0y_eval(cp, w, q00, BigFloat(1));
    rep.add("Q(1,0) = (q-r)/(3q)", abs(q10 - (q - r) / (3 * q)) < tight,
            fstr(abs(q10 - (q - r) / (3 * q))));
    rep.add("Q(0,1) = (p-r)/(3p)", abs(q01 - (p - r) / (3 * p)) < tight);
    rep.add("Q(1,1) consistency: p/(p-r) Q(0,1) = q/(q-r) Q(1,0)",
            abs(p / (p - r) * q01 - q / (q - r) * q10) < tight);
    if (cp.p == cp.q)
        rep.add("p = q: Q(1,0) = Q(0,0)/sqrt(1 - r/p)",
                abs(q10 - q00 / sqrt(1 - r / p)) < tight);

    if (est != nullptr) {
        // Eq. (normalization) from the numeric grid.
        rep.add("numeric mass within 1e-6 of 1",
                std::fabs(static_cast<double>(est->mass) - 1.0) < 1e-6,
                std::to_string(static_cast<double>(est->mass)));
        // (p - rx) Q(x,1) = p Q(0,1) with Q assembled from the estimate at x = 1/2.
        double x = 0.5;
        double rp = cp.r_prime().convert_to<double>();
        double rq = cp.r_dprime().convert_to<double>();
        double rr = cp.r.convert_to<double>();
        double qx1 = static_cast<double>(est->at(0, 0));
        for (int i = 1; i < est->grid; ++i)
            qx1 += rp * static_cast<double>(est->at(i, 0)) * std::pow(x, i);
        for (int j = 1; j < est->grid; ++j)
            qx1 += rq * static_cast<double>(est->at(0, j));
        for (int i = 1; i < est->grid; ++i)
            for (int j = 1; j < est->grid; ++j)
                qx1 += rr * static_cast<double>(est->at(i, j)) * std::pow(x, i);
        double q01n = static_cast<double>(est->at(0, 0));
        for (int j = 1; j < est->grid; ++j)
            q01n += rq * static_cast<double>(est->at(0, j));
        double lhs = (cp.p.convert_to<double>() - rr * x) * qx1;
        double rhs = cp.p.convert_to<double>() * q01n;
        rep.add("(p - rx) Q(x,1) = p Q(0,1) at x = 1/2 (numeric)",
                std::fabs(lhs - rhs) < 1e-8, std::to_string(lhs - rhs));
    }
    return rep;
}

Report flatto_hahn_forms(const ChainParams& cp, int samples, unsigned bits) {
    set_float_precision_bits(bits);
    if (!(cp.p < cp.q))
        throw std::domain_error("flatto_hahn_forms: only valid when p < q");
    Report rep;
    BigFloat p = bf(cp.p), q = bf(cp.q), r = bf(cp.r);
    BigFloat w = solve_w(cp, bits).w;
    BigFloat q00 = p00_closed(cp, bits);
    BigFloat s_pr = sqrt(1 - p * r * w * w);
    BigFloat s_qr = sqrt(1 - q * r * w * w);
    BigFloat s_pq = sqrt(1 - p * q * w * w);
    auto psi = [&](const BigFloat& y) {
        BigFloat d = sqrt(1 - y * p * r * w * w);
        return (d + s_pr) / ((d + s_qr) * (d + s_pq));
    };
    auto phi = [&](const BigFloat& x) {
        BigFloat d = sqrt(1 - x * q * r * w * w);
        return (d + s_qr) / ((d + s_pr) * (d - s_pq));
    };
    BigFloat tol("1e-12");
    bool all_y = true, all_x = true;
    BigFloat worst = 0;
    for (int k = 0; k <= samples; ++k) {
        BigFloat u = BigFloat(k) / samples;
        BigFloat dy = abs(q00 * psi(u) / psi(BigFloat(0)) - q0y_eval(cp, w, q00, u));
        BigFloat dx = abs(q00 * phi(u) / phi(BigFloat(0)) - qx0_eval(cp, w, q00, u));
        if (dy > worst) worst = dy;
        if (dx > worst) worst = dx;
        if (dy > tol) all_y = false;
        if (dx > tol) all_x = false;
    }
    rep.add("Psi form matches Theorem 3 Q(0,y) on [0,1]", all_y, fstr(worst));
    rep.add("Phi form matches Theorem 3 Q(x,0) on [0,1]", all_x);
    rep.add("Phi form at x = 1 matches Q(1,0)",
            abs(q00 * phi(BigFloat(1)) / phi(BigFloat(0)) -
                qx0_eval(cp, w, q00, BigFloat(1))) < tol);
    return rep;
}

AsymptoticsResult asymptotics_check(const ChainParams& cp, int i_max, unsigned bits) {
    if (i_max < 40) throw std::invalid_argument("asymptotics_check: need i_max >= 40");
    std::vector<BigFloat> u = qx0_coeffs(cp, i_max, bits);
    AsymptoticsResult res;
    BigFloat w = solve_w(cp, bits).w;
    if (cp.p == cp.q) {
        res.regime = "p = q";
        res.expected_rate = (cp.r / cp.p).convert_to<double>();
        res.expected_exponent = -0.5;
    } else if (cp.p < cp.q) {
        res.regime = "p < q";
        res.expected_rate = (cp.r / cp.p).convert_to<double>();
        res.expected_exponent = 0.0;
    } else {
        res.regime = "p > q";
        res.expected_rate = (bf(cp.q * cp.r) * w * w).convert_to<double>();
        res.expected_exponent = -1.5;
    }
    // least squares for log u_i = a + i log(beta) + alpha log(i) + c/i
    int i0 = i_max / 2;
    int rows = i_max - i0 + 1;
    std::vector<std::array<double, 4>> A(rows);
    std::vector<double> b(rows);
    for (int i = i0; i <= i_max; ++i) {
        if (u[i] <= 0) throw std::runtime_error("asymptotics_check: nonpositive coefficient");
        A[i - i0] = {1.0, static_cast<double>(i), std::log(static_cast<double>(i)),
                     1.0 / i};
        b[i - i0] = log(u[i]).convert_to<double>();
    }
    double M[4][5] = {};
    for (int rI = 0; rI < rows; ++rI)
        for (int a = 0; a < 4; ++a) {
            for (int c = 0; c < 4; ++c) M[a][c] += A[rI][a] * A[rI][c];
            M[a][4] += A[rI][a] * b[rI];
        }
    for (int col = 0; col < 4; ++col) {
        int piv = col;
        for (int rI = col + 1; rI < 4; ++rI)
            if (std::fabs(M[rI][col]) > std::fabs(M[piv][col])) piv = rI;
        std::swap(M[col], M[piv]);
        for (int rI = 0; rI < 4; ++rI) {
            if (rI == col) continue;
            double f = M[rI][col] / M[col][col];
            for (int c = col; c < 5; ++c) M[rI][c] -= f * M[col][c];
        }
    }
    res.rate = std::exp(M[1][4] / M[1][1]);
    res.exponent = M[2][4] / M[2][2];
    res.rate_ok = std::fabs(res.rate - res.expected_rate) <= 0.01 * res.expected_rate;
    double etol = std::max(0.05, 0.05 * std::fabs(res.expected_exponent));
    res.exponent_ok = std::fabs(res.exponent - res.expected_exponent) <= etol;
    return res;
}

Report stationary_interior_residual(const ChainParams& cp, int check_window) {
    Report rep;
    unsigned bits = 256;
    int width = std::max(4 * check_window, 100);  // reconstruction window in x and y
    std::vector<BigFloat> ax = qx0_coeffs(cp, width, bits);
    std::vector<BigFloat> ay = q0y_coeffs(cp, width, bits);
    double p = cp.p.convert_to<double>(), q = cp.q.convert_to<double>(),
           r = cp.r.convert_to<double>();

    // Q(x,y) = (q(1-1/y)Q(x,0) + p(1-1/x)Q(0,y)) / (1 - p/x - q/y - rxy),
    // expanded as sum_n (p/x + q/y + rxy)^n applied to the numerator.
    // Work on exponents in [-1, width]; the drift makes fixed-site mass decay
    // geometrically, so the partial sums converge.
    int lo = -1, hi = width;
    int side = hi - lo + 1;
    auto idx = [&](int i, int j) { return static_cast<size_t>(i - lo) * side + (j - lo); };
    std::vector<double> cur(static_cast<size_t>(side) * side, 0.0), nxt(cur.size());
    std::vector<double> acc(cur.size(), 0.0);
    for (int i = 0; i <= width; ++i) {
        double c = ax[i].convert_to<double>();
        cur[idx(i, 0)] += q * c;
        cur[idx(i, -1)] -= q * c;
    }
    for (int j = 0; j <= width; ++j) {
        double c = ay[j].convert_to<double>();
        cur[idx(0, j)] += p * c;
        cur[idx(-1, j)] -= p * c;
    }
    for (size_t k = 0; k < cur.size(); ++k) acc[k] = cur[k];
    for (int n = 0; n < 4000; ++n) {
        std::fill(nxt.begin(), nxt.end(), 0.0);
        for (int i = lo; i <= hi; ++i) {
            for (int j = lo; j <= hi; ++j) {
                double c = cur[idx(i, j)];
                if (c == 0) continue;
                if (i - 1 >= lo) nxt[idx(i - 1, j)] += p * c;
                if (j - 1 >= lo) nxt[idx(i, j - 1)] += q * c;
                if (i + 1 <= hi && j + 1 <= hi) nxt[idx(i + 1, j + 1)] += r * c;
            }
        }
        cur.swap(nxt);
        double inner = 0;
        for (size_t k = 0; k < cur.size(); ++k) {
            acc[k] += cur[k];
            inner = std::max(inner, std::fabs(cur[k]));
        }
        if (inner < 1e-16 && n > 20) break;
    }

    // acc now holds Q(x,y) coefficients; recover p_{i,j} and test stationarity.
    double rp = cp.r_prime().convert_to<double>();
    double rq = cp.r_dprime().convert_to<double>();
    auto prob = [&](int i, int j) -> double {
        if (i < 0 || j < 0) return 0.0;
        double qij = acc[idx(i, j)];
        if (i == 0 && j == 0) return qij;
        if (j == 0) return qij / rp;
        if (i == 0) return qij / rq;
        return qij / r;
    };
    double pp = p / (p + r), rpp = r / (p + r);
    double qq = q / (q + r), rqq = r / (q + r);
    double worst = 0;
    for (int k = 0; k <= check_window; ++k) {
        for (int l = 0; l <= check_window; ++l) {
            // all inbound transitions to (k, l)
            double in = 0;
            if (l >= 1) in += p * prob(k + 1, l);          // interior west step
            if (k >= 1) in += q * prob(k, l + 1);          // interior south step
            if (k >= 2 && l >= 2) in += r * prob(k - 1, l - 1);
            if (l == 0) in += pp * prob(k + 1, 0);
            if (l == 1 && k >= 2) in += rpp * prob(k - 1, 0);
            if (k == 0) in += qq * prob(0, l + 1);
            if (k == 1 && l >= 2) in += rqq * prob(0, l - 1);
            if (k == 1 && l == 1) in += prob(0, 0);
            worst = std::max(worst, std::fabs(in - prob(k, l)));
        }
    }
    rep.add("closed-form grid stationarity residual below 1e-8", worst < 1e-8,
            std::to_string(worst));
    return rep;
}

std::vector<ChainParams> random_ergodic_triples(int count, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> den(20, 120);
    std::vector<ChainParams> out;
    while (static_cast<int>(out.size()) < count) {
        int d = den(rng);
        std::uniform_int_distribution<int> part(1, d - 2);
        int a = part(rng), b = part(rng);
        int c = d - a - b;
        if (c <= 0 || c >= a || c >= b) continue;  // need r < min(p, q)
        out.emplace_back(Rat(a, d), Rat(b, d), Rat(c, d));
    }
    return out;
}

Report asymmetry_witness(const ChainParams& cp, unsigned bits) {
    set_float_precision_bits(bits);
    Report rep;
    BigFloat p = bf(cp.p), q = bf(cp.q), r = bf(cp.r);
    BigFloat w = solve_w(cp, bits).w;
    BigFloat q00 = p00_closed(cp, bits);
    BigFloat x("0.4");
    BigFloat lhs = qx0_eval(cp, w, q00, p * x) / (1 - p * x) -
                   q0y_eval(cp, w, q00, q * x) / (1 - q * x);
    BigFloat rhs = 2 * q00 * x * (p * w - 1) * sqrt(1 - q * r * w * w) /
                   (w * (1 - p * x) * (1 - q * x) * (1 - r * x));
    BigFloat tol("1e-20");
    rep.add("asymmetry witness matches the section 3.3.2 display",
            abs(lhs - rhs) < tol, fstr(abs(lhs - rhs)));
    if (cp.p == cp.q)
        rep.add("p = q: witness vanishes", abs(lhs) < tol);
    else
        rep.add("p != q: witness is nonzero", abs(lhs) > tol);
    return rep;
}

}  // namespace kreweras
