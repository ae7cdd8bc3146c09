#include "kreweras/law.hpp"

#include <boost/integer/common_factor.hpp>
#include <cmath>
#include <stdexcept>

#include "kreweras/kernel.hpp"

namespace kreweras {

namespace {

const LPoly kX = LPoly::monomial(1, 1);
const LPoly kXbar = LPoly::monomial(1, -1);

Int as_int(const Rat& a) {
    if (denominator(a) != 1) throw std::logic_error("as_int: not an integer");
    return numerator(a);
}

TSeries one(int end) { return TSeries::constant(1, end); }

/// 1 - pZ(1+Z) + p^2 Z^2, the substitution x-bar := p/t into Eq. (Delta-).
TSeries delta_minus_at(const Rat& a, const TSeries& Z) {
    int m = Z.end();
    TSeries Z2 = (Z * Z).truncated(m);
    return one(m) - (Z + Z2).scaled(a) + Z2.scaled(a * a);
}

TSeries a_series(const Rat& p, const Rat& q, const Rat& r, const TSeries& Z) {
    int m = Z.end();
    TSeries num = TSeries::constant(p * (1 - 2 * p), m) +
                  TSeries::monomial(LPoly(-q * r), 3, m);
    TSeries inv_cubes = invert(one(m) - TSeries::monomial(LPoly(1), 3, m));
    TSeries inv_z = invert(one(m) - Z.scaled(2 * p));
    return (((num * sqrt_series(delta_minus_at(p, Z))).truncated(m) * inv_cubes)
                .truncated(inv_z.end() + 3) *
            inv_z);
}

/// F_{p,q}(x) = (t - qx)(t - (1-q)x + pr t^2 x^2) expanded in t-layers.
TSeries f_poly(const Rat& q, const Rat& p, const Rat& r, int end) {
    TSeries f = TSeries::monomial(LPoly::monomial(q * (1 - q), 2), 0, end);
    f += TSeries::monomial(kX.scaled(-1), 1, end);
    f += TSeries::monomial(LPoly(1) + LPoly::monomial(-p * q * r, 3), 2, end);
    f += TSeries::monomial(LPoly::monomial(p * r, 2), 3, end);
    return f;
}

std::vector<LPoly> quartic_prefactor(const Rat& p, const Rat& q, const Rat& r) {
    // (t - (1-p)x + qr t^2 x^2)(t - (1-q)x + pr t^2 x^2)
    TSeries a = TSeries::monomial(kX.scaled(-(1 - p)), 0, 6) +
                TSeries::monomial(LPoly(1), 1, 6) +
                TSeries::monomial(LPoly::monomial(q * r, 2), 2, 6);
    TSeries b = TSeries::monomial(kX.scaled(-(1 - q)), 0, 6) +
                TSeries::monomial(LPoly(1), 1, 6) +
                TSeries::monomial(LPoly::monomial(p * r, 2), 2, 6);
    TSeries prod = a * b;
    std::vector<LPoly> layers(5);
    for (int k = 0; k <= 4; ++k) layers[k] = prod.coeff(k);
    return layers;
}

/// Solve U * P = R layer by layer in t, where P is given by its t-layers and
/// P[0] is a single monomial in x. Division must be exact at every layer.
TSeries divide_prefactor(const TSeries& R, const std::vector<LPoly>& P) {
    if (P.empty() || P[0].terms().size() != 1)
        throw std::logic_error("divide_prefactor: leading t-layer must be a monomial");
    Rat c = P[0].terms().begin()->second;
    int e = P[0].terms().begin()->first;
    int val = R.valuation(), end = R.end();
    std::vector<LPoly> u(end - val);
    for (int n = val; n < end; ++n) {
        LPoly rhs = R.coeff(n);
        for (int k = 1; k < static_cast<int>(P.size()); ++k)
            if (n - k >= val) rhs -= P[k] * u[n - k - val];
        u[n - val] = rhs.divided_by_monomial(c, e);
    }
    TSeries out = TSeries::zero(end);
    for (int n = val; n < end; ++n)
        if (!u[n - val].zero()) out += TSeries::monomial(u[n - val], n, end);
    return out;
}

}  // namespace

LawTable::LawTable(const ChainParams& cp, int n_max)
    : cp_(cp), n_max_(n_max), side_(n_max + 2) {
    Int lc = 1;
    for (const Rat& v : {cp.p, cp.q, cp.r, cp.p_prime(), cp.r_prime(), cp.q_dprime(),
                         cp.r_dprime()})
        lc = boost::integer::lcm(lc, denominator(v));
    scale_ = lc;
    Int wp = as_int(cp.p * lc), wq = as_int(cp.q * lc), wr = as_int(cp.r * lc);
    Int wpp = as_int(cp.p_prime() * lc), wrp = as_int(cp.r_prime() * lc);
    Int wqq = as_int(cp.q_dprime() * lc), wrq = as_int(cp.r_dprime() * lc);
    size_t cells = static_cast<size_t>(side_) * side_;
    w_.assign(n_max + 1, std::vector<Int>(cells, Int(0)));
    w_[0][0] = 1;
    auto at = [&](int n, int i, int j) -> Int& {
        return w_[n][static_cast<size_t>(i) * side_ + j];
    };
    for (int n = 1; n <= n_max; ++n) {
        for (int i = 0; i < side_; ++i) {
            for (int j = 0; j < side_; ++j) {
                const Int& m = w_[n - 1][static_cast<size_t>(i) * side_ + j];
                if (m == 0) continue;
                if (i == 0 && j == 0) {
                    at(n, 1, 1) += m * lc;
                } else if (j == 0) {
                    at(n, i - 1, 0) += m * wpp;
                    if (i + 1 < side_) at(n, i + 1, 1) += m * wrp;
                } else if (i == 0) {
                    at(n, 0, j - 1) += m * wqq;
                    if (j + 1 < side_) at(n, 1, j + 1) += m * wrq;
                } else {
                    at(n, i - 1, j) += m * wp;
                    at(n, i, j - 1) += m * wq;
                    if (i + 1 < side_ && j + 1 < side_) at(n, i + 1, j + 1) += m * wr;
                }
            }
        }
    }
}

Rat LawTable::prob(int n, int i, int j) const {
    if (n < 0 || n > n_max_) throw std::out_of_range("LawTable::prob: step");
    if (i < 0 || j < 0 || i >= side_ || j >= side_) return 0;
    return Rat(w_[n][static_cast<size_t>(i) * side_ + j], int_pow(scale_, n));
}

Rat LawTable::row_sum(int n) const {
    Int s = 0;
    for (const Int& v : w_[n]) s += v;
    return Rat(s, int_pow(scale_, n));
}

SDPair sd_from_oracle(const ChainParams& cp, const LawTable& table, int order) {
    if (table.n_max() + 1 < order)
        throw std::invalid_argument("sd_from_oracle: table too short for order");
    Rat rp = cp.r_prime(), rq = cp.r_dprime(), r = cp.r;
    SDPair sd;
    BSeries Q = BSeries::zero(order);
    for (int n = 0; n < order; ++n) {
        BPoly layer;
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j) {
                Rat v = table.prob(n, i, j);
                if (v == 0) continue;
                Rat s = (i == 0 && j == 0) ? 1 : (j == 0 ? rp : (i == 0 ? rq : r));
                layer.add(i, j, s * v);
            }
        if (!layer.zero()) Q += BSeries::monomial(layer, n, order);
    }
    sd.Q = Q;
    BSeries Qpq = Q.vars_scaled(cp.p, cp.q);          // Q(px, qy)
    BSeries Qqp = Q.vars_scaled(cp.p, cp.q).swapped_xy();  // Q(py, qx)
    BPoly pqxy = BPoly::monomial(cp.p * cp.q, 1, 1);
    BPoly lin1;  // py + qx
    lin1.add(0, 1, cp.p);
    lin1.add(1, 0, cp.q);
    BPoly lin2;  // px + qy
    lin2.add(1, 0, cp.p);
    lin2.add(0, 1, cp.q);
    BSeries A1 = BSeries::monomial(pqxy, 0, order) - BSeries::monomial(lin1, 1, order) +
                 BSeries::monomial(BPoly(Rat(1)), 2, order);  // (t-qx)(t-py)
    BSeries A2 = BSeries::monomial(pqxy, 0, order) - BSeries::monomial(lin2, 1, order) +
                 BSeries::monomial(BPoly(Rat(1)), 2, order);  // (t-px)(t-qy)
    sd.S = A1 * Qpq + A2 * Qqp;
    sd.D = A1 * Qpq - A2 * Qqp;
    sd.Sx0 = sd.S.y_slice0();
    sd.Dx0 = sd.D.y_slice0();
    sd.T = sd.Sx0.scaled(kX);
    sd.E = sd.Dx0.scaled(kX);
    return sd;
}

TSeries p00_closed_general(const ChainParams& cp, int order) {
    int m = order + 12;
    TSeries Z = compute_Z({cp.p * cp.q * cp.r, m});
    TSeries sum = a_series(cp.p, cp.q, cp.r, Z) + a_series(cp.q, cp.p, cp.r, Z);
    TSeries p00 = (sum - TSeries::constant(cp.r * (1 - cp.r), sum.end()))
                      .scaled(Rat(1) / (2 * cp.p * cp.q));
    return p00.truncated(order);
}

TSeries p00_closed_symmetric(const ChainParams& cp, int order) {
    if (cp.p != cp.q)
        throw std::domain_error("p00_closed_symmetric: requires p = q");
    int m = order + 12;
    TSeries Z = compute_Z({cp.p * cp.q * cp.r, m});
    TSeries frac = (sqrt_series(delta_minus_at(cp.p, Z)) *
                    invert(one(m) - Z.scaled(2 * cp.p)))
                       .truncated(m);
    return (frac - one(m)).scaled(cp.r / cp.p).truncated(order);
}

TSeries qpx0_closed_symmetric(const ChainParams& cp, int order) {
    if (cp.p != cp.q)
        throw std::domain_error("qpx0_closed_symmetric: requires p = q");
    Rat p = cp.p, r = cp.r;
    int m = order + 12;
    TSeries Z = compute_Z({p * p * r, m});
    TSeries sqrt_dm = sqrt_series(delta_minus_at(p, Z));
    TSeries sqrt_dp = sqrt_series(
        one(m) - (Z * Z).truncated(m).scaled(LPoly::monomial(4 * p * p * r, 1)).shifted_t(2).truncated(m));
    TSeries two_tz_minus_x =
        Z.scaled(Rat(2)).shifted_t(1).truncated(m) - TSeries::monomial(kX, 0, m);
    TSeries inv = invert((Z * (one(m) - Z.scaled(2 * p))).truncated(m));
    TSeries rhs = ((two_tz_minus_x * sqrt_dm).truncated(m) * sqrt_dp).truncated(inv.end());
    rhs = (rhs * inv).scaled(r / (2 * p));
    rhs -= TSeries::monomial(LPoly(1), 1, rhs.end()).scaled(r / p);
    rhs += TSeries::monomial(kX.scaled((1 - p) * r / (2 * p)), 0, rhs.end());
    std::vector<LPoly> pref = {kX.scaled(-(1 - p)), LPoly(1),
                               LPoly::monomial(p * r, 2)};
    return divide_prefactor(rhs, pref).truncated(order);
}

TSeries s_x0_closed(const ChainParams& cp, int order) {
    Rat p = cp.p, q = cp.q, r = cp.r;
    int m = order + 12;
    TSeries Z = compute_Z({p * q * r, m});
    TSeries Apq = a_series(p, q, r, Z);
    TSeries Aqp = a_series(q, p, r, Z);
    int mm = std::min(Apq.end(), Aqp.end());
    TSeries Fpq = f_poly(q, p, r, mm);
    TSeries Fqp = f_poly(p, q, r, mm);
    TSeries sqrt_dp = sqrt_series(
        one(mm) -
        (Z * Z).truncated(mm).scaled(LPoly::monomial(4 * p * q * r, 1)).shifted_t(2).truncated(mm));
    TSeries two_tz_minus_x =
        Z.scaled(Rat(2)).shifted_t(1).truncated(mm) - TSeries::monomial(kX, 0, mm);
    TSeries combo = ((Apq.truncated(mm) * Fpq) + (Aqp.truncated(mm) * Fqp)).truncated(mm);
    TSeries rhs = ((two_tz_minus_x * sqrt_dp).truncated(mm) * combo).truncated(mm);
    rhs = (rhs * invert(Z.truncated(mm))).scaled(Rat(1) / (2 * p * q));

    // H(x): q(2t-x+px)F_pq + p(2t-x+qx)F_qp - (p-q)^2 x^2 (2rt-(1-p)(1-q)x+2pqr x^2 t^2)
    TSeries H = (TSeries::monomial(kX.scaled(q * (p - 1)), 0, mm) +
                 TSeries::monomial(LPoly(2 * q), 1, mm)) *
                Fpq;
    H += (TSeries::monomial(kX.scaled(p * (q - 1)), 0, mm) +
          TSeries::monomial(LPoly(2 * p), 1, mm)) *
         Fqp;
    Rat d2 = (p - q) * (p - q);
    TSeries tail = TSeries::monomial(kX.scaled(-(1 - p) * (1 - q)), 0, mm) +
                   TSeries::monomial(LPoly(2 * r), 1, mm) +
                   TSeries::monomial(LPoly::monomial(2 * p * q * r, 2), 2, mm);
    H -= tail.scaled(LPoly::monomial(d2, 2));
    TSeries lhs_known = rhs - H.truncated(rhs.end()).scaled(r / (2 * p * q));
    TSeries u = divide_prefactor(lhs_known.truncated(order + 1), quartic_prefactor(p, q, r));
    return u.shifted_t(1).truncated(order);
}

BCDecomposition b_decomposition(const ChainParams& cp, int order) {
    Rat p = cp.p, q = cp.q, r = cp.r;
    Rat rho = p * q * r;
    int m = order + 8;
    KernelData kd = compute_kernel({rho, m});
    TSeries sqrtD = sqrt_series(kd.Delta);
    TSeries factor = one(m) + TSeries::monomial(kXbar.scaled(-2) + LPoly::monomial(-rho, 2), 1, m);
    BCDecomposition bc;
    bc.B = (sqrtD * factor).scaled(Rat(1) / rho).shifted_t(-1);
    int be = bc.B.end();
    bc.Cplus = (bc.B.x_part(XPart::positive) + TSeries::monomial(kX, 1, be) +
                TSeries::monomial(kX * kX, 0, be))
                   .scaled(Rat(1, 2));
    for (int e = bc.Cplus.valuation(); e < bc.Cplus.end(); ++e)
        if (!bc.Cplus.coeff(e).zero() && bc.Cplus.coeff(e).min_exp() < 3)
            throw std::logic_error("b_decomposition: C+ has a term below x^3");
    TSeries base = TSeries::monomial(LPoly(Rat(1) / (p * q)), -1, be) +
                   TSeries::monomial(kXbar.scaled(Rat(-2) / (p * q)), 0, be);
    bc.Cminus = (bc.B - base + TSeries::monomial(kX, 1, be) +
                 TSeries::monomial(kX * kX, 0, be) - bc.Cplus.scaled(Rat(2)))
                    .scaled(Rat(1, 2));
    if (!bc.Cminus.x_part(XPart::positive).is_zero())
        throw std::logic_error("b_decomposition: C- has a positive x-exponent");

    for (Rat a : {p, q}) {
        // B(t/a) = sqrt((1-a)^2 - 4 t^3 (pqr/a) a ... ) via Delta(t/a)
        Rat other = (a == p) ? q : p;
        TSeries dta = TSeries::constant((1 - a) * (1 - a), m) +
                      TSeries::monomial(LPoly(-4 * other * r), 3, m);
        TSeries fac = TSeries::constant(1 - 2 * a, m) +
                      TSeries::monomial(LPoly(-other * r / a), 3, m);
        TSeries bta = (sqrt_series(dta) * fac).scaled(Rat(1) / rho).shifted_t(-1);
        TSeries cpa = bc.Cplus.substitute_monomial(Rat(1) / a, 1, 3);
        int ee = std::min(bta.end(), cpa.end());
        TSeries cma = (bta.truncated(ee) -
                       TSeries::monomial(LPoly((1 - 2 * a) / (p * q)), -1, ee) +
                       TSeries::monomial(LPoly(Rat(1) / a + Rat(1) / (a * a)), 2, ee) -
                       cpa.truncated(ee).scaled(Rat(2)))
                          .scaled(Rat(1, 2));
        (a == p ? bc.Cminus_at_p_over_t : bc.Cminus_at_q_over_t) = cma;
    }
    return bc;
}

TSeries cplus_lagrange(const ChainParams& cp, int order) {
    Rat rho = cp.p * cp.q * cp.r;
    TSeries out = TSeries::zero(order);
    for (int n = 2; n < order; ++n) {
        LPoly layer;
        for (int k = (n + 1) / 3; 2 * k <= n; ++k) {
            long a = 3L * k - n;
            if (a <= 0) continue;  // the (3k-n+1)(3k-n) factor vanishes at 0, -1
            Rat coef = rat_pow(rho, k) *
                       Rat(Int(a + 1) * a * factorial(n - 2),
                           factorial(k) * factorial(k + 1) * factorial(n - 2 * k));
            layer.add(static_cast<int>(a) + 2, coef);
        }
        if (!layer.zero()) out += TSeries::monomial(layer, n, order);
    }
    return out;
}

TSeries e2_closed(const ChainParams& cp, int order) {
    BCDecomposition bc = b_decomposition(cp, order + 4);
    int m = std::min(bc.Cminus_at_p_over_t.end(), bc.Cminus_at_q_over_t.end());
    TSeries inner = bc.Cminus_at_q_over_t.truncated(m).scaled(cp.q) -
                    bc.Cminus_at_p_over_t.truncated(m).scaled(cp.p);
    TSeries inv_cubes = invert(one(m) - TSeries::monomial(LPoly(1), 3, m));
    return (inner * inv_cubes).scaled(cp.r).shifted_t(2).truncated(order);
}

TSeries d_x0_closed(const ChainParams& cp, int order) {
    Rat p = cp.p, q = cp.q, r = cp.r;
    if (p == q) return TSeries::zero(order);
    BCDecomposition bc = b_decomposition(cp, order + 6);
    int m = std::min(bc.Cminus_at_p_over_t.end(), bc.Cminus_at_q_over_t.end());
    TSeries Fpq = f_poly(q, p, r, m);
    TSeries Fqp = f_poly(p, q, r, m);
    TSeries inv_cubes = invert(one(m) - TSeries::monomial(LPoly(1), 3, m));
    TSeries rhs = bc.Cplus.truncated(m).scaled(LPoly::monomial(r * (p - q), 1)).shifted_t(2).truncated(m);
    TSeries mix = (bc.Cminus_at_p_over_t.truncated(m).scaled(p) * Fpq) -
                  (bc.Cminus_at_q_over_t.truncated(m).scaled(q) * Fqp);
    rhs -= ((mix.truncated(m) * inv_cubes).truncated(m)).shifted_t(1).truncated(m);
    // move x(p-q)(t^2(1-r)rx^2 - x/2 + t) to the right
    TSeries extra = TSeries::monomial(kX * kX.scaled(-Rat(1, 2) * (p - q)), 0, m) +
                    TSeries::monomial(kX.scaled(p - q), 1, m) +
                    TSeries::monomial(LPoly::monomial((p - q) * (1 - r) * r, 3), 2, m);
    rhs -= extra;
    TSeries u = divide_prefactor(rhs.truncated(order + 1), quartic_prefactor(p, q, r));
    return u.scaled(LPoly::monomial(r, 1)).shifted_t(1).truncated(order);
}

BoundaryT boundary_values_T(const ChainParams& cp, int order) {
    Rat p = cp.p, q = cp.q, r = cp.r;
    int m = order + 6;
    BoundaryT bt;
    TSeries inv_cubes = invert(one(m) - TSeries::monomial(LPoly(1), 3, m));
    auto closed = [&](Rat a, Rat b) {
        // t^3 (a-b)(b - r + sqrt((1-a)^2 - 4 t^3 b r)) / (2 a^2 b (1-t^3))
        TSeries rad = sqrt_series(TSeries::constant((1 - a) * (1 - a), m) +
                                  TSeries::monomial(LPoly(-4 * b * r), 3, m));
        TSeries num = rad + TSeries::constant(b - r, m);
        return (num * inv_cubes)
            .scaled((a - b) / (2 * a * a * b))
            .shifted_t(3)
            .truncated(order);
    };
    bt.at_tp = closed(p, q);
    bt.at_tq = closed(q, p);
    TSeries Z = compute_Z({p * q * r, m});
    TSeries W = Z.scaled(Rat(2)).shifted_t(1).truncated(m);
    bt.at_W = (W * W).scaled(r).shifted_t(1).truncated(order);
    return bt;
}

Report ergodicity_observe(const ChainParams& cp, int max_n) {
    Report rep;
    int steps = 3 * max_n;
    int side = steps + 2;
    double p = cp.p.convert_to<double>(), q = cp.q.convert_to<double>(),
           r = cp.r.convert_to<double>();
    double pp = p / (p + r), rp = r / (p + r);
    double qq = q / (q + r), rq = r / (q + r);
    std::vector<double> cur(static_cast<size_t>(side) * side, 0.0), nxt(cur.size());
    cur[0] = 1.0;
    auto at = [side](std::vector<double>& v, int i, int j) -> double& {
        return v[static_cast<size_t>(i) * side + j];
    };
    std::vector<double> p00_at_3n(max_n + 1, 0.0);
    p00_at_3n[0] = 1.0;
    bool off_phase_zero = true;
    for (int s = 1; s <= steps; ++s) {
        std::fill(nxt.begin(), nxt.end(), 0.0);
        for (int i = 0; i < side; ++i)
            for (int j = 0; j < side; ++j) {
                double mass = cur[static_cast<size_t>(i) * side + j];
                if (mass == 0) continue;
                if (i == 0 && j == 0) {
                    at(nxt, 1, 1) += mass;
                } else if (j == 0) {
                    at(nxt, i - 1, 0) += pp * mass;
                    if (i + 1 < side) at(nxt, i + 1, 1) += rp * mass;
                } else if (i == 0) {
                    at(nxt, 0, j - 1) += qq * mass;
                    if (j + 1 < side) at(nxt, 1, j + 1) += rq * mass;
                } else {
                    at(nxt, i - 1, j) += p * mass;
                    at(nxt, i, j - 1) += q * mass;
                    if (i + 1 < side && j + 1 < side) at(nxt, i + 1, j + 1) += r * mass;
                }
            }
        cur.swap(nxt);
        if (s % 3 == 0)
            p00_at_3n[s / 3] = cur[0];
        else if (cur[0] != 0.0)
            off_phase_zero = false;
    }
    rep.add("p00(n) = 0 off the period-3 phase", off_phase_zero);
    if (cp.ergodic()) {
        double target = 3.0 * p00_closed(cp, 128).convert_to<double>();
        bool decreasing = true;
        for (int n = max_n - 4; n < max_n; ++n)
            if (std::fabs(p00_at_3n[n + 1] - target) >=
                std::fabs(p00_at_3n[n] - target))
                decreasing = false;
        double gap = std::fabs(p00_at_3n[max_n] - target);
        rep.add("|p00(3n) - 3 p00| decreasing over the last 5 samples", decreasing);
        rep.add("final gap below 1e-3", gap < 1e-3, std::to_string(gap));
    } else {
        rep.add("non-ergodic: p00(3n) below 1e-3 at n = " + std::to_string(max_n),
                p00_at_3n[max_n] < 1e-3, std::to_string(p00_at_3n[max_n]));
    }
    return rep;
}

Report verify_law(const ChainParams& cp, int order) {
    Report rep;
    Rat p = cp.p, q = cp.q, r = cp.r;
    LawTable table(cp, order);
    SDPair sd = sd_from_oracle(cp, table, order);

    bool sums_ok = true;
    for (int n = 0; n <= table.n_max(); ++n)
        if (table.row_sum(n) != 1) sums_ok = false;
    rep.add("law DP rows sum to 1 exactly", sums_ok);

    TSeries p00_oracle = TSeries::zero(order);
    for (int n = 0; n < order; ++n) {
        Rat v = table.prob(n, 0, 0);
        if (v != 0) p00_oracle += TSeries::monomial(LPoly(v), n, order);
    }
    TSeries p00_cf = p00_closed_general(cp, order);
    rep.add("Theorem 5 P00 equals oracle", agree(p00_cf, p00_oracle, order));

    TSeries s00 = x_coefficient(sd.Sx0, 0);
    rep.add("[x^0 y^0] S = 2 t^2 P00",
            agree(s00, p00_oracle.scaled(Rat(2)).shifted_t(2).truncated(order), order));

    rep.add("S symmetric in x, y", agree(sd.S, sd.S.swapped_xy(), order));
    rep.add("D antisymmetric in x, y",
            agree(sd.D, sd.D.swapped_xy().scaled(Rat(-1)), order));

    TSeries sx0_cf = s_x0_closed(cp, order);
    auto mis = first_mismatch(sx0_cf, sd.Sx0, order);
    rep.add("Theorem 5 S(x,0) equals oracle", !mis.has_value(), mis ? mis->second : "");

    TSeries dx0_cf = d_x0_closed(cp, order);
    if (p == q) {
        rep.add("p = q: D vanishes", sd.Dx0.truncated(order).is_zero());
    } else {
        auto dmis = first_mismatch(dx0_cf, sd.Dx0, order);
        rep.add("Theorem 6 D(x,0) equals oracle", !dmis.has_value(),
                dmis ? dmis->second : "");
    }

    // E-relations
    TSeries E2 = x_coefficient(sd.E, 2), E3 = x_coefficient(sd.E, 3);
    rep.add("E0 = E1 = 0", x_coefficient(sd.E, 0).is_zero() &&
                               x_coefficient(sd.E, 1).is_zero());
    TSeries e3_pred = E2.scaled(r).shifted_t(-1).truncated(order - 1) +
                      TSeries::constant(r * (q - p), order - 1);
    rep.add("E3 = (r/t) E2 + r(q-p)", agree(E3.truncated(order - 1), e3_pred, order - 1));
    rep.add("E2 matches its closed form", agree(E2, e2_closed(cp, order), order));

    // Functional equations (S-eq-t) / (D-eq-t)
    {
        int m = order;
        BPoly step;
        step.add(1, 0, 1);
        step.add(0, 1, 1);
        step.add(2, 2, p * q * r);
        BSeries K = BSeries::monomial(BPoly::monomial(1, 1, 1), 0, m) -
                    BSeries::monomial(step, 1, m);
        auto pair_poly = [&](Rat a, Rat b, bool use_y) {
            // (t - a u)(t - b u) with u = x or y
            BPoly u2 = use_y ? BPoly::monomial(a * b, 0, 2) : BPoly::monomial(a * b, 2, 0);
            BPoly u1 = use_y ? BPoly::monomial(a + b, 0, 1) : BPoly::monomial(a + b, 1, 0);
            return BSeries::monomial(u2, 0, m) - BSeries::monomial(u1, 1, m) +
                   BSeries::monomial(BPoly(Rat(1)), 2, m);
        };
        BSeries x_mono = BSeries::monomial(BPoly::monomial(1, 1, 0), 0, m);
        BSeries y_mono = BSeries::monomial(BPoly::monomial(1, 0, 1), 0, m);
        // G(x,y) = r x y t (t - qx)(t - py)
        BPoly gxy;
        gxy.add(1, 1, r);
        BSeries tq_x_tp_y =
            BSeries::monomial(BPoly::monomial(p * q, 1, 1), 0, m) -
            BSeries::monomial([&] {
                BPoly b;
                b.add(1, 0, q);
                b.add(0, 1, p);
                return b;
            }(), 1, m) +
            BSeries::monomial(BPoly(Rat(1)), 2, m);
        BSeries G = BSeries::monomial(gxy, 1, m) * tq_x_tp_y;
        BSeries Gyx = G.swapped_xy();
        BSeries S0y = BSeries::embed(sd.Sx0, true);
        BSeries D0y = BSeries::embed(sd.Dx0, true).scaled(Rat(-1));
        BSeries lhsS = (K * sd.S).shifted_t(1) +
                       pair_poly(p, q, true) * (BSeries::embed(sd.Sx0, false) * x_mono) +
                       pair_poly(p, q, false) * (S0y * y_mono);
        BSeries lhsD = (K * sd.D).shifted_t(1) +
                       pair_poly(p, q, true) * (BSeries::embed(sd.Dx0, false) * x_mono) +
                       pair_poly(p, q, false) * (D0y * y_mono);
        int upto = std::min({lhsS.end(), G.end(), order});
        rep.add("functional equation (S-eq-t) holds",
                agree(lhsS.truncated(upto), (G + Gyx).truncated(upto), upto));
        rep.add("functional equation (D-eq-t) holds",
                agree(lhsD.truncated(upto), (G - Gyx).truncated(upto), upto));
    }

    // B / C decomposition checks
    {
        BCDecomposition bc = b_decomposition(cp, order + 2);
        rep.add("[x] B = -t and [x^2] B = -1",
                agree(x_coefficient(bc.B, 1),
                      TSeries::monomial(LPoly(-1), 1, bc.B.end()), order) &&
                    agree(x_coefficient(bc.B, 2),
                          TSeries::constant(-1, bc.B.end()), order));
        TSeries lag = cplus_lagrange(cp, order + 2);
        auto cmis = first_mismatch(bc.Cplus.truncated(order), lag.truncated(order), order);
        rep.add("C+ double route (positive part vs Lagrange)", !cmis.has_value(),
                cmis ? cmis->second : "");
        TSeries reassembled = TSeries::monomial(LPoly(Rat(1) / (p * q)), -1, bc.B.end()) +
                              TSeries::monomial(kXbar.scaled(Rat(-2) / (p * q)), 0, bc.B.end()) +
                              bc.Cminus.scaled(Rat(2)) -
                              TSeries::monomial(kX, 1, bc.B.end()) -
                              TSeries::monomial(kX * kX, 0, bc.B.end()) +
                              bc.Cplus.scaled(Rat(2));
        rep.add("Eq. (U-def) reassembles B", agree(reassembled, bc.B, order));
    }

    // boundary values of T and E
    {
        BoundaryT bt = boundary_values_T(cp, order);
        TSeries t_tp = sd.T.substitute_monomial(Rat(1) / p, 1, 1);
        TSeries t_tq = sd.T.substitute_monomial(Rat(1) / q, 1, 1);
        int upto = std::min({t_tp.end(), bt.at_tp.end(), order});
        rep.add("T(t/p) matches Eq. (Ptp)",
                agree(t_tp.truncated(upto), bt.at_tp.truncated(upto), upto));
        rep.add("T(t/q) matches Eq. (Ptq)",
                agree(t_tq.truncated(upto), bt.at_tq.truncated(upto), upto));
        TSeries Z = compute_Z({p * q * r, order});
        TSeries W = Z.scaled(Rat(2)).shifted_t(1).truncated(order);
        TSeries t_w = compose_x(sd.T, W);
        int uw = std::min({t_w.end(), bt.at_W.end(), order});
        rep.add("T(W) = r t W^2", agree(t_w.truncated(uw), bt.at_W.truncated(uw), uw));
        TSeries e_tp = sd.E.substitute_monomial(Rat(1) / p, 1, 1);
        TSeries e_tq = sd.E.substitute_monomial(Rat(1) / q, 1, 1);
        rep.add("E(t/p) = T(t/p) and E(t/q) = -T(t/q)",
                agree(e_tp.truncated(upto), bt.at_tp.truncated(upto), upto) &&
                    agree(e_tq.truncated(upto),
                          bt.at_tq.scaled(Rat(-1)).truncated(upto), upto));
    }

    if (p == q) {
        TSeries p00_sym = p00_closed_symmetric(cp, order);
        rep.add("Theorem 4 P00 matches Theorem 5 reduction",
                agree(p00_sym, p00_cf, order));
        TSeries qpx0 = qpx0_closed_symmetric(cp, order);
        // oracle Q(px,0) = P00 + r' P1(px)
        TSeries qpx0_oracle = TSeries::zero(order);
        Rat rp = cp.r_prime();
        for (int n = 0; n < order; ++n) {
            LPoly layer;
            for (int i = 0; i <= n; ++i) {
                Rat v = table.prob(n, i, 0);
                if (v == 0) continue;
                layer.add(i, (i == 0 ? v : rp * v * rat_pow(p, i)));
            }
            if (!layer.zero()) qpx0_oracle += TSeries::monomial(layer, n, order);
        }
        rep.add("Theorem 4 Q(px,0) matches oracle", agree(qpx0, qpx0_oracle, order));
    }
    return rep;
}

}  // namespace kreweras
