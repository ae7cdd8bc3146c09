#include "kreweras/counting.hpp"

#include <sstream>
#include <stdexcept>

namespace kreweras {

namespace {

const LPoly kXbar = LPoly::monomial(1, -1);
const LPoly kX = LPoly::monomial(1, 1);

Rat catalan_rat(int n) {
    return Rat(binomial(2 * n, n), Int(n + 1));
}

void assert_power_series_in_x(const TSeries& s, const char* what) {
    if (s.valuation() < 0)
        throw std::logic_error(std::string(what) + ": negative t-exponent survives");
    for (int e = s.valuation(); e < s.end(); ++e) {
        const LPoly& c = s.coeff(e);
        if (!c.zero() && c.min_exp() < 0)
            throw std::logic_error(std::string(what) + ": negative x-exponent survives at t^" +
                                   std::to_string(e));
    }
}

TSeries compute_W(int order) {
    return compute_Z({Rat(1), order}).scaled(Rat(2)).shifted_t(1).truncated(order);
}

}  // namespace

BSeries q_full_by_recurrence(int order) {
    BSeries r = BSeries::zero(order);
    BPoly layer(Rat(1));
    r += BSeries::monomial(layer, 0, order);
    for (int n = 1; n < order; ++n) {
        BPoly next;
        for (const auto& [k, c] : layer.terms()) {
            auto [i, j] = k;
            next.add(i + 1, j + 1, c);
            if (i > 0) next.add(i - 1, j, c);
            if (j > 0) next.add(i, j - 1, c);
        }
        layer = next;
        if (!layer.zero()) r += BSeries::monomial(layer, n, order);
    }
    return r;
}

TSeries q_x0_closed(int order) {
    int m = order + 4;
    TSeries W = compute_W(m);
    TSeries invW = invert(W);
    TSeries sq = sqrt_series(TSeries::constant(1, m) - (W * W).truncated(m).scaled(kX));
    TSeries xbar = TSeries::monomial(kXbar, 0, m);
    TSeries inner = TSeries::monomial(LPoly(Rat(1, 2)), -1, m) - xbar -
                    ((invW - xbar) * sq).truncated(m);
    TSeries q = inner.scaled(kXbar).shifted_t(-1).truncated(order);
    assert_power_series_in_x(q, "q_x0_closed");
    return q;
}

TSeries axis_gf_closed(int i, int order) {
    int m = order + 4;
    TSeries W = compute_W(m);
    TSeries Wp = pow_series(W, 2 * i + 1).truncated(m);
    TSeries W3 = pow_series(W, 3).truncated(m);
    TSeries paren = TSeries::constant(catalan_rat(i), m) - W3.scaled(catalan_rat(i + 1) / 4);
    Rat pref = Rat(1, 2 * int_pow(4, i));
    return (Wp * paren).truncated(m).scaled(pref).shifted_t(-1).truncated(order);
}

Rat axis_coeff_formula(int i, int n) {
    return Rat(int_pow(4, n) * (2 * i + 1), Int(n + i + 1) * (2 * n + 2 * i + 1)) *
           binomial(2 * i, i) * binomial(3 * n + 2 * i, n);
}

TSeries q_diag_closed(int order) {
    int m = order + 4;
    TSeries W = compute_W(m);
    TSeries W2 = (W * W).truncated(m);
    TSeries W3 = (W2 * W).truncated(m);
    TSeries xbar = TSeries::monomial(kXbar, 0, m);
    TSeries denom = TSeries::constant(1, m) -
                    (W * (TSeries::constant(1, m) + W3.scaled(Rat(1, 4)))).truncated(m).scaled(kX) +
                    W2.scaled(Rat(1, 4)).scaled(kX * kX);
    TSeries tQd = ((W - xbar) * invert(sqrt_series(denom))).truncated(m) + xbar;
    TSeries qd = tQd.shifted_t(-1).truncated(order);
    assert_power_series_in_x(qd, "q_diag_closed");
    return qd;
}

CountingBundle counting_bundle(int order) {
    CountingBundle b;
    b.Qfull = q_full_by_recurrence(order);
    b.Qx0 = q_x0_closed(order);
    b.Qdiag = q_diag_closed(order);
    b.W = compute_W(order);
    return b;
}

Report verify_q_xy_closed(int order) {
    Report rep;
    int m = order + 4;
    BSeries Qfull = q_full_by_recurrence(m);

    // K(x,y) = xy - t(x + y + x^2 y^2)
    BPoly step;
    step.add(1, 0, 1);
    step.add(0, 1, 1);
    step.add(2, 2, 1);
    BSeries K = BSeries::monomial(BPoly::monomial(1, 1, 1), 0, m) -
                BSeries::monomial(step, 1, m);
    BSeries lhs = K * (Qfull + BSeries::monomial(BPoly::monomial(1, -1, -1), -1, m));

    TSeries W = compute_W(m);
    TSeries invW = invert(W);
    TSeries xbar = TSeries::monomial(kXbar, 0, m);
    TSeries U = ((invW - xbar) *
                 sqrt_series(TSeries::constant(1, m) - (W * W).truncated(m).scaled(kX)))
                    .truncated(m);
    BSeries rhs = BSeries::embed(U, false) + BSeries::embed(U, true);

    int upto = std::min({lhs.end(), rhs.end(), order});
    auto mis = first_mismatch(lhs, rhs, upto);
    rep.add("K(x,y)(Q + 1/(xyt)) equals stated numerator to t^" + std::to_string(upto),
            !mis.has_value(), mis ? mis->second : "");
    rep.add("both sides symmetric in x, y",
            agree(lhs, lhs.swapped_xy(), upto) && agree(rhs, rhs.swapped_xy(), upto));
    rep.add("t^0 layer is xy", lhs.coeff(0) == BPoly::monomial(1, 1, 1));
    return rep;
}

Report verify_kernel_equation_R(int order) {
    Report rep;
    int m = 2 * order + 6;
    KernelData kd = compute_kernel({Rat(1), m});
    TSeries R = q_x0_closed(m - 2).scaled(kX).shifted_t(1);
    TSeries RY0 = compose_x(R, kd.Y0);
    TSeries xY0 = kd.Y0.scaled(kX);
    rep.add("R(x) + R(Y0) = x Y0 to t^" + std::to_string(order),
            agree((R + RY0).truncated(order), xY0.truncated(order), order));
    rep.add("R has no constant term", R.valuation() >= 1);

    // Divided-difference identity multiplied through by sqrt(Delta):
    //   sqrt(Delta) ((R(Y0)-R(Y1))/(Y0-Y1) - x) = t x (2R(x) + 2/x - 1/t).
    // The divided difference is the complete homogeneous symmetric function
    // expansion sum_m r_m h_{m-1}(Y0, Y1), with h_j = e1 h_{j-1} - e2 h_{j-2}.
    int max_m = order / 2 + 2;
    TSeries h_prev = TSeries::zero(m);                 // h_{-1}
    TSeries h_cur = TSeries::constant(1, m);           // h_0
    TSeries ddsum = TSeries::zero(m);
    for (int deg = 1; deg <= max_m; ++deg) {
        TSeries rm = x_coefficient(R, deg);
        TSeries term = (rm * h_cur).truncated(std::min(rm.end(), m));
        ddsum = ddsum.truncated(term.end()) + term;
        TSeries h_next = (kd.e1 * h_cur) - (kd.e2 * h_prev);
        h_prev = h_cur;
        h_cur = h_next;
    }
    TSeries sqrtD = sqrt_series(kd.Delta);
    TSeries lhs = (sqrtD * (ddsum - TSeries::monomial(kX, 0, ddsum.end()))).truncated(order);
    TSeries rhs = (R.scaled(Rat(2)) + TSeries::monomial(kXbar.scaled(2), 0, m) -
                   TSeries::monomial(LPoly(1), -1, m))
                      .scaled(kX)
                      .shifted_t(1)
                      .truncated(order);
    auto mis = first_mismatch(lhs, rhs, order);
    rep.add("divided-difference identity (times sqrt Delta) to t^" + std::to_string(order),
            !mis.has_value(), mis ? mis->second : "");
    return rep;
}

}  // namespace kreweras
