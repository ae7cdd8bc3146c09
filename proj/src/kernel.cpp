#include "kreweras/kernel.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace kreweras {

namespace {

const LPoly kXbar = LPoly::monomial(1, -1);
const LPoly kX = LPoly::monomial(1, 1);

}  // namespace

TSeries compute_Y0(const KernelParams& params) {
    int n = params.order;
    Rat rho = params.rho;
    // Y0 = t (1 + Y0/x + rho*x*Y0^2): contraction in the t-adic metric.
    auto phi = [&](const TSeries& u) {
        TSeries v = TSeries::constant(1, n) + u.scaled(kXbar) +
                    (u * u).truncated(n).scaled(LPoly::monomial(rho, 1));
        return v.shifted_t(1);
    };
    return solve_valuation_fixed_point(phi, n);
}

TSeries compute_Z(const KernelParams& params) {
    int n = params.order;
    Rat c = 4 * params.rho;
    // Z = 1 + 4 rho t^3 Z^3
    auto phi = [&](const TSeries& u) {
        TSeries cube = (u * u).truncated(n) * u;
        return TSeries::constant(1, n) + cube.truncated(n).scaled(c).shifted_t(3).truncated(n);
    };
    return solve_valuation_fixed_point(phi, n);
}

TSeries X2_series(const KernelParams& params) {
    TSeries Z = compute_Z(params);
    TSeries denom = (Z * Z).truncated(params.order).scaled(4 * params.rho).shifted_t(2);
    return invert(denom);
}

KernelData compute_kernel(const KernelParams& params) {
    int n = params.order;
    Rat rho = params.rho;
    KernelData d;
    d.params = params;
    d.Y0 = compute_Y0(params);
    d.Z = compute_Z(params);
    d.W = d.Z.scaled(Rat(2)).shifted_t(1).truncated(n);

    // e1 = (1 - t/x)/(rho t x) = 1/(rho t x) - 1/(rho x^2); e2 = 1/(rho x).
    d.e1 = TSeries::monomial(LPoly::monomial(1 / rho, -1), -1, n) +
           TSeries::monomial(LPoly::monomial(-1 / rho, -2), 0, n);
    d.e2 = TSeries::monomial(LPoly::monomial(1 / rho, -1), 0, n);

    // Delta(x) = (1 - t/x)^2 - 4 rho t^2 x
    d.Delta = TSeries::constant(1, n) + TSeries::monomial(kXbar.scaled(-2), 1, n) +
              TSeries::monomial(LPoly::monomial(1, -2), 2, n) +
              TSeries::monomial(LPoly::monomial(-4 * rho, 1), 2, n);

    TSeries Z2 = (d.Z * d.Z).truncated(n);
    d.Delta0 = invert(Z2);
    d.DeltaPlus =
        TSeries::constant(1, n) - Z2.scaled(LPoly::monomial(4 * rho, 1)).shifted_t(2).truncated(n);
    TSeries ZZp1 = (d.Z * (d.Z + TSeries::constant(1, n))).truncated(n);
    d.DeltaMinus = TSeries::constant(1, n) -
                   ZZp1.scaled(kXbar).shifted_t(1).truncated(n) +
                   Z2.scaled(LPoly::monomial(1, -2)).shifted_t(2).truncated(n);
    d.X2 = invert(Z2.scaled(4 * rho).shifted_t(2));

    // K(x, Y0) = x Y0 - t (x + Y0 + rho x^2 Y0^2) must vanish.
    TSeries K = d.Y0.scaled(kX) -
                (TSeries::monomial(kX, 0, n) + d.Y0 +
                 (d.Y0 * d.Y0).truncated(n).scaled(LPoly::monomial(rho, 2)))
                    .shifted_t(1)
                    .truncated(n);
    if (!K.truncated(n).is_zero()) throw std::logic_error("compute_kernel: K(x, Y0) != 0");

    TSeries prod = ((d.Delta0 * d.DeltaPlus).truncated(n) * d.DeltaMinus).truncated(n);
    if (!agree(prod, d.Delta, n))
        throw std::logic_error("compute_kernel: canonical factorization fails");
    return d;
}

namespace {

/// Laurent polynomial in x, y, t with exact rational coefficients; just
/// enough structure to state the kernel substitution identities.
struct TriPoly {
    std::map<std::tuple<int, int, int>, Rat> terms;  // (ex, ey, et)

    void add(int ex, int ey, int et, const Rat& c) {
        auto key = std::make_tuple(ex, ey, et);
        Rat v = terms[key] + c;
        if (v == 0)
            terms.erase(key);
        else
            terms[key] = v;
    }
    bool operator==(const TriPoly& o) const { return terms == o.terms; }

    /// Substitute x := 1/(rho x y) when which == 0, else y := 1/(rho x y).
    TriPoly substituted(int which, const Rat& rho) const {
        TriPoly r;
        for (const auto& [k, c] : terms) {
            auto [ex, ey, et] = k;
            if (which == 0)
                r.add(-ex, ey - ex, et, c * rat_pow(rho, -ex));
            else
                r.add(ex - ey, -ey, et, c * rat_pow(rho, -ey));
        }
        return r;
    }
};

TriPoly rational_kernel(const Rat& rho) {
    // K_r = 1 - t (1/x + 1/y + rho x y)
    TriPoly k;
    k.add(0, 0, 0, 1);
    k.add(-1, 0, 1, -1);
    k.add(0, -1, 1, -1);
    k.add(1, 1, 1, -rho);
    return k;
}

}  // namespace

Report verify_orbit_invariance(const KernelParams& params) {
    Report rep;
    TriPoly k = rational_kernel(params.rho);
    TriPoly phi = k.substituted(0, params.rho);
    TriPoly psi = k.substituted(1, params.rho);
    rep.add("kernel invariant under (x,y) -> (1/(rho x y), y)", phi == k);
    rep.add("kernel invariant under (x,y) -> (x, 1/(rho x y))", psi == k);
    // The substitutions are involutions on arbitrary Laurent polynomials;
    // witness on a generic element.
    TriPoly g;
    g.add(2, -1, 0, Rat(3, 7));
    g.add(-1, 3, 2, Rat(-5));
    g.add(0, 0, 1, Rat(1, 2));
    bool invol = g.substituted(0, params.rho).substituted(0, params.rho) == g &&
                 g.substituted(1, params.rho).substituted(1, params.rho) == g;
    rep.add("substitutions are involutions", invol);
    return rep;
}

}  // namespace kreweras
