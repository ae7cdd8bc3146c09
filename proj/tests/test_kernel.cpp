#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kreweras/kernel.hpp"

using namespace kreweras;

TEST_CASE("Y0 starts t + x^{-1} t^2 and satisfies its equation") {
    KernelData kd = compute_kernel({Rat(1), 16});
    CHECK(kd.Y0.valuation() == 1);
    CHECK(kd.Y0.coeff(1).constant_value() == 1);
    CHECK(kd.Y0.coeff(2).coeff(-1) == 1);
    // compute_kernel already asserts K(x, Y0) = 0 internally
}

TEST_CASE("elementary symmetric functions of Y0, Y1") {
    // Y0 Y1 = x^{-1}/rho and Y0 + Y1 = x^{-1}(1 - t x^{-1})/(rho t)
    for (Rat rho : {Rat(1), Rat(1, 36), Rat(3, 7)}) {
        KernelData kd = compute_kernel({rho, 14});
        TSeries Y1 = kd.e1 - kd.Y0;
        TSeries prod = (kd.Y0 * Y1).truncated(kd.Y0.end() - 2);
        TSeries expect = TSeries::monomial(LPoly::monomial(1 / rho, -1), 0, prod.end());
        CHECK(agree(prod, expect, prod.end()));
    }
}

TEST_CASE("Z and W frozen values for rho = 1") {
    TSeries Z = compute_Z({Rat(1), 16});
    // Z = 1 + 4t^3 Z^3: 1 + 4t^3 + 48 t^6 + 768 t^9 + ...
    CHECK(Z.coeff(0).constant_value() == 1);
    CHECK(Z.coeff(3).constant_value() == 4);
    CHECK(Z.coeff(6).constant_value() == 48);
    CHECK(Z.coeff(9).constant_value() == 768);
    CHECK(Z.coeff(1).zero());
}

TEST_CASE("X2 = 1/(4 rho t^2 Z^2) frozen expansion for rho = 1") {
    TSeries x2 = X2_series({Rat(1), 12});
    CHECK(x2.valuation() == -2);
    CHECK(x2.coeff(-2).constant_value() == Rat(1, 4));
    CHECK(x2.coeff(1).constant_value() == -2);
    CHECK(x2.coeff(4).constant_value() == -12);
    CHECK(x2.coeff(7).constant_value() == -160);
}

TEST_CASE("canonical factorization recombines to Delta") {
    for (Rat rho : {Rat(1), Rat(1, 36), Rat(5, 11)}) {
        KernelData kd = compute_kernel({rho, 20});
        int m = kd.Delta.end();
        TSeries prod =
            ((kd.Delta0 * kd.DeltaPlus).truncated(m) * kd.DeltaMinus).truncated(m);
        CHECK(agree(prod, kd.Delta, m));
    }
}

TEST_CASE("the two published Delta- forms agree for rho = 1") {
    KernelData kd = compute_kernel({Rat(1), 20});
    int m = kd.DeltaMinus.end();
    TSeries W = kd.W.truncated(m);
    TSeries W3 = ((W * W).truncated(m) * W).truncated(m);
    // 1 - xbar W (1 + W^3/4) + xbar^2 W^2 / 4
    TSeries alt = TSeries::constant(1, m) -
                  ((W + W3.scaled(Rat(1, 4)) * W).truncated(m))
                      .scaled(LPoly::monomial(1, -1)) +
                  (W * W).truncated(m).scaled(LPoly::monomial(Rat(1, 4), -2));
    CHECK(agree(alt, kd.DeltaMinus, m));
}

TEST_CASE("kernel orbit invariance") {
    Report rep = verify_orbit_invariance({Rat(1), 12});
    for (const auto& c : rep.checks) CHECK_MESSAGE(c.pass, c.name);
    Report rep2 = verify_orbit_invariance({Rat(2, 9), 12});
    CHECK(rep2.all_pass());
}
