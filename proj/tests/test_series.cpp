#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kreweras/bseries.hpp"
#include "kreweras/lpoly.hpp"
#include "kreweras/series_json.hpp"
#include "kreweras/tseries.hpp"

using namespace kreweras;

TEST_CASE("LPoly arithmetic and parts") {
    LPoly a = LPoly::monomial(2, -1) + LPoly::monomial(3, 0) + LPoly::monomial(-1, 2);
    CHECK(a.coeff(-1) == 2);
    CHECK(a.coeff(5) == 0);
    CHECK(a.min_exp() == -1);
    CHECK(a.max_exp() == 2);
    LPoly b = LPoly::monomial(1, 1);
    LPoly p = a * b;
    CHECK(p.coeff(0) == 2);
    CHECK(p.coeff(3) == -1);
    CHECK(a.part(XPart::positive).coeff(2) == -1);
    CHECK(a.part(XPart::positive).coeff(0) == 0);
    CHECK(a.part(XPart::nonpositive).coeff(-1) == 2);
    CHECK(a.eval(Rat(2)) == Rat(2, 2) + 3 - 4);
    CHECK_THROWS(a.divided_by_monomial(Rat(1), 1));
    CHECK(b.divided_by_monomial(Rat(1), 1).coeff(0) == 1);
}

TEST_CASE("TSeries window bookkeeping") {
    TSeries a = TSeries::monomial(LPoly(1), 0, 5);  // 1 + O(t^5)
    TSeries b = TSeries::monomial(LPoly(1), 3, 4);  // t^3 + O(t^4)
    TSeries s = a + b;
    CHECK(s.end() == 4);
    TSeries p = a * b;
    CHECK(p.valuation() == 3);
    CHECK(p.coeff(3).constant_value() == 1);
    CHECK((a - a).is_zero());
    CHECK(a.truncated(2).end() == 2);
    CHECK(a.shifted_t(3).valuation() == 3);
}

TEST_CASE("invert and geometric series") {
    int m = 12;
    TSeries g = TSeries::constant(1, m) - TSeries::monomial(LPoly(1), 1, m);
    TSeries inv = invert(g);
    for (int n = 0; n < m; ++n) CHECK(inv.coeff(n).constant_value() == 1);
    CHECK((g * inv).coeff(0).constant_value() == 1);
    CHECK((g * inv).coeff(5).zero());
}

TEST_CASE("sqrt_series on a perfect square") {
    int m = 14;
    TSeries f = TSeries::constant(1, m) + TSeries::monomial(LPoly::monomial(3, 1), 1, m);
    TSeries sq = (f * f).truncated(m);
    CHECK(agree(sqrt_series(sq), f, m));
    // sqrt(1 - 4t) has Catalan-related coefficients: [t^1] = -2, [t^2] = -2
    TSeries r = sqrt_series(TSeries::constant(1, m) - TSeries::monomial(LPoly(4), 1, m));
    CHECK(r.coeff(1).constant_value() == -2);
    CHECK(r.coeff(2).constant_value() == -2);
    CHECK(r.coeff(3).constant_value() == -4);
}

TEST_CASE("fixed point solves u = t(1+u)^2 (Catalan)") {
    int m = 10;
    TSeries u = solve_valuation_fixed_point(
        [m](const TSeries& v) {
            TSeries one = TSeries::constant(1, m);
            return ((one + v) * (one + v)).truncated(m).shifted_t(1).truncated(m);
        },
        m);
    Rat cat[] = {Rat(1), Rat(2), Rat(5), Rat(14), Rat(42)};
    for (int n = 1; n <= 5; ++n) CHECK(u.coeff(n).constant_value() == cat[n - 1]);
}

TEST_CASE("compose_x and substitute_monomial") {
    int m = 10;
    // f = x t, g = t^2  ->  f(g) = t^3
    TSeries f = TSeries::monomial(LPoly::monomial(1, 1), 1, m);
    TSeries g = TSeries::monomial(LPoly(1), 2, m);
    TSeries c = compose_x(f, g);
    CHECK(c.coeff(3).constant_value() == 1);
    // substitute x -> 2t in x^2 t gives 4 t^3
    TSeries h = TSeries::monomial(LPoly::monomial(1, 2), 1, m);
    TSeries s = h.substitute_monomial(Rat(2), 1, 2);
    CHECK(s.coeff(3).constant_value() == 4);
}

TEST_CASE("BSeries embed, slice, diagonal") {
    int m = 8;
    TSeries f = TSeries::monomial(LPoly::monomial(2, 1), 1, m) +
                TSeries::monomial(LPoly(5), 0, m);
    BSeries bx = BSeries::embed(f, false);
    CHECK(bx.coeff(1).coeff(1, 0) == 2);
    BSeries by = BSeries::embed(f, true);
    CHECK(by.coeff(1).coeff(0, 1) == 2);
    BSeries prod = bx * by;
    CHECK(prod.coeff(2).coeff(1, 1) == 4);
    CHECK(prod.y_slice0().coeff(1).coeff(1) == 10);
    CHECK(prod.diagonal().coeff(2).coeff(1) == 4);
    CHECK(agree(prod, prod.swapped_xy(), m));
}

TEST_CASE("JSON round trip") {
    int m = 6;
    TSeries f = TSeries::monomial(LPoly::monomial(Rat(3, 7), -2), 1, m) +
                TSeries::monomial(LPoly(1), 4, m);
    TSeries back = tseries_from_json(to_json(f));
    CHECK(agree(f, back, m));
    BSeries b = BSeries::embed(f, false) * BSeries::embed(f, true);
    BSeries bback = bseries_from_json(to_json(b));
    CHECK(agree(b, bback, b.end()));
}
