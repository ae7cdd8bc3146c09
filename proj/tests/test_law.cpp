#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kreweras/law.hpp"

using namespace kreweras;

namespace {
const ChainParams kStd{Rat(1, 3), Rat(1, 2), Rat(1, 6)};
const ChainParams kSym{Rat(2, 5), Rat(2, 5), Rat(1, 5)};
}  // namespace

TEST_CASE("law DP: stochastic rows and frozen early values") {
    LawTable table(kStd, 8);
    for (int n = 0; n <= 8; ++n) CHECK(table.row_sum(n) == 1);
    CHECK(table.prob(0, 0, 0) == 1);
    CHECK(table.prob(1, 1, 1) == 1);  // origin moves to (1,1) with probability 1
    // from (1,1): p west, q south, r to (2,2)
    CHECK(table.prob(2, 0, 1) == Rat(1, 3));
    CHECK(table.prob(2, 1, 0) == Rat(1, 2));
    CHECK(table.prob(2, 2, 2) == Rat(1, 6));
    // return to the origin at n = 3 via (0,1)->south (q'') or (1,0)->west (p')
    CHECK(table.prob(3, 0, 0) == Rat(1, 3) * kStd.q_dprime() + Rat(1, 2) * kStd.p_prime());
}

TEST_CASE("S/D symmetry and the [x^0 y^0] link to P00") {
    LawTable table(kStd, 10);
    SDPair sd = sd_from_oracle(kStd, table, 10);
    CHECK(agree(sd.S, sd.S.swapped_xy(), 10));
    CHECK(agree(sd.D, sd.D.swapped_xy().scaled(Rat(-1)), 10));
    TSeries s00 = x_coefficient(sd.Sx0, 0);
    for (int n = 2; n < 10; ++n)
        CHECK(s00.coeff(n).constant_value() == 2 * table.prob(n - 2, 0, 0));
}

TEST_CASE("Theorem 5 P00 equals the DP") {
    TSeries p00 = p00_closed_general(kStd, 12);
    LawTable table(kStd, 12);
    for (int n = 0; n < 12; ++n)
        CHECK(p00.coeff(n).constant_value() == table.prob(n, 0, 0));
}

TEST_CASE("Theorem 4 symmetric forms") {
    TSeries a = p00_closed_symmetric(kSym, 12);
    TSeries b = p00_closed_general(kSym, 12);
    CHECK(agree(a, b, 12));
    CHECK_THROWS(p00_closed_symmetric(kStd, 8));
}

TEST_CASE("B decomposition basics") {
    BCDecomposition bc = b_decomposition(kStd, 12);
    CHECK(agree(x_coefficient(bc.B, 1), TSeries::monomial(LPoly(-1), 1, bc.B.end()), 10));
    CHECK(agree(x_coefficient(bc.B, 2), TSeries::constant(-1, bc.B.end()), 10));
    CHECK(agree(bc.Cplus, cplus_lagrange(kStd, 12).truncated(bc.Cplus.end()), 10));
}

TEST_CASE("full law verification at moderate order") {
    Report rep = verify_law(kStd, 12);
    for (const auto& c : rep.checks) CHECK_MESSAGE(c.pass, c.name << " " << c.detail);
    Report sym = verify_law(kSym, 12);
    for (const auto& c : sym.checks) CHECK_MESSAGE(c.pass, c.name << " " << c.detail);
}

TEST_CASE("ergodicity observation") {
    Report erg = ergodicity_observe(kStd, 60);
    for (const auto& c : erg.checks) CHECK_MESSAGE(c.pass, c.name << " " << c.detail);
    Report non = ergodicity_observe(ChainParams(Rat(1, 6), Rat(1, 3), Rat(1, 2)), 60);
    for (const auto& c : non.checks) CHECK_MESSAGE(c.pass, c.name << " " << c.detail);
}
