#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kreweras/stationary.hpp"

using namespace kreweras;

namespace {
const ChainParams kStd{Rat(1, 3), Rat(1, 2), Rat(1, 6)};
const ChainParams kSym{Rat(2, 5), Rat(2, 5), Rat(1, 5)};
}  // namespace

TEST_CASE("parameter validation") {
    CHECK_THROWS(ChainParams(Rat(1, 2), Rat(1, 2), Rat(1, 2)));
    CHECK_THROWS(ChainParams(Rat(1), Rat(0), Rat(0)));
    CHECK(kStd.ergodic());
    CHECK(!ChainParams(Rat(1, 6), Rat(1, 3), Rat(1, 2)).ergodic());
    CHECK(kStd.p_prime() == Rat(2, 3));
    CHECK(kStd.r_prime() == Rat(1, 3));
    CHECK(kStd.q_dprime() == Rat(3, 4));
    CHECK(kStd.r_dprime() == Rat(1, 4));
}

TEST_CASE("root w: defining cubic, bounds, symmetric special case") {
    set_float_precision_bits(256);
    RootW w = solve_w(kStd);
    BigFloat resid = 2 + kStd.p.convert_to<BigFloat>() * kStd.q.convert_to<BigFloat>() *
                             kStd.r.convert_to<BigFloat>() * w.w * w.w * w.w -
                     w.w;
    CHECK(abs(resid) < BigFloat("1e-60"));
    CHECK(w.w >= 2);  // 1/M = 2 for M = 1/2
    CHECK(w.w * w.w <= BigFloat(6) + BigFloat("1e-60"));  // 1/sqrt(pq) = sqrt(6)

    RootW ws = solve_w(kSym);
    CHECK(abs(ws.w - BigFloat(5) / 2) < BigFloat("1e-70"));
}

TEST_CASE("p00 closed forms") {
    set_float_precision_bits(256);
    // p = q branch: (1/3)(1 - r/p)^{3/2} at p = q = 2/5, r = 1/5 is (1/3) 2^{-3/2}
    BigFloat expected = BigFloat(1) / 3 / (2 * sqrt(BigFloat(2)));
    CHECK(abs(p00_closed(kSym) - expected) < BigFloat("1e-70"));
    // general branch agrees with the symmetric branch in the p -> q limit
    Rat eps(1, 100000000);
    ChainParams near(Rat(2, 5) + eps, Rat(2, 5) - eps, Rat(1, 5));
    CHECK(abs(p00_closed(near) - expected) < BigFloat("1e-6"));
    CHECK_THROWS(p00_closed(ChainParams(Rat(1, 6), Rat(1, 3), Rat(1, 2))));
}

TEST_CASE("root identities for fixed and sampled triples") {
    CHECK(root_identities(kStd).all_pass());
    CHECK(root_identities(kSym).all_pass());
    for (const ChainParams& cp : random_ergodic_triples(10, 12345u))
        CHECK(root_identities(cp).all_pass());
}

TEST_CASE("power iteration matches closed forms") {
    StationaryEstimate est = stationary_numeric(kStd, 120);
    CHECK(est.residual < 1e-10L);
    CHECK(est.mass > 0.999999L);
    std::vector<BigFloat> axis = stationary_axis(kStd, 10);
    for (int i = 0; i <= 10; ++i)
        CHECK(abs(axis[i] - BigFloat(est.at(i, 0))) < 1e-7);
    Report rep = verify_balance_identities(kStd, &est);
    for (const auto& c : rep.checks) CHECK_MESSAGE(c.pass, c.name << " " << c.detail);
}

TEST_CASE("interior reconstruction is stationary") {
    Report rep = stationary_interior_residual(kStd, 12);
    for (const auto& c : rep.checks) CHECK_MESSAGE(c.pass, c.name << " " << c.detail);
}

TEST_CASE("Flatto-Hahn factored forms (p < q)") {
    Report rep = flatto_hahn_forms(kStd);
    for (const auto& c : rep.checks) CHECK_MESSAGE(c.pass, c.name << " " << c.detail);
    CHECK_THROWS(flatto_hahn_forms(kSym));
}

TEST_CASE("asymmetry witness") {
    CHECK(asymmetry_witness(kStd).all_pass());
}

TEST_CASE("asymptotics regimes") {
    AsymptoticsResult a = asymptotics_check(kStd, 60);
    CHECK(a.regime == "p<q");
    CHECK(a.rate_ok);
    CHECK(a.exponent_ok);
    AsymptoticsResult s = asymptotics_check(kSym, 60);
    CHECK(s.regime == "p=q");
    CHECK(s.rate_ok);
    CHECK(s.exponent_ok);
}

TEST_CASE("sampled triples are ergodic and deterministic") {
    auto a = random_ergodic_triples(5, 777u);
    auto b = random_ergodic_triples(5, 777u);
    REQUIRE(a.size() == 5);
    for (size_t k = 0; k < a.size(); ++k) {
        CHECK(a[k].ergodic());
        CHECK(a[k].p == b[k].p);
        CHECK(a[k].q == b[k].q);
        CHECK(a[k].r == b[k].r);
    }
}
