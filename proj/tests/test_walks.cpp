#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <sstream>

#include "kreweras/walks.hpp"

using namespace kreweras;

namespace {

// Exhaustive enumeration over all words in {NE, W, S}^n, independent of the
// DP implementation.
std::map<std::pair<int, int>, long> brute_force(int n) {
    std::map<std::pair<int, int>, long> out;
    long total = 1;
    for (int k = 0; k < n; ++k) total *= 3;
    for (long w = 0; w < total; ++w) {
        int i = 0, j = 0;
        long code = w;
        bool ok = true;
        for (int k = 0; k < n && ok; ++k) {
            switch (code % 3) {
                case 0: ++i, ++j; break;
                case 1: --i; break;
                case 2: --j; break;
            }
            code /= 3;
            ok = i >= 0 && j >= 0;
        }
        if (ok) ++out[{i, j}];
    }
    return out;
}

}  // namespace

TEST_CASE("DP table equals exhaustive enumeration up to n = 9") {
    WalkTable table(9);
    for (int n = 0; n <= 9; ++n) {
        auto brute = brute_force(n);
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j) {
                auto it = brute.find({i, j});
                Int expected = it == brute.end() ? 0 : it->second;
                CHECK(table.count(n, i, j) == expected);
            }
    }
}

TEST_CASE("excursion counts a(3n) match the closed formula and frozen values") {
    WalkTable table(24);
    Int frozen[] = {Int(1), Int(2), Int(16), Int(192), Int(2816),
                    Int(46592), Int(835584), Int("15876096"), Int("315031552")};
    for (int n = 0; n <= 8; ++n) {
        Int cf = int_pow(Int(4), n) * binomial(3 * n, n);
        Int denom = Int(n + 1) * (2 * n + 1);
        Int q, rem;
        divide_qr(cf, denom, q, rem);
        CHECK(rem == 0);
        CHECK(q == frozen[n]);
        CHECK(kreweras_count(table, 3 * n) == frozen[n]);
    }
    CHECK(kreweras_count(table, 1) == 0);
    CHECK(kreweras_count(table, 2) == 0);
}

TEST_CASE("catalan numbers") {
    Int frozen[] = {Int(1), Int(1), Int(2), Int(5), Int(14), Int(42), Int(132)};
    for (int n = 0; n <= 6; ++n) CHECK(catalan(n) == frozen[n]);
}

TEST_CASE("square lattice quarter-plane excursions") {
    CHECK(square_lattice_count(0) == 1);
    CHECK(square_lattice_count(1) == 2);
    CHECK(square_lattice_count(2) == 10);  // frozen by exhaustive enumeration
    CHECK(square_lattice_count(3) == 70);
    // matches cat(n) * cat(n+1) for walks of length 2n
    for (int n = 0; n <= 6; ++n)
        CHECK(square_lattice_count(n) == catalan(n) * catalan(n + 1));
}

TEST_CASE("excursion CSV is well-formed") {
    WalkTable table(6);
    std::string csv = excursion_csv(table, 6);
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line == "n,count");
    std::getline(in, line);
    CHECK(line == "0,1");
}
