#include "gwcp3/wdvv.hpp"

#include "gwcp3/linalg.hpp"

#include <doctest.h>

using namespace gwcp3;

TEST_CASE("pairing matrix is its own inverse under index reversal") {
    for (int i = 0; i <= 3; ++i) {
        CHECK(pairing(i, dual_index(i)) == 1);
        for (int j = 0; j <= 3; ++j) {
            CHECK(pairing(i, j) == pairing(j, i));
            int sum = 0;   // (g . g)_{ij} with the reversal convention
            for (int m = 0; m <= 3; ++m) sum += pairing(i, m) * pairing(dual_index(m), dual_index(j));
            CHECK(sum == (i == j ? 1 : 0));
        }
    }
    CHECK_THROWS_AS(pairing(4, 0), std::invalid_argument);
}

TEST_CASE("classical triple intersections") {
    CHECK(classical_triple(0, 0, 3) == 1);
    CHECK(classical_triple(1, 1, 1) == 1);
    CHECK(classical_triple(2, 2, 0) == 0);
    CHECK(classical_triple(0, 1, 2) == 1);
    CHECK_THROWS_AS(classical_triple(4, 0, 0), std::invalid_argument);
}

TEST_CASE("quantum third derivative shapes") {
    auto d = quantum_third_derivative(1, 1, 1, 2, 8, 0);
    REQUIRE_FALSE(d.zero);
    CHECK(d.factor == Rational(8));   // n^3
    CHECK(d.a == 8);
    CHECK(d.b == 0);

    CHECK(quantum_third_derivative(0, 2, 3, 3, 4, 4).zero);  // t0 kills the quantum part

    auto s = quantum_third_derivative(2, 2, 3, 1, 2, 0);     // shifts to (4,1): 4 != 4+2
    CHECK(s.zero);
    auto v = quantum_third_derivative(2, 2, 3, 1, 0, 0);     // shifts to (2,1): valid at n=1
    REQUIRE_FALSE(v.zero);
    CHECK(v.factor == Rational(1));
    CHECK(v.a == 2);
    CHECK(v.b == 1);
}

TEST_CASE("degree-1 system has a one-dimensional solution space") {
    GWTable t;
    auto rows = wdvv_equations_for_degree(t, 1);
    auto res = eliminate(rows, 3);
    CHECK(res.consistent);
    CHECK(res.rank == 2);   // kernel dimension exactly 1; the seed pins it
}

TEST_CASE("solve_genus0 reproduces the reference values") {
    GWTable t;
    solve_genus0(t, 4);
    CHECK(t.get(0, 1, 0, 2) == Rational(1));
    CHECK(t.get(0, 1, 4, 0) == Rational(2));
    CHECK(t.get(0, 2, 8, 0) == Rational(92));
    CHECK(t.get(0, 2, 0, 4) == Rational(0));
    CHECK(t.get(0, 3, 12, 0) == Rational(80160));
    CHECK(t.get(0, 4, 16, 0) == Rational(383306880));
    CHECK(t.find(GWKey{0, 1, 0, 2})->prov == Provenance::seed);
    CHECK(t.find(GWKey{0, 2, 8, 0})->prov == Provenance::wdvv_solved);
    CHECK(t.max_complete_degree(0) == 4);
}

TEST_CASE("wdvv residual is exactly zero on solved degrees") {
    GWTable t;
    solve_genus0(t, 3);
    for (int n = 1; n <= 3; ++n) CHECK(wdvv_residual(t, n).is_zero());
}

TEST_CASE("residual detects a perturbed cell") {
    GWTable t;
    solve_genus0(t, 2);
    GWTable broken;
    for (const auto& [key, entry] : t.entries()) {
        Rational v = entry.value;
        if (key == GWKey{0, 1, 2, 1}) v += Rational(1);
        broken.put(key, v, entry.prov);
    }
    CHECK_FALSE(wdvv_residual(broken, 2).is_zero());
}

TEST_CASE("worker count does not change the table") {
    GWTable seq, par;
    solve_genus0(seq, 3, 1);
    solve_genus0(par, 3, 8);
    REQUIRE(seq.entries().size() == par.entries().size());
    for (const auto& [key, entry] : seq.entries())
        CHECK(par.find(key)->value == entry.value);
}
