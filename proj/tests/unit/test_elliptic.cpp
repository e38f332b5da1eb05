#include "gwcp3/elliptic.hpp"

#include "gwcp3/wdvv.hpp"

#include <doctest.h>

#include <sstream>

using namespace gwcp3;

namespace {

const GWTable& solved(int max_degree = 5) {
    static GWTable t = [] {
        GWTable x;
        solve_genus0(x, 6);
        solve_genus1(x, 6);
        return x;
    }();
    REQUIRE(t.max_complete_degree(1) >= max_degree);
    return t;
}

Rational frac(long long num, long long den) { return Rational(Int(num), Int(den)); }

}  // namespace

TEST_CASE("base case: only the two standalone terms survive at degree 1") {
    GWTable t;
    solve_genus0(t, 1);
    auto ledger = relation_b_terms(t, 1, 0, 2);
    CHECK(ledger.at("B1") == frac(1, 24));   // 1/24 * 1 * N0(2,1)
    CHECK(ledger.at("B2") == frac(1, 24));   // 1/48 * N0(4,0) = 2/48
    for (const char* label : {"B3", "B4", "B5", "B6"})
        CHECK(ledger.at(label).is_zero());   // no degree splittings at n = 1
    CHECK(relation_b_solve(t, 1, 0, 2) == frac(-1, 12));
}

TEST_CASE("degree 1 relation A reduces to the three standalone terms") {
    GWTable t;
    solve_genus0(t, 1);
    t.put(GWKey{1, 1, 0, 2}, relation_b_solve(t, 1, 0, 2), Provenance::relation_b);
    auto ledger = relation_a_terms(t, 1, 2, 1);
    for (const char* label : {"A4", "A5", "A6", "A7"})
        CHECK(ledger.at(label).is_zero());   // no degree splittings with both parts >= 1
    CHECK(ledger.total() == ledger.at("A1") + ledger.at("A2") + ledger.at("A3"));
    CHECK(ledger.total() / Rational(3) == Rational(Int(-1), Int(12)));
}

TEST_CASE("relation gates") {
    const auto& t = solved();
    CHECK_THROWS_AS(relation_a_terms(t, 1, 0, 2, {}), std::invalid_argument);  // a < 2
    CHECK_THROWS_AS(relation_b_terms(t, 1, 4, 0, {}), std::invalid_argument);  // b < 2
    CHECK_THROWS_AS(relation_a_terms(t, 2, 4, 1, {}), std::invalid_argument);  // gate
}

TEST_CASE("relation A reproduces reference cells") {
    const auto& t = solved();
    CHECK(relation_a_solve(t, 3, 12, 0) == Rational(-31900));
    CHECK(relation_a_solve(t, 2, 4, 2) == Rational(-1));
    CHECK(relation_a_solve(t, 2, 2, 3) == frac(-1, 4));
    CHECK(relation_a_solve(t, 5, 20, 0) == Rational(Int("-1984020394752")));
}

TEST_CASE("relation B reproduces reference cells") {
    const auto& t = solved();
    CHECK(relation_b_solve(t, 3, 0, 6) == frac(-5, 12));
    CHECK(relation_b_solve(t, 5, 0, 10) == frac(-147, 4));
    CHECK(relation_b_solve(t, 2, 0, 4) == Rational(0));
    CHECK(relation_b_solve(t, 4, 4, 6) == Rational(-248));  // b >= 2 works off the a = 0 axis too
}

TEST_CASE("solver fills every cell with the right provenance") {
    const auto& t = solved();
    CHECK(t.get(1, 4, 16, 0) == Rational(Int("-170763640")));
    CHECK(t.get(1, 2, 0, 4) == Rational(0));
    CHECK(t.find(GWKey{1, 3, 0, 6})->prov == Provenance::relation_b);
    CHECK(t.find(GWKey{1, 3, 6, 3})->prov == Provenance::relation_a);
}

TEST_CASE("ledger sums to the evaluation exactly") {
    const auto& t = solved();
    auto la = relation_a_terms(t, 4, 10, 3);
    CHECK(la.total() / Rational(3) == t.get(1, 4, 10, 3));
    auto lb = relation_b_terms(t, 4, 2, 7);
    CHECK(-lb.total() == t.get(1, 4, 2, 7));
    CHECK(la.terms.size() == 7);
    CHECK(lb.terms.size() == 6);
}

TEST_CASE("relation evaluators are pure") {
    const auto& t = solved();
    auto l1 = relation_a_terms(t, 3, 8, 2);
    auto l2 = relation_a_terms(t, 3, 8, 2);
    REQUIRE(l1.terms.size() == l2.terms.size());
    for (std::size_t i = 0; i < l1.terms.size(); ++i) {
        CHECK(l1.terms[i].first == l2.terms[i].first);
        CHECK(l1.terms[i].second == l2.terms[i].second);
    }
}

TEST_CASE("cross-check overlap") {
    const auto& t = solved();
    CHECK(cross_check(t, 1).empty());   // no cell of degree 1 has a >= 2 and b >= 2
    auto rows2 = cross_check(t, 2);
    REQUIRE(rows2.size() == 2);         // (4,2) and (2,3)
    for (const auto& r : rows2) CHECK(r.difference.is_zero());
    auto rows6 = cross_check(t, 6);
    REQUIRE(rows6.size() == 10);
    for (const auto& r : rows6) CHECK(r.difference.is_zero());
    auto par = cross_check(t, 6, 8);
    for (std::size_t i = 0; i < rows6.size(); ++i)
        CHECK(par[i].difference == rows6[i].difference);
}

TEST_CASE("legacy readings of the A3 factor fail against the reference") {
    const auto& t = solved();
    // (3 - n) and (n + 1) coincide at n = 1; only (3 - n) survives degree 2.
    RelationTweaks plus_one{std::nullopt, std::make_pair(1, 1)};
    CHECK(relation_a_solve(t, 1, 2, 1, plus_one) == t.get(1, 1, 2, 1));
    CHECK(relation_a_solve(t, 2, 4, 2, plus_one) != t.get(1, 2, 4, 2));
    RelationTweaks minus_three{std::nullopt, std::make_pair(-3, 1)};
    CHECK(relation_a_solve(t, 1, 2, 1, minus_three) != t.get(1, 1, 2, 1));
}

TEST_CASE("degree-6 anchors agree with an independent exact implementation") {
    const auto& t = solved(6);
    CHECK(t.get(0, 6, 24, 0) == Rational(Int("244274488980962304")));
    CHECK(t.get(1, 6, 24, 0) == Rational(Int("4885850743278208")));
    CHECK(t.get(1, 6, 0, 12) == Rational(Int(1496), Int(3)));
    CHECK(t.get(1, 6, 12, 6) == Rational(Int("-2789164576")));
    CHECK(t.get(1, 6, 2, 11) == Rational(Int(-30734), Int(3)));
}

TEST_CASE("every stored cell is reproduced by its recorded provenance") {
    const auto& t = solved();
    for (const auto& [key, entry] : t.entries()) {
        if (key.genus != 1) continue;
        Rational again = entry.prov == Provenance::relation_b
                             ? relation_b_solve(t, key.degree, key.a, key.b)
                             : relation_a_solve(t, key.degree, key.a, key.b);
        CHECK(again == entry.value);
    }
}

TEST_CASE("classical genus-1 coefficient") {
    CHECK(f1_linear_coefficient() == Rational(Int(-1), Int(4)));
    CHECK(Rational(Int(-6), Int(24)) == f1_linear_coefficient());
}

TEST_CASE("ledger dump format") {
    GWTable t;
    solve_genus0(t, 1);
    std::ostringstream out;
    dump_ledger(out, "relation B at degree 1 cell (0,2)", relation_b_terms(t, 1, 0, 2));
    CHECK(out.str() == "relation B at degree 1 cell (0,2)\n"
                       "  B1 = 1/24\n  B2 = 1/24\n  B3 = 0\n  B4 = 0\n  B5 = 0\n  B6 = 0\n");
}
