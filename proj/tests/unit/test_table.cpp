#include "gwcp3/table.hpp"

#include <doctest.h>

#include <cstdio>
#include <sstream>

using namespace gwcp3;

TEST_CASE("cells_for_degree") {
    CHECK(GWTable::cells_for_degree(0, 1) ==
          std::vector<std::pair<int, int>>{{4, 0}, {2, 1}, {0, 2}});
    CHECK(GWTable::cells_for_degree(1, 2) ==
          std::vector<std::pair<int, int>>{{8, 0}, {6, 1}, {4, 2}, {2, 3}, {0, 4}});
    CHECK(GWTable::cells_for_degree(0, 3).size() == 7);
    CHECK_THROWS_AS(GWTable::cells_for_degree(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(GWTable::cells_for_degree(2, 1), std::invalid_argument);
}

TEST_CASE("dimension gate and missing entries") {
    GWTable t;
    t.put(GWKey{0, 1, 0, 2}, Rational(1), Provenance::seed);
    CHECK(t.get(0, 1, 0, 2) == Rational(1));
    CHECK(t.get(0, 1, 1, 1) == Rational(0));      // 4*1 != 1 + 2
    CHECK(t.get(1, 3, 5, 1) == Rational(0));      // gate, no storage needed
    CHECK_THROWS_AS(t.get(0, 1, 2, 1), MissingEntry);
    CHECK_THROWS_AS(t.get(2, 1, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(t.get(0, 0, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(t.get(0, 1, -2, 3), std::invalid_argument);
    CHECK(t.coeff_or_zero(0, 1, -2, 3) == Rational(0));  // convolution lookups tolerate shifts
}

TEST_CASE("write-once semantics") {
    GWTable t;
    GWKey k{1, 2, 8, 0};
    t.put(k, Rational(-23), Provenance::relation_a);
    CHECK_NOTHROW(t.put(k, Rational(-23), Provenance::relation_b));  // identical value ok
    CHECK_THROWS_AS(t.put(k, Rational(-22), Provenance::relation_a), ConsistencyViolation);
    CHECK_THROWS_AS(t.put(GWKey{0, 1, 1, 1}, Rational(0), Provenance::seed),
                    std::invalid_argument);
}

TEST_CASE("golden table") {
    auto t = load_golden_table1();
    CHECK(golden_rows().size() == 35);
    int per_degree[6] = {0, 0, 0, 0, 0, 0};
    for (const auto& row : golden_rows()) ++per_degree[row.degree];
    CHECK(per_degree[1] == 3);
    CHECK(per_degree[2] == 5);
    CHECK(per_degree[3] == 7);
    CHECK(per_degree[4] == 9);
    CHECK(per_degree[5] == 11);
    CHECK(t.get(0, 5, 20, 0) == Rational(Int("6089786376960")));
    CHECK(t.get(1, 4, 16, 0) == Rational(Int("-170763640")));
    CHECK(t.get(0, 1, 0, 2) == Rational(1));
    CHECK(t.get(1, 1, 0, 2) == Rational(Int(-1), Int(12)));
    CHECK(t.max_complete_degree(0) == 5);
    CHECK(t.max_complete_degree(1) == 5);
}

TEST_CASE("save/load round trip") {
    auto t = load_golden_table1();
    std::string path = "gwcp3_table_roundtrip.tmp";
    t.save(path);
    auto u = GWTable::load(path);
    REQUIRE(u.entries().size() == t.entries().size());
    for (const auto& [key, entry] : t.entries()) {
        const auto* e = u.find(key);
        REQUIRE(e != nullptr);
        CHECK(e->value == entry.value);
    }
    std::remove(path.c_str());
}

TEST_CASE("malformed files carry line diagnostics") {
    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return GWTable::read_records(in, "test");
    };
    CHECK_THROWS_WITH_AS(parse(""), "test: empty file", MalformedFile);
    CHECK_THROWS_AS(parse("not a header\n"), MalformedFile);
    CHECK_THROWS_AS(parse("gwtable 1\n0 1 0 2 1\n"), MalformedFile);          // missing field
    CHECK_THROWS_AS(parse("gwtable 1\n0 1 1 1 1 SEED\n"), MalformedFile);     // bad key
    CHECK_THROWS_AS(parse("gwtable 1\n0 1 0 2 1 NOPE\n"), MalformedFile);     // bad provenance
    CHECK_THROWS_AS(parse("gwtable 1\n0 1 0 2 x/2 SEED\n"), MalformedFile);   // bad value
    try {
        parse("gwtable 1\n0 1 0 2 1 SEED\n0 1 0 2 1 SEED extra\n");
        FAIL("expected MalformedFile");
    } catch (const MalformedFile& e) {
        CHECK(std::string(e.what()).find("test:3") != std::string::npos);
    }
    CHECK_NOTHROW(parse("gwtable 1\n0 1 0 2 1 SEED\n\n1 1 0 2 -1/12 RELATION_B\n"));
}

TEST_CASE("csv and json exports") {
    GWTable t;
    t.put(GWKey{1, 1, 0, 2}, Rational(Int(-1), Int(12)), Provenance::relation_b);
    t.put(GWKey{0, 1, 0, 2}, Rational(1), Provenance::seed);
    std::ostringstream csv;
    t.write_csv(csv);
    CHECK(csv.str() == "genus,degree,a,b,value\n0,1,0,2,1\n1,1,0,2,-1/12\n");
    std::ostringstream json;
    t.write_json(json);
    CHECK(json.str().find("\"num\": \"-1\"") != std::string::npos);
    CHECK(json.str().find("\"den\": \"12\"") != std::string::npos);
    CHECK(json.str().find("\"provenance\": \"SEED\"") != std::string::npos);
}
