#include "gwcp3/report.hpp"

#include "gwcp3/elliptic.hpp"
#include "gwcp3/wdvv.hpp"

#include <nlohmann/json.hpp>

#include <ostream>

namespace gwcp3 {

GWTable compute_table(int max_degree, int workers) {
    GWTable table;
    solve_genus0(table, max_degree, workers);
    solve_genus1(table, max_degree);
    return table;
}

std::vector<GoldenMismatch> verify_against_golden(const GWTable& table, int max_degree) {
    std::vector<GoldenMismatch> diffs;
    int cap = std::min(max_degree, kGoldenMaxDegree);
    for (const auto& row : golden_rows()) {
        if (row.degree > cap) continue;
        Rational n0 = table.get(0, row.degree, row.a, row.b);
        Rational n1 = table.get(1, row.degree, row.a, row.b);
        auto c = elliptic_count(table, row.degree, row.a, row.b);
        Rational want0(row.n0);
        Rational want1(Int(row.n1_num), Int(row.n1_den));
        Rational wantc(row.count);
        if (!(n0 == want0))
            diffs.push_back({row.degree, row.a, row.b, "N0", want0.str(), n0.str()});
        if (!(n1 == want1))
            diffs.push_back({row.degree, row.a, row.b, "N1", want1.str(), n1.str()});
        if (!(c.raw == wantc))
            diffs.push_back({row.degree, row.a, row.b, "count", wantc.str(), c.raw.str()});
    }
    return diffs;
}

namespace {

// Reference-table row order inside a degree block: ascending a.
std::vector<std::pair<int, int>> block_cells(int n) {
    auto cells = GWTable::cells_for_degree(0, n);
    return {cells.rbegin(), cells.rend()};
}

}  // namespace

void write_combined_csv(std::ostream& out, const GWTable& table, int max_degree) {
    out << "degree,a,b,n0,n1,count,status\n";
    for (int n = 1; n <= max_degree; ++n) {
        for (auto [a, b] : block_cells(n)) {
            auto c = elliptic_count(table, n, a, b);
            out << n << "," << a << "," << b << "," << table.get(0, n, a, b).str() << ","
                << table.get(1, n, a, b).str() << "," << c.raw.str() << ","
                << to_string(c.status) << "\n";
        }
    }
}

void write_combined_json(std::ostream& out, const GWTable& table, int max_degree) {
    nlohmann::json rows = nlohmann::json::array();
    for (int n = 1; n <= max_degree; ++n) {
        for (auto [a, b] : block_cells(n)) {
            auto c = elliptic_count(table, n, a, b);
            Rational n1 = table.get(1, n, a, b);
            rows.push_back({{"degree", n},
                            {"a", a},
                            {"b", b},
                            {"n0", table.get(0, n, a, b).str()},
                            {"n1_num", n1.numerator().str()},
                            {"n1_den", n1.denominator().str()},
                            {"count", c.raw.str()},
                            {"status", to_string(c.status)}});
        }
    }
    out << rows.dump(2) << "\n";
}

namespace {

// -36 3/4 style for non-integers; plain integer otherwise.
std::string mixed_number(const Rational& v) {
    if (v.is_integer()) return v.numerator().str();
    Int num = v.numerator(), den = v.denominator();
    Int whole = num / den;        // truncates toward zero
    Int rem = num - whole * den;  // same sign as num
    if (whole == 0) return v.str();
    if (rem < 0) rem = -rem;
    return whole.str() + " " + rem.str() + "/" + den.str();
}

}  // namespace

void write_combined_markdown(std::ostream& out, const GWTable& table, int max_degree) {
    out << "| n | (a,b) | N0 | N1 | count |\n";
    out << "|---|-------|----|----|-------|\n";
    for (int n = 1; n <= max_degree; ++n) {
        bool first = true;
        for (auto [a, b] : block_cells(n)) {
            auto c = elliptic_count(table, n, a, b);
            out << "| " << (first ? std::to_string(n) : std::string()) << " | (" << a << "," << b
                << ") | " << table.get(0, n, a, b).str() << " | "
                << mixed_number(table.get(1, n, a, b)) << " | " << c.raw.str() << " |\n";
            first = false;
        }
    }
}

}  // namespace gwcp3
