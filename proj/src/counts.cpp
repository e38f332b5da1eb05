#include "gwcp3/counts.hpp"

namespace gwcp3 {

std::string to_string(CountStatus s) {
    switch (s) {
        case CountStatus::ok: return "OK";
        case CountStatus::non_integral: return "NON_INTEGRAL";
        case CountStatus::negative: return "NEGATIVE";
    }
    return "?";
}

CurveCount elliptic_count(const GWTable& table, int n, int a, int b) {
    CurveCount out;
    out.degree = n;
    out.a = a;
    out.b = b;
    Rational n0 = table.get(0, n, a, b);
    Rational n1 = table.get(1, n, a, b);
    out.raw = n1 + Rational(Int(2 * n - 1), Int(12)) * n0;
    if (!out.raw.is_integer()) {
        out.status = CountStatus::non_integral;
        return out;
    }
    out.count = out.raw.numerator();
    out.status = out.count < 0 ? CountStatus::negative : CountStatus::ok;
    return out;
}

std::vector<GWKey> genus0_integrality_report(const GWTable& table, int max_degree) {
    std::vector<GWKey> violations;
    for (int n = 1; n <= max_degree; ++n) {
        for (auto [a, b] : GWTable::cells_for_degree(0, n)) {
            Rational v = table.get(0, n, a, b);
            if (!v.is_integer() || v < Rational(0)) violations.push_back(GWKey{0, n, a, b});
        }
    }
    return violations;
}

std::vector<SanityIssue> low_degree_sanity(const GWTable& table) {
    std::vector<SanityIssue> issues;
    for (int n = 1; n <= 2; ++n) {
        for (auto [a, b] : GWTable::cells_for_degree(1, n)) {
            auto c = elliptic_count(table, n, a, b);
            if (c.status != CountStatus::ok || c.count != 0)
                issues.push_back({n, a, b, "expected count 0, got " + c.raw.str()});
        }
    }
    // degree-3 counts across b = 0..6 (all such curves are planar)
    const long long expected[] = {1500, 150, 14, 1, 0, 0, 0};
    for (int b = 0; b <= 6; ++b) {
        int a = 12 - 2 * b;
        auto c = elliptic_count(table, 3, a, b);
        if (c.status != CountStatus::ok || c.count != expected[b])
            issues.push_back({3, a, b,
                              "expected count " + std::to_string(expected[b]) + ", got " +
                                  c.raw.str()});
    }
    return issues;
}

}  // namespace gwcp3
