#pragma once

#include "gwcp3/table.hpp"

#include <string>
#include <vector>

namespace gwcp3 {

enum class CountStatus { ok, non_integral, negative };

std::string to_string(CountStatus s);

/// Count of elliptic space curves of degree n through a lines and b points:
/// N1_ab + (2n-1) N0_ab / 12. Anomalies are reported via status, never thrown.
struct CurveCount {
    int degree = 0;
    int a = 0;
    int b = 0;
    Rational raw;         // the exact rational before the integrality check
    Int count;            // meaningful when status != non_integral
    CountStatus status = CountStatus::ok;
};

CurveCount elliptic_count(const GWTable& table, int n, int a, int b);

/// Keys of genus-0 cells through max_degree whose value is not a
/// non-negative integer. Empty on a healthy table.
std::vector<GWKey> genus0_integrality_report(const GWTable& table, int max_degree);

/// Degree 1-3 expectations: no elliptic curves in degrees 1 and 2, and the
/// degree-3 counts 0,0,0,1,14,150,1500 across b = 6..0.
struct SanityIssue {
    int degree;
    int a;
    int b;
    std::string what;
};

std::vector<SanityIssue> low_degree_sanity(const GWTable& table);

}  // namespace gwcp3
