#pragma once

#include "gwcp3/table.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gwcp3 {

/// Per-evaluation decomposition of a relation into its term families; the
/// sum of contributions reproduces the evaluation exactly.
///
/// Relation A (solves cell (a,b), a >= 2, via 3 N1_ab = sum of):
///   A1  4n N1(a-2,b+1)
///   A2  -1/4 n^2 N0(a,b)
///   A3  1/6 n^3 (3-n) N0(a-2,b+1)
///   A4  -2 sum over a-2 = a1+a2, b+1 = b1+b2 of N1 N0 terms
///   A5  sum over a = a1+a2, b = b1+b2 of N1 N0 terms
///   A6  1/12 sum over a = a1+a2, b = b1+b2 of N0 N0 terms
///   A7  1/2 triple sum over a = a1+a2+a3, b = b1+b2+b3 of N1 N0 N0 terms
/// Relation B (solves cell (a,b), b >= 2, via 0 = N1_ab + sum of):
///   B1  1/24 n(2n-1) N0(a+2,b-1)
///   B2  1/48 N0(a+4,b-2)
///   B3  sum over a+2 = a1+a2, b-1 = b1+b2 of N1 N0 terms
///   B4  -1/12 sum over a+4 = a1+a2, b-2 = b1+b2 of N1 N0 terms
///   B5  -1/48 sum over a+4 = a1+a2, b-2 = b1+b2 of N0 N0 terms
///   B6  -1/12 triple sum over a+4, b-2 of N1 N0 N0 terms
/// Every index split also splits the degree with all parts >= 1, and each
/// factor is dimension-gated.
struct TermLedger {
    std::vector<std::pair<std::string, Rational>> terms;
    Rational total() const;
    const Rational& at(const std::string& label) const;
};

/// Test hooks: flip_term negates one labelled term family; a3_linear
/// replaces the (3-n) factor of A3 by alpha + beta*n.
struct RelationTweaks {
    std::optional<std::string> flip_term;
    std::optional<std::pair<int, int>> a3_linear;
};

TermLedger relation_a_terms(const GWTable& table, int n, int a, int b,
                            const RelationTweaks& tweaks = {});
TermLedger relation_b_terms(const GWTable& table, int n, int a, int b,
                            const RelationTweaks& tweaks = {});

/// Evaluates relation A at (n; a, b) (requires a >= 2 and 4n = a + 2b) and
/// returns the implied N1_ab. Dependencies must already be in the table.
Rational relation_a_solve(const GWTable& table, int n, int a, int b,
                          const RelationTweaks& tweaks = {});

/// Evaluates relation B at (n; a, b) (requires b >= 2 and 4n = a + 2b).
Rational relation_b_solve(const GWTable& table, int n, int a, int b,
                          const RelationTweaks& tweaks = {});

/// Determines every genus-1 cell through max_degree: per degree, relation B
/// pins (0, 2n), then relation A walks a = 2, 4, ..., 4n. Genus 0 must be
/// solved through max_degree.
void solve_genus1(GWTable& table, int max_degree, const RelationTweaks& tweaks = {});

struct CrossCheckRow {
    int a;
    int b;
    Rational rel_a;
    Rational rel_b;
    Rational difference;
};

/// Independent evaluation of both relations on every cell of degree n with
/// a >= 2 and b >= 2 (report-only; the contract is zero differences).
std::vector<CrossCheckRow> cross_check(const GWTable& table, int n, int workers = 1);

/// Coefficient of t1 in the classical genus-1 potential: -c2(CP^3)/24 with
/// c2 = 6, i.e. -1/4.
Rational f1_linear_coefficient();

/// Diagnostic dump, one `label = num/den` line per term, deterministic order.
void dump_ledger(std::ostream& out, const std::string& heading, const TermLedger& ledger);

}  // namespace gwcp3
