#include "gwcp3/elliptic.hpp"

#include "gwcp3/combinatorics.hpp"

#include <algorithm>
#include <ostream>
#include <thread>

namespace gwcp3 {

Rational TermLedger::total() const {
    Rational sum(0);
    for (const auto& [label, value] : terms) sum += value;
    return sum;
}

const Rational& TermLedger::at(const std::string& label) const {
    for (const auto& [l, v] : terms)
        if (l == label) return v;
    throw std::invalid_argument("TermLedger: no term '" + label + "'");
}

namespace {

Rational rat(const Int& v) { return Rational(v); }

// Splittings (a1,b1)+(a2,b2) of (A,B) with factor i dimension-valid at
// degree ni; enumerated by the valid cells of degree n1.
struct PairSplit {
    int a1, b1, a2, b2;
};

std::vector<PairSplit> pair_splits(int A, int B, int n1, int n2) {
    std::vector<PairSplit> out;
    if (A < 0 || B < 0) return out;
    for (int b1 = 0; b1 <= 2 * n1; ++b1) {
        int a1 = 4 * n1 - 2 * b1;
        int a2 = A - a1, b2 = B - b1;
        if (a2 < 0 || b2 < 0 || !GWKey::dimension_ok(n2, a2, b2)) continue;
        out.push_back({a1, b1, a2, b2});
    }
    return out;
}

struct TripleSplit {
    int a1, b1, a2, b2, a3, b3;
};

std::vector<TripleSplit> triple_splits(int A, int B, int n1, int n2, int n3) {
    std::vector<TripleSplit> out;
    if (A < 0 || B < 0) return out;
    for (int b1 = 0; b1 <= 2 * n1; ++b1) {
        int a1 = 4 * n1 - 2 * b1;
        for (int b2 = 0; b2 <= 2 * n2; ++b2) {
            int a2 = 4 * n2 - 2 * b2;
            int a3 = A - a1 - a2, b3 = B - b1 - b2;
            if (a3 < 0 || b3 < 0 || !GWKey::dimension_ok(n3, a3, b3)) continue;
            out.push_back({a1, b1, a2, b2, a3, b3});
        }
    }
    return out;
}

void apply_tweak(TermLedger& ledger, const RelationTweaks& tweaks) {
    if (!tweaks.flip_term) return;
    for (auto& [label, value] : ledger.terms)
        if (label == *tweaks.flip_term) value = -value;
}

}  // namespace

TermLedger relation_a_terms(const GWTable& table, int n, int a, int b,
                            const RelationTweaks& tweaks) {
    if (a < 2) throw std::invalid_argument("relation A applies to cells with a >= 2");
    if (n < 1 || b < 0 || !GWKey::dimension_ok(n, a, b))
        throw std::invalid_argument("relation A: invalid cell");
    TermLedger ledger;
    auto N0 = [&](int nn, int aa, int bb) { return table.coeff_or_zero(0, nn, aa, bb); };
    auto N1 = [&](int nn, int aa, int bb) { return table.coeff_or_zero(1, nn, aa, bb); };

    ledger.terms.emplace_back("A1", Rational(4 * n) * N1(n, a - 2, b + 1));
    ledger.terms.emplace_back("A2", Rational(Int(-n) * n, Int(4)) * N0(n, a, b));
    // Legacy readings of the linear factor (alpha + beta n) are selectable
    // for the resolution tests; (3 - n) is the validated one.
    auto [alpha, beta] = tweaks.a3_linear.value_or(std::make_pair(3, -1));
    ledger.terms.emplace_back(
        "A3", Rational(Int(n) * n * n * (alpha + beta * n), Int(6)) * N0(n, a - 2, b + 1));

    Rational s4(0);
    for (int n1 = 1; n1 < n; ++n1) {
        int n2 = n - n1;
        for (auto t : pair_splits(a - 2, b + 1, n1, n2)) {
            Rational v1 = N1(n1, t.a1, t.b1);
            if (v1.is_zero()) continue;
            Rational v2 = N0(n2, t.a2, t.b2);
            if (v2.is_zero()) continue;
            Int w = Int(n2) * n2 * (n - 3 * n1) * binom(a - 2, t.a1) *
                    (Int(n1) * binom(b, t.b1) + Int(n2) * binom(b, t.b1 - 1));
            s4 += rat(w) * v1 * v2;
        }
    }
    ledger.terms.emplace_back("A4", Rational(-2) * s4);

    Rational s5(0);
    for (int n1 = 1; n1 < n; ++n1) {
        int n2 = n - n1;
        for (auto t : pair_splits(a, b, n1, n2)) {
            Rational v1 = N1(n1, t.a1, t.b1);
            if (v1.is_zero()) continue;
            Rational v2 = N0(n2, t.a2, t.b2);
            if (v2.is_zero()) continue;
            Int w = (Int(n1) * n2 * (n + 3 * n1) * binom(a - 2, t.a1) +
                     Int(n2) * n2 * (3 * n1 - n) * binom(a - 2, t.a1 - 1) -
                     Int(6) * n2 * n2 * n2 * binom(a - 2, t.a1 - 2)) *
                    binom(b, t.b1);
            s5 += rat(w) * v1 * v2;
        }
    }
    ledger.terms.emplace_back("A5", s5);

    // N0 x N0 family; the inner brace coefficients are the empirically
    // validated reading (see tests: golden degrees 1-5 plus cross-relation
    // agreement through degree 6 pin them).
    Rational s6(0);
    for (int n1 = 1; n1 < n; ++n1) {
        int n2 = n - n1;
        for (auto t : pair_splits(a, b, n1, n2)) {
            Rational v1 = N0(n1, t.a1, t.b1);
            if (v1.is_zero()) continue;
            Rational v2 = N0(n2, t.a2, t.b2);
            if (v2.is_zero()) continue;
            Int w = Int(n1) * n2 * n2 *
                    (Int(3) * n1 * n1 * (n1 - 1) * binom(a - 2, t.a1) +
                     Int(n1) * n2 * (2 * n1 - n2 + 3) * binom(a - 2, t.a1 - 1) +
                     Int(n2) * n2 * (6 - n) * binom(a - 2, t.a1 - 2)) *
                    binom(b, t.b1);
            s6 += rat(w) * v1 * v2;
        }
    }
    ledger.terms.emplace_back("A6", Rational(Int(1), Int(12)) * s6);

    Rational s7(0);
    for (int n1 = 1; n1 <= n - 2; ++n1) {
        for (int n2 = 1; n2 <= n - n1 - 1; ++n2) {
            int n3 = n - n1 - n2;
            for (auto t : triple_splits(a, b, n1, n2, n3)) {
                Rational v1 = N1(n1, t.a1, t.b1);
                if (v1.is_zero()) continue;
                Rational v2 = N0(n2, t.a2, t.b2);
                if (v2.is_zero()) continue;
                Rational v3 = N0(n3, t.a3, t.b3);
                if (v3.is_zero()) continue;
                Int w = (Int(2) * n1 * n2 * n2 * n2 * n3 * (n + 3 * n1 - 3 * n2) *
                             multinom(a - 2, t.a2, t.a3 - 2) -
                         Int(6) * n2 * n2 * n2 * Int(n3) * n3 * n3 * multinom(a - 2, t.a2, t.a3) +
                         Int(n2) * n2 * Int(n3) * n3 * (3 * n1 - n) *
                             (Int(n1) * multinom(a - 2, t.a2 - 1, t.a3 - 1) +
                              Int(n2) * multinom(a - 2, t.a2, t.a3 - 1) +
                              Int(n3) * multinom(a - 2, t.a2 - 1, t.a3))) *
                        multinom(b, t.b2, t.b3);
                s7 += rat(w) * v1 * v2 * v3;
            }
        }
    }
    ledger.terms.emplace_back("A7", Rational(Int(1), Int(2)) * s7);

    apply_tweak(ledger, tweaks);
    return ledger;
}

TermLedger relation_b_terms(const GWTable& table, int n, int a, int b,
                            const RelationTweaks& tweaks) {
    if (b < 2) throw std::invalid_argument("relation B applies to cells with b >= 2");
    if (n < 1 || a < 0 || !GWKey::dimension_ok(n, a, b))
        throw std::invalid_argument("relation B: invalid cell");
    TermLedger ledger;
    auto N0 = [&](int nn, int aa, int bb) { return table.coeff_or_zero(0, nn, aa, bb); };
    auto N1 = [&](int nn, int aa, int bb) { return table.coeff_or_zero(1, nn, aa, bb); };

    ledger.terms.emplace_back("B1",
                              Rational(Int(n) * (2 * n - 1), Int(24)) * N0(n, a + 2, b - 1));
    ledger.terms.emplace_back("B2", Rational(Int(1), Int(48)) * N0(n, a + 4, b - 2));

    Rational s3(0);
    for (int n1 = 1; n1 < n; ++n1) {
        int n2 = n - n1;
        for (auto t : pair_splits(a + 2, b - 1, n1, n2)) {
            Rational v1 = N1(n1, t.a1, t.b1);
            if (v1.is_zero()) continue;
            Rational v2 = N0(n2, t.a2, t.b2);
            if (v2.is_zero()) continue;
            Rational w =
                rat(Int(n2) * (Int(n) * binom(a, t.a1) + Int(n2) * binom(a, t.a1 - 1)) *
                    binom(b - 2, t.b1 - 1)) -
                Rational(Int(1), Int(6)) *
                    rat((Int(n1) * (6 * n1 - n2) * binom(a, t.a1) +
                         Int(n2) * (16 * n1 - n2) * binom(a, t.a1 - 1) +
                         Int(6) * n2 * n2 * binom(a, t.a1 - 2)) *
                        binom(b - 2, t.b1));
            s3 += w * v1 * v2;
        }
    }
    ledger.terms.emplace_back("B3", s3);

    Rational s4(0);
    for (int n1 = 1; n1 < n; ++n1) {
        int n2 = n - n1;
        for (auto t : pair_splits(a + 4, b - 2, n1, n2)) {
            Rational v1 = N1(n1, t.a1, t.b1);
            if (v1.is_zero()) continue;
            Rational v2 = N0(n2, t.a2, t.b2);
            if (v2.is_zero()) continue;
            Int w = (Int(n1) * binom(a, t.a1) + Int(2 * n1 - 5 * n2) * binom(a, t.a1 - 1) +
                     Int(6) * n2 * binom(a, t.a1 - 2)) *
                    binom(b - 2, t.b1);
            s4 += rat(w) * v1 * v2;
        }
    }
    ledger.terms.emplace_back("B4", Rational(Int(-1), Int(12)) * s4);

    Rational s5(0);
    for (int n1 = 1; n1 < n; ++n1) {
        int n2 = n - n1;
        for (auto t : pair_splits(a + 4, b - 2, n1, n2)) {
            Rational v1 = N0(n1, t.a1, t.b1);
            if (v1.is_zero()) continue;
            Rational v2 = N0(n2, t.a2, t.b2);
            if (v2.is_zero()) continue;
            Int w = (Int(n1) * n1 * n1 * (n1 - 1) * binom(a, t.a1) +
                     Int(n1) * n1 * n2 * (2 * n1 - 2 * n2 + 1) * binom(a, t.a1 - 1) +
                     Int(n1) * n2 * n2 * (2 * n1 - 2 * n2 + 7) * binom(a, t.a1 - 2) +
                     Int(n2) * n2 * n2 * (2 * n1 + 5) * binom(a, t.a1 - 3) +
                     Int(n2) * n2 * n2 * n2 * binom(a, t.a1 - 4)) *
                    binom(b - 2, t.b1);
            s5 += rat(w) * v1 * v2;
        }
    }
    ledger.terms.emplace_back("B5", Rational(Int(-1), Int(48)) * s5);

    Rational s6(0);
    for (int n1 = 1; n1 <= n - 2; ++n1) {
        for (int n2 = 1; n2 <= n - n1 - 1; ++n2) {
            int n3 = n - n1 - n2;
            for (auto t : triple_splits(a + 4, b - 2, n1, n2, n3)) {
                Rational v1 = N1(n1, t.a1, t.b1);
                if (v1.is_zero()) continue;
                Rational v2 = N0(n2, t.a2, t.b2);
                if (v2.is_zero()) continue;
                Rational v3 = N0(n3, t.a3, t.b3);
                if (v3.is_zero()) continue;
                Int w = (Int(3) * n2 * n3 *
                             (Int(n2) * n2 * multinom(a, t.a2, t.a3 - 2) +
                              Int(n3) * n3 * multinom(a, t.a2 - 2, t.a3)) +
                         Int(n1) * (Int(n2) * n2 * n2 * multinom(a, t.a2, t.a3 - 4) +
                                    Int(n2) * n2 * (6 * n1 - n3) * multinom(a, t.a2 - 1, t.a3 - 3) -
                                    Int(7) * n2 * n3 * n3 * multinom(a, t.a2 - 2, t.a3 - 2) -
                                    Int(5) * n3 * n3 * n3 * multinom(a, t.a2 - 3, t.a3 - 1)) +
                         (Int(n2) * n2 * n2 * (n1 - 5 * n3) * multinom(a, t.a2, t.a3 - 3) +
                          Int(n2) * n2 * n3 * (5 * n1 - 7 * n3) * multinom(a, t.a2 - 1, t.a3 - 2) +
                          Int(n2) * n3 * n3 * (5 * n1 - n3) * multinom(a, t.a2 - 2, t.a3 - 1) +
                          Int(n3) * n3 * n3 * (n1 + n3) * multinom(a, t.a2 - 3, t.a3))) *
                        multinom(b - 2, t.b2, t.b3);
                s6 += rat(w) * v1 * v2 * v3;
            }
        }
    }
    ledger.terms.emplace_back("B6", Rational(Int(-1), Int(12)) * s6);

    apply_tweak(ledger, tweaks);
    return ledger;
}

Rational relation_a_solve(const GWTable& table, int n, int a, int b,
                          const RelationTweaks& tweaks) {
    return relation_a_terms(table, n, a, b, tweaks).total() / Rational(3);
}

Rational relation_b_solve(const GWTable& table, int n, int a, int b,
                          const RelationTweaks& tweaks) {
    return -relation_b_terms(table, n, a, b, tweaks).total();
}

void solve_genus1(GWTable& table, int max_degree, const RelationTweaks& tweaks) {
    if (max_degree < 1) throw std::invalid_argument("solve_genus1: max_degree must be >= 1");
    if (table.max_complete_degree(0) < max_degree)
        throw std::invalid_argument("solve_genus1: genus 0 must be solved first");
    for (int n = table.max_complete_degree(1) + 1; n <= max_degree; ++n) {
        table.put(GWKey{1, n, 0, 2 * n}, relation_b_solve(table, n, 0, 2 * n, tweaks),
                  Provenance::relation_b);
        for (int a = 2; a <= 4 * n; a += 2) {
            int b = 2 * n - a / 2;
            table.put(GWKey{1, n, a, b}, relation_a_solve(table, n, a, b, tweaks),
                      Provenance::relation_a);
        }
        table.mark_complete(1, n);
    }
}

std::vector<CrossCheckRow> cross_check(const GWTable& table, int n, int workers) {
    std::vector<std::pair<int, int>> overlap;
    for (auto [a, b] : GWTable::cells_for_degree(1, n))
        if (a >= 2 && b >= 2) overlap.emplace_back(a, b);
    std::vector<CrossCheckRow> rows(overlap.size());
    auto run = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            auto [a, b] = overlap[i];
            Rational va = relation_a_solve(table, n, a, b);
            Rational vb = relation_b_solve(table, n, a, b);
            rows[i] = CrossCheckRow{a, b, va, vb, va - vb};
        }
    };
    workers = std::max(1, workers);
    if (workers == 1 || rows.size() < 2) {
        run(0, rows.size());
    } else {
        std::vector<std::thread> pool;
        std::size_t chunk = (rows.size() + static_cast<std::size_t>(workers) - 1) /
                            static_cast<std::size_t>(workers);
        for (int w = 0; w < workers; ++w) {
            std::size_t begin = static_cast<std::size_t>(w) * chunk;
            std::size_t end = std::min(rows.size(), begin + chunk);
            if (begin >= end) break;
            pool.emplace_back(run, begin, end);
        }
        for (auto& th : pool) th.join();
    }
    return rows;
}

Rational f1_linear_coefficient() {
    const int c2 = 6;  // second Chern class of CP^3 evaluated on the hyperplane
    return Rational(Int(-c2), Int(24));
}

void dump_ledger(std::ostream& out, const std::string& heading, const TermLedger& ledger) {
    out << heading << "\n";
    for (const auto& [label, value] : ledger.terms)
        out << "  " << label << " = " << value.str() << "\n";
}

}  // namespace gwcp3
