#include "gwcp3/wdvv.hpp"

#include "gwcp3/combinatorics.hpp"

#include <algorithm>
#include <array>
#include <thread>

namespace gwcp3 {

int pairing(int i, int j) {
    if (i < 0 || i > 3 || j < 0 || j > 3) throw std::invalid_argument("pairing: index out of range");
    return i + j == 3 ? 1 : 0;
}

int dual_index(int i) {
    if (i < 0 || i > 3) throw std::invalid_argument("dual_index: index out of range");
    return 3 - i;
}

int classical_triple(int i, int j, int k) {
    for (int x : {i, j, k})
        if (x < 0 || x > 3) throw std::invalid_argument("classical_triple: index out of range");
    return i + j + k == 3 ? 1 : 0;
}

namespace {

struct DerivShape {
    bool zero;
    int t1;  // number of divisor (t1) derivatives
    int da;  // number of t2 derivatives
    int db;  // number of t3 derivatives
};

DerivShape shape(int i, int j, int k) {
    DerivShape s{false, 0, 0, 0};
    for (int x : {i, j, k}) {
        if (x < 0 || x > 3) throw std::invalid_argument("derivative index out of range");
        if (x == 0) s.zero = true;
        if (x == 1) ++s.t1;
        if (x == 2) ++s.da;
        if (x == 3) ++s.db;
    }
    return s;
}

Rational int_pow(int base, int k) {
    Rational r(1);
    for (int i = 0; i < k; ++i) r *= Rational(base);
    return r;
}

}  // namespace

QuantumThirdDerivative quantum_third_derivative(int i, int j, int k, int n, int a, int b) {
    if (n < 1) throw std::invalid_argument("quantum_third_derivative: degree must be >= 1");
    auto s = shape(i, j, k);
    QuantumThirdDerivative out;
    if (s.zero) return out;
    int aa = a + s.da, bb = b + s.db;
    if (a < 0 || b < 0 || !GWKey::dimension_ok(n, aa, bb)) return out;
    out.zero = false;
    out.factor = int_pow(n, s.t1);
    out.a = aa;
    out.b = bb;
    return out;
}

namespace {

// Rows produced by one WDVV index tuple (i,j,k,l), all monomial targets.
void tuple_rows(const GWTable& table, int n, int i, int j, int k, int l,
                std::vector<LinearRow>& out) {
    const std::size_t unknowns = static_cast<std::size_t>(2 * n + 1);
    const std::array<std::array<int, 4>, 2> orders = {{{i, j, k, l}, {i, k, j, l}}};
    for (int a = 0; a <= 4 * n; ++a) {
        for (int b = 0; b <= 2 * n; ++b) {
            if (a + 2 * b > 4 * n) continue;
            LinearRow row;
            row.coef.assign(unknowns, Rational(0));
            bool nonzero = false;
            for (int side = 0; side < 2; ++side) {
                const auto& o = orders[static_cast<std::size_t>(side)];
                Rational sign(side == 0 ? 1 : -1);
                for (int m = 0; m <= 3; ++m) {
                    const std::array<int, 3> t1 = {o[0], o[1], m};
                    const std::array<int, 3> t2 = {3 - m, o[2], o[3]};
                    // classical x quantum: linear in the degree-n unknowns
                    auto linear_part = [&](const std::array<int, 3>& cl, const std::array<int, 3>& qu) {
                        if (!classical_triple(cl[0], cl[1], cl[2])) return;
                        auto qd = quantum_third_derivative(qu[0], qu[1], qu[2], n, a, b);
                        if (qd.zero) return;
                        row.coef[static_cast<std::size_t>(qd.b)] += sign * qd.factor;
                        nonzero = true;
                    };
                    linear_part(t1, t2);
                    linear_part(t2, t1);
                    // quantum x quantum: known products of lower degrees
                    auto s1 = shape(t1[0], t1[1], t1[2]);
                    auto s2 = shape(t2[0], t2[1], t2[2]);
                    if (s1.zero || s2.zero) continue;
                    for (int n1 = 1; n1 < n; ++n1) {
                        int n2 = n - n1;
                        for (int bc1 = 0; bc1 <= 2 * n1; ++bc1) {
                            int ac1 = 4 * n1 - 2 * bc1;
                            int a1 = ac1 - s1.da, b1 = bc1 - s1.db;
                            if (a1 < 0 || b1 < 0 || a1 > a || b1 > b) continue;
                            Rational v1 = table.coeff_or_zero(0, n1, ac1, bc1);
                            if (v1.is_zero()) continue;
                            int a2 = a - a1, b2 = b - b1;
                            int ac2 = a2 + s2.da, bc2 = b2 + s2.db;
                            if (!GWKey::dimension_ok(n2, ac2, bc2)) continue;
                            Rational v2 = table.coeff_or_zero(0, n2, ac2, bc2);
                            if (v2.is_zero()) continue;
                            row.constant += sign * int_pow(n1, s1.t1) * int_pow(n2, s2.t1) *
                                            Rational(binom(a, a1) * binom(b, b1)) * v1 * v2;
                            nonzero = true;
                        }
                    }
                }
            }
            if (nonzero && (!row.constant.is_zero() ||
                            std::any_of(row.coef.begin(), row.coef.end(),
                                        [](const Rational& x) { return !x.is_zero(); })))
                out.push_back(std::move(row));
        }
    }
}

std::vector<std::array<int, 4>> wdvv_tuples() {
    std::vector<std::array<int, 4>> tuples;
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; j <= 3; ++j)
            for (int k = j + 1; k <= 3; ++k)   // j == k is trivial, j <-> k negates
                for (int l = 0; l <= 3; ++l) tuples.push_back({i, j, k, l});
    return tuples;
}

}  // namespace

std::vector<LinearRow> wdvv_equations_for_degree(const GWTable& table, int n, int workers) {
    if (n < 1) throw std::invalid_argument("wdvv_equations_for_degree: degree must be >= 1");
    workers = std::max(1, workers);
    auto tuples = wdvv_tuples();
    std::vector<std::vector<LinearRow>> parts(tuples.size());
    auto run = [&](std::size_t begin, std::size_t end) {
        for (std::size_t t = begin; t < end; ++t)
            tuple_rows(table, n, tuples[t][0], tuples[t][1], tuples[t][2], tuples[t][3], parts[t]);
    };
    if (workers == 1) {
        run(0, tuples.size());
    } else {
        std::vector<std::thread> pool;
        std::size_t chunk = (tuples.size() + static_cast<std::size_t>(workers) - 1) /
                            static_cast<std::size_t>(workers);
        for (int w = 0; w < workers; ++w) {
            std::size_t begin = static_cast<std::size_t>(w) * chunk;
            std::size_t end = std::min(tuples.size(), begin + chunk);
            if (begin >= end) break;
            pool.emplace_back(run, begin, end);
        }
        for (auto& th : pool) th.join();
    }
    std::vector<LinearRow> rows;
    for (auto& p : parts)
        for (auto& r : p) rows.push_back(std::move(r));  // tuple order: deterministic
    return rows;
}

void solve_genus0(GWTable& table, int max_degree, int workers) {
    if (max_degree < 1) throw std::invalid_argument("solve_genus0: max_degree must be >= 1");
    for (int n = table.max_complete_degree(0) + 1; n <= max_degree; ++n) {
        auto rows = wdvv_equations_for_degree(table, n, workers);
        auto cells = GWTable::cells_for_degree(0, n);
        if (n == 1) {
            LinearRow seed;
            seed.coef.assign(cells.size(), Rational(0));
            seed.coef[2] = Rational(1);  // cell (0,2): one line through two points
            seed.constant = Rational(-1);
            rows.push_back(std::move(seed));
        }
        auto solution = solve_full_rank(std::move(rows), cells.size(),
                                        "WDVV degree " + std::to_string(n));
        for (std::size_t idx = 0; idx < cells.size(); ++idx) {
            auto [a, b] = cells[idx];
            Provenance prov = (n == 1 && a == 0 && b == 2) ? Provenance::seed
                                                           : Provenance::wdvv_solved;
            table.put(GWKey{0, n, a, b}, solution[idx], prov);
        }
        table.mark_complete(0, n);
    }
}

Rational wdvv_residual(const GWTable& table, int n, int workers) {
    auto rows = wdvv_equations_for_degree(table, n, workers);
    Rational max(0);
    for (const auto& row : rows) {
        Rational v = row.constant;
        for (std::size_t idx = 0; idx < row.coef.size(); ++idx) {
            if (row.coef[idx].is_zero()) continue;
            int b = static_cast<int>(idx);
            v += row.coef[idx] * table.coeff_or_zero(0, n, 4 * n - 2 * b, b);
        }
        if (v.abs() > max) max = v.abs();
    }
    return max;
}

}  // namespace gwcp3
