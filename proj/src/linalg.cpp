#include "gwcp3/linalg.hpp"

namespace gwcp3 {

Elimination eliminate(std::vector<LinearRow> rows, std::size_t unknowns) {
    Elimination result;
    std::size_t r = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t c = 0; c < unknowns && r < rows.size(); ++c) {
        std::size_t pr = r;
        while (pr < rows.size() && rows[pr].coef[c].is_zero()) ++pr;
        if (pr == rows.size()) continue;
        std::swap(rows[r], rows[pr]);
        Rational inv = Rational(1) / rows[r].coef[c];
        for (auto& x : rows[r].coef) x *= inv;
        rows[r].constant *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i].coef[c].is_zero()) continue;
            Rational f = rows[i].coef[c];
            for (std::size_t j = c; j < unknowns; ++j)
                rows[i].coef[j] -= f * rows[r].coef[j];
            rows[i].constant -= f * rows[r].constant;
        }
        pivot_col.push_back(c);
        ++r;
    }
    result.rank = static_cast<int>(r);
    for (std::size_t i = r; i < rows.size(); ++i) {
        if (!rows[i].constant.is_zero()) {
            result.consistent = false;
            result.bad_row = static_cast<int>(i);
            break;
        }
    }
    if (result.consistent && r == unknowns) {
        result.solution.assign(unknowns, Rational(0));
        for (std::size_t i = 0; i < r; ++i)
            result.solution[pivot_col[i]] = -rows[i].constant;
    }
    return result;
}

std::vector<Rational> solve_full_rank(std::vector<LinearRow> rows, std::size_t unknowns,
                                      const std::string& context) {
    auto res = eliminate(std::move(rows), unknowns);
    if (!res.consistent)
        throw SolverError(context + ": inconsistent system (row " + std::to_string(res.bad_row) +
                          " reduces to 0 = nonzero)");
    if (res.rank != static_cast<int>(unknowns))
        throw SolverError(context + ": rank deficient (rank " + std::to_string(res.rank) + " of " +
                          std::to_string(unknowns) + " unknowns)");
    return res.solution;
}

}  // namespace gwcp3
