#pragma once

#include "gwcp3/rational.hpp"

#include <stdexcept>
#include <vector>

namespace gwcp3 {

/// One linear equation sum_j coef[j] * x[j] + constant = 0.
struct LinearRow {
    std::vector<Rational> coef;
    Rational constant;
};

struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exact Gauss-Jordan elimination result.
struct Elimination {
    int rank = 0;
    std::vector<Rational> solution;   // meaningful when rank == unknowns
    bool consistent = true;
    int bad_row = -1;                 // index of an inconsistent row, if any
};

/// Reduces rows in place (first nonzero pivot, deterministic order) and
/// back-substitutes. Does not throw; callers inspect rank/consistency.
Elimination eliminate(std::vector<LinearRow> rows, std::size_t unknowns);

/// Solves a square-rank system, requiring full rank and global consistency;
/// throws SolverError otherwise (message includes what failed).
std::vector<Rational> solve_full_rank(std::vector<LinearRow> rows, std::size_t unknowns,
                                      const std::string& context);

}  // namespace gwcp3
