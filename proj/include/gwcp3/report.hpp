#pragma once

#include "gwcp3/counts.hpp"
#include "gwcp3/table.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace gwcp3 {

/// Solves genus 0 then genus 1 through max_degree.
GWTable compute_table(int max_degree, int workers = 1);

struct GoldenMismatch {
    int degree;
    int a;
    int b;
    std::string column;   // "N0", "N1" or "count"
    std::string expected;
    std::string actual;
};

/// Cell-by-cell diff of a computed table against the embedded reference,
/// degrees 1..min(max_degree, 5), all three columns.
std::vector<GoldenMismatch> verify_against_golden(const GWTable& table, int max_degree);

/// Combined three-column table (N0, N1, count) per cell.
void write_combined_csv(std::ostream& out, const GWTable& table, int max_degree);
void write_combined_json(std::ostream& out, const GWTable& table, int max_degree);
/// Markdown in the reference table's layout: degree blocks, (a,b) rows,
/// mixed-number rendering for the elliptic column.
void write_combined_markdown(std::ostream& out, const GWTable& table, int max_degree);

}  // namespace gwcp3
