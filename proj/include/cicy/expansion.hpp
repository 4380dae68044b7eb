#pragma once

#include "cicy/config.hpp"

#include <cstddef>
#include <vector>

namespace cicy {

// Split a CP^1 row along `column`: the row's degrees become a = e_column and
// b = row - a on two new CP^1 rows tied together by a new bidegree-(1,1)
// equation.
struct ExpansionStep {
  int row = 0;
  int column = 0;

  friend bool operator==(const ExpansionStep&, const ExpansionStep&) = default;
};

// The two new rows replace `row` in place (a at `row`, b at `row + 1`) and
// the new column is inserted at position 0.
ConfigurationMatrix expand_row(const ConfigurationMatrix& cfg, const ExpansionStep& step);

// Every legal step on cfg, ordered by (row, column).
std::vector<ExpansionStep> legal_steps(const ConfigurationMatrix& cfg);

// Breadth-first expansion until the matrix has target_m rows. Each frontier
// is deduplicated by canonical form and capped at `limit` classes. Results are
// the first-found representatives, ordered by canonical form.
std::vector<ConfigurationMatrix> expansions_to_count(const ConfigurationMatrix& cfg, int target_m, std::size_t limit);

}  // namespace cicy
