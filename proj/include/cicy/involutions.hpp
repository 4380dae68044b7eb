#pragma once

#include "cicy/config.hpp"

#include <vector>

namespace cicy {

// Disjoint pairs of equal-dimension factors exchanged by C involutions.
// Pairs are stored as (r, s) with r < s, sorted.
struct CCombination {
  std::vector<RowPair> pairs;

  int size() const noexcept { return static_cast<int>(pairs.size()); }
  bool contains_row(int r) const;

  friend bool operator==(const CCombination&, const CCombination&) = default;
  friend auto operator<=>(const CCombination&, const CCombination&) = default;
};

// Rows carrying a B involution; sorted, non-empty, odd-dimensional.
struct BCombination {
  std::vector<int> rows;

  friend bool operator==(const BCombination&, const BCombination&) = default;
  friend auto operator<=>(const BCombination&, const BCombination&) = default;
};

enum class RowLabel { A, B, C };

// Rows outside c and b carry an A involution.
struct InvolutionAssignment {
  CCombination c;
  BCombination b;

  RowLabel label(int row) const;

  friend bool operator==(const InvolutionAssignment&, const InvolutionAssignment&) = default;
};

std::vector<CCombination> enumerate_c_combinations(const ConfigurationMatrix& cfg);

// Parity rule for a set of B rows: split the columns touched by the rows into
// classes of identical (whole) columns; a class of odd size whose degrees
// summed over the B rows are odd makes the combination inconsistent.
bool b_admissible(const ConfigurationMatrix& cfg, const CCombination& c, const std::vector<int>& rows);

std::vector<BCombination> enumerate_b_combinations(const ConfigurationMatrix& cfg, const CCombination& c);

std::vector<InvolutionAssignment> enumerate_free_assignments(const ConfigurationMatrix& cfg);

}  // namespace cicy
