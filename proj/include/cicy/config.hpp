#pragma once

#include <Eigen/Core>

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace cicy {

using DimVector = Eigen::VectorXi;
using DegreeMatrix = Eigen::MatrixXi;

// A configuration matrix [n || q]: m projective factors CP^{n_r} and K
// hypersurfaces, q(r, a) being the degree of polynomial a in factor r.
// Construction checks only the structure (shape, n_r >= 1, q >= 0); the
// Calabi-Yau conditions are reported by validate().
class ConfigurationMatrix {
public:
  ConfigurationMatrix() = default;
  ConfigurationMatrix(DimVector dims, DegreeMatrix degrees);
  ConfigurationMatrix(const std::vector<int>& dims, const std::vector<std::vector<int>>& rows);
  // Brace literals would otherwise match both overloads above.
  ConfigurationMatrix(std::initializer_list<int> dims, std::initializer_list<std::initializer_list<int>> rows)
      : ConfigurationMatrix(std::vector<int>(dims), std::vector<std::vector<int>>(rows.begin(), rows.end())) {}

  const DimVector& dims() const noexcept { return dims_; }
  const DegreeMatrix& degrees() const noexcept { return degrees_; }

  int rows() const noexcept { return static_cast<int>(degrees_.rows()); }
  int cols() const noexcept { return static_cast<int>(degrees_.cols()); }
  int dim(int r) const { return dims_(r); }
  int operator()(int r, int a) const { return degrees_(r, a); }

  // Same matrix with rows reordered (row i of the result is row perm[i]).
  ConfigurationMatrix permute_rows(const std::vector<int>& perm) const;
  // Same matrix with columns reordered (column j of the result is column perm[j]).
  ConfigurationMatrix permute_cols(const std::vector<int>& perm) const;

  friend bool operator==(const ConfigurationMatrix& a, const ConfigurationMatrix& b);
  friend bool operator!=(const ConfigurationMatrix& a, const ConfigurationMatrix& b) { return !(a == b); }

private:
  DimVector dims_;
  DegreeMatrix degrees_;
};

// Total order: shape, then dims, then degrees row-major. Used for dedup keys.
bool lex_less(const ConfigurationMatrix& a, const ConfigurationMatrix& b);

struct ConfigLess {
  bool operator()(const ConfigurationMatrix& a, const ConfigurationMatrix& b) const { return lex_less(a, b); }
};

struct ValidationReport {
  bool threefold_ok = false;
  bool chern_ok = false;
  std::vector<int> degenerate_columns;
  std::vector<std::string> messages;

  bool ok() const noexcept { return threefold_ok && chern_ok && degenerate_columns.empty(); }
};

ValidationReport validate(const ConfigurationMatrix& cfg);

// Representative of the class under arbitrary row and column permutations.
// Rows end up ordered by dimension first; columns are lexicographically sorted.
ConfigurationMatrix canonical_form(const ConfigurationMatrix& cfg);

bool equivalent(const ConfigurationMatrix& a, const ConfigurationMatrix& b);

using RowPair = std::pair<int, int>;

// True iff exchanging the rows of every pair simultaneously leaves the
// multiset of columns unchanged. Pairs must be disjoint with equal dims.
bool invariant_under_row_swaps(const ConfigurationMatrix& cfg, const std::vector<RowPair>& pairs);

// Columns as vectors, in column order.
std::vector<std::vector<int>> columns_of(const ConfigurationMatrix& cfg);

}  // namespace cicy
