#include "cicy/config.hpp"

#include "cicy/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace cicy {

ConfigurationMatrix::ConfigurationMatrix(DimVector dims, DegreeMatrix degrees)
    : dims_(std::move(dims)), degrees_(std::move(degrees)) {
  if (degrees_.rows() < 1 || degrees_.cols() < 1)
    throw PreconditionError("configuration needs at least one row and one column");
  if (dims_.size() != degrees_.rows())
    throw PreconditionError("dims has " + std::to_string(dims_.size()) + " entries but degree matrix has " +
                            std::to_string(degrees_.rows()) + " rows");
  if ((dims_.array() < 1).any()) throw PreconditionError("projective dimensions must be positive");
  if ((degrees_.array() < 0).any()) throw PreconditionError("degrees must be non-negative");
}

ConfigurationMatrix::ConfigurationMatrix(const std::vector<int>& dims, const std::vector<std::vector<int>>& rows)
    : ConfigurationMatrix(
          [&] {
            DimVector d(static_cast<Eigen::Index>(dims.size()));
            for (std::size_t i = 0; i < dims.size(); ++i) d(static_cast<Eigen::Index>(i)) = dims[i];
            return d;
          }(),
          [&] {
            const auto m = static_cast<Eigen::Index>(rows.size());
            const auto k = rows.empty() ? Eigen::Index{0} : static_cast<Eigen::Index>(rows.front().size());
            DegreeMatrix q(m, k);
            for (Eigen::Index r = 0; r < m; ++r) {
              const auto& row = rows[static_cast<std::size_t>(r)];
              if (static_cast<Eigen::Index>(row.size()) != k) throw PreconditionError("degree rows are not rectangular");
              for (Eigen::Index a = 0; a < k; ++a) q(r, a) = row[static_cast<std::size_t>(a)];
            }
            return q;
          }()) {}

ConfigurationMatrix ConfigurationMatrix::permute_rows(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != rows()) throw PreconditionError("row permutation has wrong length");
  DimVector d(rows());
  DegreeMatrix q(rows(), cols());
  for (int i = 0; i < rows(); ++i) {
    d(i) = dims_(perm[static_cast<std::size_t>(i)]);
    q.row(i) = degrees_.row(perm[static_cast<std::size_t>(i)]);
  }
  return {std::move(d), std::move(q)};
}

ConfigurationMatrix ConfigurationMatrix::permute_cols(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != cols()) throw PreconditionError("column permutation has wrong length");
  DegreeMatrix q(rows(), cols());
  for (int j = 0; j < cols(); ++j) q.col(j) = degrees_.col(perm[static_cast<std::size_t>(j)]);
  return {dims_, std::move(q)};
}

bool operator==(const ConfigurationMatrix& a, const ConfigurationMatrix& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && a.dims_ == b.dims_ && a.degrees_ == b.degrees_;
}

bool lex_less(const ConfigurationMatrix& a, const ConfigurationMatrix& b) {
  if (a.rows() != b.rows()) return a.rows() < b.rows();
  if (a.cols() != b.cols()) return a.cols() < b.cols();
  for (int r = 0; r < a.rows(); ++r)
    if (a.dim(r) != b.dim(r)) return a.dim(r) < b.dim(r);
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c)
      if (a(r, c) != b(r, c)) return a(r, c) < b(r, c);
  return false;
}

ValidationReport validate(const ConfigurationMatrix& cfg) {
  ValidationReport report;
  const int m = cfg.rows();
  const int k = cfg.cols();

  const int dim_sum = cfg.dims().sum();
  report.threefold_ok = (k == dim_sum - 3);
  if (!report.threefold_ok) {
    std::ostringstream os;
    os << "threefold condition fails: K = " << k << " but sum(n) - 3 = " << dim_sum - 3;
    report.messages.push_back(os.str());
  }

  report.chern_ok = true;
  for (int r = 0; r < m; ++r) {
    const int row_sum = cfg.degrees().row(r).sum();
    if (row_sum != cfg.dim(r) + 1) {
      report.chern_ok = false;
      std::ostringstream os;
      os << "first Chern class condition fails on row " << r + 1 << ": degree sum " << row_sum << " != n + 1 = "
         << cfg.dim(r) + 1;
      report.messages.push_back(os.str());
    }
  }

  for (int a = 0; a < k; ++a) {
    if ((cfg.degrees().col(a).array() == 0).all()) {
      report.degenerate_columns.push_back(a);
      report.messages.push_back("column " + std::to_string(a + 1) + " is identically zero");
    }
  }
  return report;
}

namespace {

// Search state for the lexicographically minimal row ordering. Columns are
// grouped by their values on the rows placed so far; group_rank is the sorted
// position of each column's group.
struct CanonState {
  std::vector<bool> used;
  std::vector<int> group_rank;
  std::vector<int> order;

  bool operator<(const CanonState& o) const {
    if (used != o.used) return used < o.used;
    return group_rank < o.group_rank;
  }
};

}  // namespace

// The key compared is, level by level, (n_r, row r of the column-sorted
// matrix). Row i of a column-sorted matrix depends only on rows 0..i, so the
// minimal key can be built one level at a time, keeping every partial
// ordering that ties for the minimum. States with the same used-row set and
// column grouping have identical futures and are merged.
ConfigurationMatrix canonical_form(const ConfigurationMatrix& cfg) {
  const int m = cfg.rows();
  const int k = cfg.cols();

  std::set<CanonState> frontier;
  frontier.insert(CanonState{std::vector<bool>(static_cast<std::size_t>(m), false),
                             std::vector<int>(static_cast<std::size_t>(k), 0), {}});

  std::vector<int> cols(static_cast<std::size_t>(k));
  for (int level = 0; level < m; ++level) {
    std::vector<int> best_key;
    std::set<CanonState> next;
    for (const auto& state : frontier) {
      for (int r = 0; r < m; ++r) {
        if (state.used[static_cast<std::size_t>(r)]) continue;
        std::iota(cols.begin(), cols.end(), 0);
        auto col_key = [&](int a) { return std::pair{state.group_rank[static_cast<std::size_t>(a)], cfg(r, a)}; };
        std::sort(cols.begin(), cols.end(), [&](int a, int b) { return col_key(a) < col_key(b); });

        std::vector<int> key;
        key.reserve(static_cast<std::size_t>(k) + 1);
        key.push_back(cfg.dim(r));
        for (int a : cols) key.push_back(cfg(r, a));

        if (!best_key.empty() && key > best_key) continue;
        if (best_key.empty() || key < best_key) {
          best_key = key;
          next.clear();
        }

        CanonState child;
        child.used = state.used;
        child.used[static_cast<std::size_t>(r)] = true;
        child.group_rank.assign(static_cast<std::size_t>(k), 0);
        int rank = 0;
        for (std::size_t i = 0; i < cols.size(); ++i) {
          if (i > 0 && col_key(cols[i]) != col_key(cols[i - 1])) ++rank;
          child.group_rank[static_cast<std::size_t>(cols[i])] = rank;
        }
        child.order = state.order;
        child.order.push_back(r);
        next.insert(std::move(child));
      }
    }
    frontier = std::move(next);
  }

  const CanonState& winner = *frontier.begin();
  std::vector<int> col_order(static_cast<std::size_t>(k));
  std::iota(col_order.begin(), col_order.end(), 0);
  std::stable_sort(col_order.begin(), col_order.end(), [&](int a, int b) {
    return winner.group_rank[static_cast<std::size_t>(a)] < winner.group_rank[static_cast<std::size_t>(b)];
  });
  return cfg.permute_rows(winner.order).permute_cols(col_order);
}

bool equivalent(const ConfigurationMatrix& a, const ConfigurationMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return canonical_form(a) == canonical_form(b);
}

std::vector<std::vector<int>> columns_of(const ConfigurationMatrix& cfg) {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(cfg.cols()));
  for (int a = 0; a < cfg.cols(); ++a) {
    auto& col = out[static_cast<std::size_t>(a)];
    col.resize(static_cast<std::size_t>(cfg.rows()));
    for (int r = 0; r < cfg.rows(); ++r) col[static_cast<std::size_t>(r)] = cfg(r, a);
  }
  return out;
}

bool invariant_under_row_swaps(const ConfigurationMatrix& cfg, const std::vector<RowPair>& pairs) {
  const int m = cfg.rows();
  std::vector<int> perm(static_cast<std::size_t>(m));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<bool> seen(static_cast<std::size_t>(m), false);
  for (const auto& [r, s] : pairs) {
    if (r < 0 || s < 0 || r >= m || s >= m) throw PreconditionError("row pair index out of range");
    if (r == s) throw PreconditionError("row pair must join two distinct rows");
    if (seen[static_cast<std::size_t>(r)] || seen[static_cast<std::size_t>(s)])
      throw PreconditionError("row pairs overlap");
    if (cfg.dim(r) != cfg.dim(s)) throw PreconditionError("paired rows have unequal dimensions");
    seen[static_cast<std::size_t>(r)] = seen[static_cast<std::size_t>(s)] = true;
    std::swap(perm[static_cast<std::size_t>(r)], perm[static_cast<std::size_t>(s)]);
  }

  auto original = columns_of(cfg);
  auto swapped = columns_of(cfg.permute_rows(perm));
  std::sort(original.begin(), original.end());
  std::sort(swapped.begin(), swapped.end());
  return original == swapped;
}

}  // namespace cicy
