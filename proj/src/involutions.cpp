#include "cicy/involutions.hpp"

#include "cicy/errors.hpp"

#include <algorithm>
#include <map>

namespace cicy {

bool CCombination::contains_row(int r) const {
  return std::any_of(pairs.begin(), pairs.end(), [r](const RowPair& p) { return p.first == r || p.second == r; });
}

RowLabel InvolutionAssignment::label(int row) const {
  if (c.contains_row(row)) return RowLabel::C;
  if (std::binary_search(b.rows.begin(), b.rows.end(), row)) return RowLabel::B;
  return RowLabel::A;
}

namespace {

void extend_pairings(const ConfigurationMatrix& cfg, const std::vector<RowPair>& candidates, std::size_t next,
                     std::vector<bool>& used, std::vector<RowPair>& current, std::vector<CCombination>& out) {
  if (invariant_under_row_swaps(cfg, current)) out.push_back(CCombination{current});
  for (std::size_t i = next; i < candidates.size(); ++i) {
    const auto [r, s] = candidates[i];
    if (used[static_cast<std::size_t>(r)] || used[static_cast<std::size_t>(s)]) continue;
    used[static_cast<std::size_t>(r)] = used[static_cast<std::size_t>(s)] = true;
    current.push_back(candidates[i]);
    extend_pairings(cfg, candidates, i + 1, used, current, out);
    current.pop_back();
    used[static_cast<std::size_t>(r)] = used[static_cast<std::size_t>(s)] = false;
  }
}

}  // namespace

std::vector<CCombination> enumerate_c_combinations(const ConfigurationMatrix& cfg) {
  const int m = cfg.rows();
  std::vector<RowPair> candidates;
  for (int r = 0; r < m; ++r)
    for (int s = r + 1; s < m; ++s)
      if (cfg.dim(r) == cfg.dim(s)) candidates.emplace_back(r, s);

  std::vector<CCombination> out;
  std::vector<bool> used(static_cast<std::size_t>(m), false);
  std::vector<RowPair> current;
  extend_pairings(cfg, candidates, 0, used, current, out);
  std::sort(out.begin(), out.end());
  return out;
}

bool b_admissible(const ConfigurationMatrix& cfg, const CCombination& c, const std::vector<int>& rows) {
  for (int r : rows) {
    if (r < 0 || r >= cfg.rows()) throw PreconditionError("B row index out of range");
    if (cfg.dim(r) % 2 == 0) throw PreconditionError("B involution needs an odd-dimensional factor");
    if (c.contains_row(r)) throw PreconditionError("B row is already exchanged by a C involution");
  }

  // Touched columns grouped by whole-column identity: (class size, Q).
  std::map<std::vector<int>, std::pair<int, int>> classes;
  const auto columns = columns_of(cfg);
  for (int a = 0; a < cfg.cols(); ++a) {
    int q = 0;
    bool touched = false;
    for (int r : rows) {
      q += cfg(r, a);
      touched = touched || cfg(r, a) != 0;
    }
    if (!touched) continue;
    auto& [size, total] = classes[columns[static_cast<std::size_t>(a)]];
    ++size;
    total += q;
  }
  for (const auto& [column, stats] : classes)
    if (stats.first % 2 == 1 && stats.second % 2 == 1) return false;
  return true;
}

std::vector<BCombination> enumerate_b_combinations(const ConfigurationMatrix& cfg, const CCombination& c) {
  std::vector<int> candidates;
  for (int r = 0; r < cfg.rows(); ++r)
    if (cfg.dim(r) % 2 == 1 && !c.contains_row(r)) candidates.push_back(r);
  if (candidates.size() >= 31) throw PreconditionError("too many B candidate rows for exhaustive search");

  std::vector<BCombination> out;
  const unsigned long subsets = 1UL << candidates.size();
  for (unsigned long mask = 1; mask < subsets; ++mask) {
    BCombination b;
    for (std::size_t i = 0; i < candidates.size(); ++i)
      if (mask & (1UL << i)) b.rows.push_back(candidates[i]);
    if (b_admissible(cfg, c, b.rows)) out.push_back(std::move(b));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<InvolutionAssignment> enumerate_free_assignments(const ConfigurationMatrix& cfg) {
  std::vector<InvolutionAssignment> out;
  for (auto& c : enumerate_c_combinations(cfg))
    for (auto& b : enumerate_b_combinations(cfg, c)) out.push_back(InvolutionAssignment{c, std::move(b)});
  return out;
}

}  // namespace cicy
