#include "cicy/expansion.hpp"

#include "cicy/errors.hpp"

#include <map>

namespace cicy {

ConfigurationMatrix expand_row(const ConfigurationMatrix& cfg, const ExpansionStep& step) {
  const int m = cfg.rows();
  const int k = cfg.cols();
  if (step.row < 0 || step.row >= m) throw PreconditionError("expansion row out of range");
  if (step.column < 0 || step.column >= k) throw PreconditionError("expansion column out of range");
  if (cfg.dim(step.row) != 1) throw PreconditionError("expansion row is not a CP^1 factor");
  if (cfg(step.row, step.column) < 1) throw PreconditionError("expansion column has zero degree on the CP^1 row");

  DimVector dims(m + 1);
  DegreeMatrix q = DegreeMatrix::Zero(m + 1, k + 1);
  for (int r = 0, out = 0; r < m; ++r, ++out) {
    if (r != step.row) {
      dims(out) = cfg.dim(r);
      q.row(out).tail(k) = cfg.degrees().row(r);
      continue;
    }
    dims(out) = 1;
    dims(out + 1) = 1;
    q(out, 0) = 1;
    q(out + 1, 0) = 1;
    q(out, step.column + 1) = 1;
    q.row(out + 1).tail(k) = cfg.degrees().row(r);
    q(out + 1, step.column + 1) -= 1;
    ++out;
  }
  return {std::move(dims), std::move(q)};
}

std::vector<ExpansionStep> legal_steps(const ConfigurationMatrix& cfg) {
  std::vector<ExpansionStep> steps;
  for (int r = 0; r < cfg.rows(); ++r) {
    if (cfg.dim(r) != 1) continue;
    for (int a = 0; a < cfg.cols(); ++a)
      if (cfg(r, a) >= 1) steps.push_back({r, a});
  }
  return steps;
}

std::vector<ConfigurationMatrix> expansions_to_count(const ConfigurationMatrix& cfg, int target_m, std::size_t limit) {
  if (target_m < cfg.rows() || limit == 0) return {};

  // canonical form -> first representative found
  std::map<ConfigurationMatrix, ConfigurationMatrix, ConfigLess> frontier;
  frontier.emplace(canonical_form(cfg), cfg);

  for (int m = cfg.rows(); m < target_m; ++m) {
    std::map<ConfigurationMatrix, ConfigurationMatrix, ConfigLess> next;
    for (const auto& [canon, rep] : frontier) {
      for (const auto& step : legal_steps(rep)) {
        if (next.size() >= limit) break;
        auto expanded = expand_row(rep, step);
        next.try_emplace(canonical_form(expanded), std::move(expanded));
      }
    }
    if (next.empty()) return {};
    frontier = std::move(next);
  }

  std::vector<ConfigurationMatrix> out;
  out.reserve(frontier.size());
  for (auto& [canon, rep] : frontier) out.push_back(rep);
  return out;
}

}  // namespace cicy
