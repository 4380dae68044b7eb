#include "cicy/pipeline.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace cicy {

namespace {

int width_of(int v) { return static_cast<int>(std::to_string(v).size()); }

// Row bodies "n | q q q" with entries right-aligned per column.
std::vector<std::string> matrix_lines(const ConfigurationMatrix& cfg) {
  int dim_w = 1;
  for (int r = 0; r < cfg.rows(); ++r) dim_w = std::max(dim_w, width_of(cfg.dim(r)));
  std::vector<int> col_w(static_cast<std::size_t>(cfg.cols()), 1);
  for (int a = 0; a < cfg.cols(); ++a)
    for (int r = 0; r < cfg.rows(); ++r)
      col_w[static_cast<std::size_t>(a)] = std::max(col_w[static_cast<std::size_t>(a)], width_of(cfg(r, a)));

  std::vector<std::string> lines;
  for (int r = 0; r < cfg.rows(); ++r) {
    std::ostringstream os;
    os << std::string(static_cast<std::size_t>(dim_w - width_of(cfg.dim(r))), ' ') << cfg.dim(r) << " |";
    for (int a = 0; a < cfg.cols(); ++a)
      os << ' ' << std::string(static_cast<std::size_t>(col_w[static_cast<std::size_t>(a)] - width_of(cfg(r, a))), ' ')
         << cfg(r, a);
    lines.push_back(os.str());
  }
  return lines;
}

std::string or_dash(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : "-"; }

}  // namespace

std::string render_plain(const ConfigurationMatrix& cfg) {
  std::string out;
  for (const auto& line : matrix_lines(cfg)) out += line + '\n';
  return out;
}

std::string render_decorated(const ConfigurationMatrix& cfg, const InvolutionAssignment& assignment,
                             const std::optional<BettiNumbers>& betti) {
  std::vector<std::string> labels(static_cast<std::size_t>(cfg.rows()), "A:");
  for (int r : assignment.b.rows) labels.at(static_cast<std::size_t>(r)) = "B:";
  for (std::size_t i = 0; i < assignment.c.pairs.size(); ++i) {
    const std::string label = "C" + std::to_string(i + 1) + ":";
    labels.at(static_cast<std::size_t>(assignment.c.pairs[i].first)) = label;
    labels.at(static_cast<std::size_t>(assignment.c.pairs[i].second)) = label;
  }
  std::size_t label_w = 0;
  for (const auto& l : labels) label_w = std::max(label_w, l.size());

  std::string out;
  const auto lines = matrix_lines(cfg);
  for (std::size_t r = 0; r < lines.size(); ++r)
    out += labels[r] + std::string(label_w - labels[r].size() + 1, ' ') + lines[r] + '\n';
  if (betti) out += "^{" + std::to_string(betti->b2) + "," + std::to_string(betti->b3) + "}\n";
  return out;
}

std::string format_pairs(const std::set<BettiNumbers>& pairs) {
  if (pairs.empty()) return "-";
  std::string out;
  for (const auto& p : pairs) {
    if (!out.empty()) out += ';';
    out += std::to_string(p.b2) + "," + std::to_string(p.b3);
  }
  return out;
}

std::string render_tsv(const Report& report) {
  std::ostringstream os;
  os << kTsvHeader << '\n';
  for (const auto& r : report.results) {
    const bool analysed = r.valid() && !r.error;
    os << r.name << '\t' << (r.valid() ? 1 : 0) << '\t' << or_dash(r.chi) << '\t'
       << (r.hodge ? std::to_string(r.hodge->h11) : "-") << '\t' << (r.hodge ? std::to_string(r.hodge->h21) : "-")
       << '\t' << (analysed ? std::to_string(r.n_c_options()) : "-") << '\t'
       << (analysed ? std::to_string(r.b_combinations()) : "-") << '\t' << format_pairs(r.betti_pairs) << '\n';
  }
  return os.str();
}

std::string render_text(const Report& report) {
  std::ostringstream os;
  for (const auto& r : report.results) {
    os << "== " << r.name << '\n';
    if (!r.valid()) {
      os << "invalid configuration\n";
      for (const auto& msg : r.validation.messages) os << "  " << msg << '\n';
      os << '\n';
      continue;
    }
    if (r.error) {
      os << (r.internal_fault ? "internal fault: " : "error: ") << *r.error << "\n\n";
      continue;
    }
    os << "chi: " << or_dash(r.chi) << '\n';
    if (r.hodge) os << "hodge: (" << r.hodge->h11 << ", " << r.hodge->h21 << ")\n";
    os << "C-combinations: " << r.n_c_options() << '\n';
    os << "free assignments: " << r.b_combinations() << '\n';
    for (const auto& v : r.variants)
      for (const auto& fa : v.free_assignments) os << render_decorated(v.cfg, fa.assignment, fa.betti) << '\n';
    os << "betti pairs: " << format_pairs(r.betti_pairs) << '\n';
    for (const auto& note : r.notes) os << "note: " << note << '\n';
    os << '\n';
  }

  const auto& st = report.stats;
  os << "== summary\n";
  os << "records: " << st.records << " (invalid " << st.invalid << ", errors " << st.errors << ", internal faults "
     << st.internal_faults << ")\n";
  os << "admitting a B involution: " << st.admitting_b << '\n';
  os << "even h11+h21: " << st.even_hodge_sum << " (of which admitting B: " << st.admitting_b_even_hodge_sum << ")\n";
  os << "distinct betti pairs: " << report.pair_counts.size() << " (b2+b3 = 1 mod 4: " << st.pairs_sum_1_mod_4
     << ", 3 mod 4: " << st.pairs_sum_3_mod_4 << ")\n";
  if (!report.pair_counts.empty()) {
    os << "b2\tb3\trecords\n";
    for (const auto& [p, count] : report.pair_counts) os << p.b2 << '\t' << p.b3 << '\t' << count << '\n';
  }
  return os.str();
}

}  // namespace cicy
