#pragma once

#include "cicy/config.hpp"
#include "cicy/dataset.hpp"
#include "cicy/involutions.hpp"
#include "cicy/topology.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace cicy {

struct AnalyzeOptions {
  // Overrides ConfigRecord::assume_favourable when cleared.
  bool assume_favourable = true;
  // Cap on expanded variants for records with h11 > m; 0 disables expansion.
  std::size_t max_expansions = 1000;
};

struct AssignmentResult {
  InvolutionAssignment assignment;
  std::optional<BettiNumbers> betti;
};

// Involution data for one concrete configuration matrix: the record's own
// matrix, or one of its expansions when the record is not favourable as given.
struct InvolutionAnalysis {
  ConfigurationMatrix cfg;
  std::vector<CCombination> c_combinations;
  std::vector<AssignmentResult> free_assignments;
};

struct AnalysisResult {
  std::string name;
  ValidationReport validation;
  std::optional<std::int64_t> chi;
  std::optional<HodgePair> hodge;
  bool favourable = false;
  std::vector<InvolutionAnalysis> variants;
  std::set<BettiNumbers> betti_pairs;
  std::vector<std::string> notes;
  std::optional<std::string> error;
  bool internal_fault = false;

  bool valid() const noexcept { return validation.ok(); }
  int n_c_options() const;
  int b_combinations() const;
  bool admits_b() const { return b_combinations() > 0; }
};

AnalysisResult analyze(const ConfigRecord& record, const AnalyzeOptions& options = {});

struct BatchOptions {
  AnalyzeOptions analyze;
  // 0 means one worker per hardware thread.
  unsigned jobs = 0;
};

struct ReportStats {
  int records = 0;
  int invalid = 0;
  int errors = 0;
  int internal_faults = 0;
  int admitting_b = 0;
  int even_hodge_sum = 0;
  int admitting_b_even_hodge_sum = 0;
  // Distinct Betti pairs by b2 + b3 mod 4.
  int pairs_sum_1_mod_4 = 0;
  int pairs_sum_3_mod_4 = 0;
};

struct Report {
  std::vector<AnalysisResult> results;  // sorted by name, then input order
  std::map<BettiNumbers, int> pair_counts;  // pair -> number of records producing it
  ReportStats stats;
};

Report run_batch(const std::vector<ConfigRecord>& dataset, const BatchOptions& options = {});

// Matrix as "n | q..." lines.
std::string render_plain(const ConfigurationMatrix& cfg);

// Matrix with A:/B:/Ck: row prefixes and, when given, a trailing "^{b2,b3}".
std::string render_decorated(const ConfigurationMatrix& cfg, const InvolutionAssignment& assignment,
                             const std::optional<BettiNumbers>& betti = std::nullopt);

inline constexpr const char* kTsvHeader = "name\tvalid\tchi\th11\th21\tn_c_options\tb_combinations\tbetti_pairs";

std::string render_tsv(const Report& report);
std::string render_text(const Report& report);

// "b2,b3;b2,b3" in ascending order, "-" when empty.
std::string format_pairs(const std::set<BettiNumbers>& pairs);

}  // namespace cicy
