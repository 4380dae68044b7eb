#include "cicy/pipeline.hpp"

#include "cicy/errors.hpp"
#include "cicy/expansion.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

namespace cicy {

int AnalysisResult::n_c_options() const {
  int n = 0;
  for (const auto& v : variants) n += static_cast<int>(v.c_combinations.size());
  return n;
}

int AnalysisResult::b_combinations() const {
  int n = 0;
  for (const auto& v : variants) n += static_cast<int>(v.free_assignments.size());
  return n;
}

namespace {

InvolutionAnalysis involutions_of(const ConfigurationMatrix& cfg, const std::optional<HodgePair>& favourable_hodge) {
  InvolutionAnalysis out{cfg, enumerate_c_combinations(cfg), {}};
  for (const auto& c : out.c_combinations) {
    for (auto& b : enumerate_b_combinations(cfg, c)) {
      AssignmentResult ar{InvolutionAssignment{c, std::move(b)}, std::nullopt};
      if (favourable_hodge) ar.betti = barely_betti(*favourable_hodge, c.size());
      out.free_assignments.push_back(std::move(ar));
    }
  }
  return out;
}

void run_analysis(const ConfigRecord& record, const AnalyzeOptions& options, AnalysisResult& r) {
  const auto& cfg = record.cfg;
  const int m = cfg.rows();
  const std::int64_t chi = euler_characteristic(cfg);
  r.chi = chi;

  if (record.hodge) {
    const auto& h = *record.hodge;
    if (2 * (static_cast<std::int64_t>(h.h11) - h.h21) != chi)
      throw AnalysisError("Hodge/Euler mismatch: 2(h11 - h21) = " + std::to_string(2 * (h.h11 - h.h21)) +
                          " but chi = " + std::to_string(chi));
    r.hodge = h;
  } else if (record.assume_favourable && options.assume_favourable) {
    r.hodge = hodge_from_euler(chi, m);
  }

  if (!r.hodge) {
    r.variants.push_back(involutions_of(cfg, std::nullopt));
    r.notes.push_back("Betti numbers refused: no Hodge data and favourability not assumed");
    return;
  }

  const HodgePair h = *r.hodge;
  r.favourable = h.h11 == m;
  if (r.favourable) {
    r.variants.push_back(involutions_of(cfg, h));
  } else if (h.h11 > m && options.max_expansions > 0) {
    const auto expanded = expansions_to_count(cfg, h.h11, options.max_expansions);
    if (expanded.empty()) {
      r.variants.push_back(involutions_of(cfg, std::nullopt));
      r.notes.push_back("Betti numbers refused: h11 = " + std::to_string(h.h11) + " exceeds " + std::to_string(m) +
                        " factors and no CP^1 factor can be expanded");
    } else {
      for (const auto& e : expanded) {
        if (euler_characteristic(e) != chi)
          throw ConsistencyError("expansion changed the Euler characteristic");
        r.variants.push_back(involutions_of(e, h));
      }
      r.notes.push_back("expanded to " + std::to_string(h.h11) + " factors: " + std::to_string(expanded.size()) +
                        " inequivalent variant(s), favourability assumed");
    }
  } else {
    r.variants.push_back(involutions_of(cfg, std::nullopt));
    r.notes.push_back("Betti numbers refused: configuration is not favourable (h11 = " + std::to_string(h.h11) +
                      ", " + std::to_string(m) + " factors) and was not expanded");
  }

  for (const auto& v : r.variants)
    for (const auto& fa : v.free_assignments)
      if (fa.betti) r.betti_pairs.insert(*fa.betti);
}

}  // namespace

AnalysisResult analyze(const ConfigRecord& record, const AnalyzeOptions& options) {
  AnalysisResult r;
  r.name = record.name;
  r.validation = validate(record.cfg);
  if (!r.valid()) return r;

  try {
    run_analysis(record, options, r);
  } catch (const ConsistencyError& e) {
    r.error = e.what();
    r.internal_fault = true;
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  if (r.error) {
    r.variants.clear();
    r.betti_pairs.clear();
  }
  return r;
}

Report run_batch(const std::vector<ConfigRecord>& dataset, const BatchOptions& options) {
  std::vector<AnalysisResult> results(dataset.size());
  unsigned jobs = options.jobs ? options.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(dataset.size(), 1)));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < dataset.size(); i = next++) results[i] = analyze(dataset[i], options.analyze);
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(jobs);
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }

  std::vector<std::size_t> order(dataset.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return dataset[a].name < dataset[b].name; });

  Report report;
  report.results.reserve(results.size());
  for (std::size_t i : order) report.results.push_back(std::move(results[i]));

  auto& st = report.stats;
  for (const auto& r : report.results) {
    ++st.records;
    if (!r.valid()) ++st.invalid;
    if (r.error) ++st.errors;
    if (r.internal_fault) ++st.internal_faults;
    const bool even = r.hodge && (r.hodge->h11 + r.hodge->h21) % 2 == 0;
    if (even) ++st.even_hodge_sum;
    if (r.admits_b()) {
      ++st.admitting_b;
      if (even) ++st.admitting_b_even_hodge_sum;
    }
    for (const auto& p : r.betti_pairs) ++report.pair_counts[p];
  }
  for (const auto& [p, count] : report.pair_counts) {
    const int residue = (p.b2 + p.b3) % 4;
    if (residue == 1) ++st.pairs_sum_1_mod_4;
    if (residue == 3) ++st.pairs_sum_3_mod_4;
  }
  return report;
}

}  // namespace cicy
