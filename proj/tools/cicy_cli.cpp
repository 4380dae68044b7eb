// cicy: command-line front end for configuration analysis.
//
//   cicy validate    --input corpus.cicy
//   cicy euler       --input corpus.cicy --format tsv
//   cicy involutions --input corpus.cicy
//   cicy betti       --input corpus.cicy
//   cicy expand      --input corpus.cicy --target-factors 5
//   cicy batch       --input corpus.cicy --format tsv --jobs 8

#include "cicy/dataset.hpp"
#include "cicy/errors.hpp"
#include "cicy/expansion.hpp"
#include "cicy/pipeline.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitInternal = 2;

struct Options {
  std::string input = "-";
  std::string output = "-";
  std::string format = "text";
  bool assume_favourable = true;
  unsigned jobs = 0;
  std::size_t max_expansions = 1000;
  int target_factors = 0;
};

std::vector<cicy::ConfigRecord> load(const Options& opt) {
  if (opt.input == "-") return cicy::parse_dataset(std::cin);
  std::ifstream in(opt.input);
  if (!in) throw std::runtime_error("cannot open input file '" + opt.input + "'");
  return cicy::parse_dataset(in);
}

void emit(const Options& opt, const std::string& text) {
  if (opt.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.output);
  if (!out) throw std::runtime_error("cannot open output file '" + opt.output + "'");
  out << text;
}

cicy::BatchOptions batch_options(const Options& opt) {
  cicy::BatchOptions b;
  b.analyze.assume_favourable = opt.assume_favourable;
  b.analyze.max_expansions = opt.max_expansions;
  b.jobs = opt.jobs;
  return b;
}

std::string pairs_1based(const cicy::CCombination& c) {
  if (c.pairs.empty()) return "-";
  std::string out;
  for (const auto& [r, s] : c.pairs) {
    if (!out.empty()) out += ';';
    out += std::to_string(r + 1) + "-" + std::to_string(s + 1);
  }
  return out;
}

std::string rows_1based(const cicy::BCombination& b) {
  std::string out;
  for (int r : b.rows) {
    if (!out.empty()) out += ',';
    out += std::to_string(r + 1);
  }
  return out;
}

int cmd_validate(const Options& opt) {
  const auto records = load(opt);
  std::ostringstream os;
  bool all_ok = true;
  const bool tsv = opt.format == "tsv";
  if (tsv) os << "name\tthreefold_ok\tchern_ok\tdegenerate_columns\n";
  for (const auto& rec : records) {
    const auto report = cicy::validate(rec.cfg);
    all_ok = all_ok && report.ok();
    if (tsv) {
      std::string degenerate;
      for (int a : report.degenerate_columns) degenerate += (degenerate.empty() ? "" : ",") + std::to_string(a + 1);
      os << rec.name << '\t' << report.threefold_ok << '\t' << report.chern_ok << '\t'
         << (degenerate.empty() ? "-" : degenerate) << '\n';
    } else {
      os << rec.name << ": " << (report.ok() ? "ok" : "invalid") << '\n';
      for (const auto& msg : report.messages) os << "  " << msg << '\n';
    }
  }
  emit(opt, os.str());
  return all_ok ? kExitOk : kExitInput;
}

int cmd_euler(const Options& opt) {
  const auto records = load(opt);
  std::ostringstream os;
  int status = kExitOk;
  const bool tsv = opt.format == "tsv";
  if (tsv) os << "name\tchi\n";
  for (const auto& rec : records) {
    if (!cicy::validate(rec.cfg).ok()) {
      std::cerr << rec.name << ": invalid configuration, skipped\n";
      os << rec.name << (tsv ? "\t-\n" : ": -\n");
      status = kExitInput;
      continue;
    }
    const auto chi = cicy::euler_characteristic(rec.cfg);
    os << rec.name << (tsv ? "\t" : ": chi = ") << chi << '\n';
  }
  emit(opt, os.str());
  return status;
}

int cmd_involutions(const Options& opt) {
  const auto records = load(opt);
  std::ostringstream os;
  int status = kExitOk;
  const bool tsv = opt.format == "tsv";
  if (tsv) os << "name\tc_pairs\tb_rows\n";
  for (const auto& rec : records) {
    if (!cicy::validate(rec.cfg).ok()) {
      std::cerr << rec.name << ": invalid configuration, skipped\n";
      status = kExitInput;
      continue;
    }
    const auto combos = cicy::enumerate_c_combinations(rec.cfg);
    const auto free = cicy::enumerate_free_assignments(rec.cfg);
    if (tsv) {
      for (const auto& a : free) os << rec.name << '\t' << pairs_1based(a.c) << '\t' << rows_1based(a.b) << '\n';
      continue;
    }
    os << "== " << rec.name << '\n' << "C-combinations:";
    for (const auto& c : combos) os << ' ' << (c.pairs.empty() ? "{}" : "{" + pairs_1based(c) + "}");
    os << "\nfree assignments: " << free.size() << '\n';
    for (const auto& a : free) os << cicy::render_decorated(rec.cfg, a) << '\n';
    if (free.empty()) os << cicy::render_plain(rec.cfg) << '\n';
  }
  emit(opt, os.str());
  return status;
}

int cmd_betti(const Options& opt) {
  const auto report = cicy::run_batch(load(opt), batch_options(opt));
  std::ostringstream os;
  const bool tsv = opt.format == "tsv";
  if (tsv) os << "name\tbetti_pairs\n";
  for (const auto& r : report.results) {
    os << r.name << (tsv ? "\t" : ": ") << cicy::format_pairs(r.betti_pairs) << '\n';
    if (!tsv)
      for (const auto& note : r.notes) os << "  note: " << note << '\n';
    if (r.error) std::cerr << r.name << ": " << *r.error << '\n';
  }
  emit(opt, os.str());
  return report.stats.internal_faults > 0 ? kExitInternal : kExitOk;
}

int cmd_expand(const Options& opt) {
  if (opt.target_factors < 1) throw std::invalid_argument("--target-factors is required and must be positive");
  std::vector<cicy::ConfigRecord> out;
  for (const auto& rec : load(opt)) {
    const auto expanded = cicy::expansions_to_count(rec.cfg, opt.target_factors, opt.max_expansions);
    if (expanded.empty()) std::cerr << rec.name << ": no expansion to " << opt.target_factors << " factors\n";
    for (std::size_t i = 0; i < expanded.size(); ++i) {
      const auto name = expanded.size() == 1 && expanded[i] == rec.cfg ? rec.name
                                                                         : rec.name + ".x" + std::to_string(i + 1);
      out.push_back({name, expanded[i], rec.hodge, rec.assume_favourable});
    }
  }
  emit(opt, cicy::write_dataset(out));
  return kExitOk;
}

int cmd_batch(const Options& opt) {
  const auto report = cicy::run_batch(load(opt), batch_options(opt));
  emit(opt, opt.format == "tsv" ? cicy::render_tsv(report) : cicy::render_text(report));
  return report.stats.internal_faults > 0 ? kExitInternal : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Analyze CICY configuration matrices: validation, Euler characteristic, involutions, Betti numbers"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&opt](CLI::App* sub) {
    sub->add_option("--input", opt.input, "Dataset file ('-' for stdin)");
    sub->add_option("--output", opt.output, "Output file ('-' for stdout)");
    sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "tsv"}));
    sub->add_flag("--assume-favourable,!--no-assume-favourable", opt.assume_favourable,
                  "Take h11 = number of factors when a record has no hodge line");
    sub->add_option("--jobs", opt.jobs, "Worker threads (0 = all cores)");
    sub->add_option("--max-expansions", opt.max_expansions, "Cap on inequivalent expansions kept");
    sub->add_option("--target-factors", opt.target_factors, "Number of factors to expand to (expand)");
  };

  struct Sub {
    const char* name;
    const char* help;
    int (*run)(const Options&);
  };
  const Sub subs[] = {
      {"validate", "Check the threefold and first Chern class conditions", cmd_validate},
      {"euler", "Euler characteristic of each configuration", cmd_euler},
      {"involutions", "Enumerate C combinations and free B assignments", cmd_involutions},
      {"betti", "Betti numbers of the barely G2 quotients", cmd_betti},
      {"expand", "Apply the CP^1 splitting identity up to --target-factors", cmd_expand},
      {"batch", "Full analysis report", cmd_batch},
  };
  std::vector<std::pair<CLI::App*, int (*)(const Options&)>> registered;
  for (const auto& s : subs) {
    auto* sub = app.add_subcommand(s.name, s.help);
    add_common(sub);
    registered.emplace_back(sub, s.run);
  }

  CLI11_PARSE(app, argc, argv);

  try {
    for (const auto& [sub, run] : registered)
      if (sub->parsed()) return run(opt);
  } catch (const cicy::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitInput;
  } catch (const cicy::ConsistencyError& e) {
    std::cerr << "internal consistency fault: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitOk;
}
