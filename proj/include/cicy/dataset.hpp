#pragma once

#include "cicy/config.hpp"
#include "cicy/topology.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cicy {

// One dataset entry. `hodge` carries externally known Hodge numbers; without
// it, a favourable configuration (h11 = number of factors) is assumed unless
// assume_favourable is cleared.
struct ConfigRecord {
  std::string name;
  ConfigurationMatrix cfg;
  std::optional<HodgePair> hodge;
  bool assume_favourable = true;
};

// Line-oriented format, '#' starts a comment:
//
//   config <name>
//   dims <n_1> ... <n_m>
//   row <q_1> ... <q_K>      (exactly m rows)
//   hodge <h11> <h21>        (optional)
//   end
//
// Throws ParseError on the first structural problem.
std::vector<ConfigRecord> parse_dataset(std::istream& in);
std::vector<ConfigRecord> parse_dataset(std::string_view text);

void write_dataset(std::ostream& out, const std::vector<ConfigRecord>& records);
std::string write_dataset(const std::vector<ConfigRecord>& records);

}  // namespace cicy
