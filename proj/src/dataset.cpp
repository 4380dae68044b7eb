#include "cicy/dataset.hpp"

#include "cicy/errors.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

namespace cicy {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::string body = line.substr(0, line.find('#'));
  std::istringstream is(body);
  std::vector<std::string> tokens;
  for (std::string t; is >> t;) tokens.push_back(std::move(t));
  return tokens;
}

int parse_int(const std::string& token, std::size_t line) {
  int value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) throw ParseError(line, "expected an integer, got '" + token + "'");
  return value;
}

std::vector<int> parse_ints(const std::vector<std::string>& tokens, std::size_t line) {
  std::vector<int> out;
  out.reserve(tokens.size() - 1);
  for (std::size_t i = 1; i < tokens.size(); ++i) out.push_back(parse_int(tokens[i], line));
  return out;
}

struct PendingRecord {
  std::string name;
  std::size_t header_line = 0;
  std::optional<std::vector<int>> dims;
  std::vector<std::vector<int>> rows;
  std::optional<HodgePair> hodge;
};

ConfigRecord finish(PendingRecord& p, std::size_t end_line) {
  if (!p.dims) throw ParseError(end_line, "config '" + p.name + "' has no dims line");
  const std::size_t m = p.dims->size();
  if (p.rows.size() != m)
    throw ParseError(end_line, "config '" + p.name + "': expected " + std::to_string(m) + " rows, got " +
                                   std::to_string(p.rows.size()));
  const std::size_t k = p.rows.front().size();
  for (std::size_t a = 0; a < k; ++a) {
    bool zero = true;
    for (const auto& row : p.rows) zero = zero && row[a] == 0;
    if (zero) throw ParseError(end_line, "config '" + p.name + "': column " + std::to_string(a + 1) + " is all zero");
  }
  try {
    return ConfigRecord{p.name, ConfigurationMatrix(*p.dims, p.rows), p.hodge, true};
  } catch (const PreconditionError& e) {
    throw ParseError(end_line, "config '" + p.name + "': " + e.what());
  }
}

}  // namespace

std::vector<ConfigRecord> parse_dataset(std::istream& in) {
  std::vector<ConfigRecord> records;
  std::optional<PendingRecord> pending;
  std::string line;
  std::size_t line_no = 0;

  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    const std::string& keyword = tokens.front();

    if (!pending) {
      if (keyword != "config") throw ParseError(line_no, "expected 'config <name>', got '" + keyword + "'");
      if (tokens.size() != 2) throw ParseError(line_no, "malformed header: expected 'config <name>'");
      pending = PendingRecord{tokens[1], line_no, {}, {}, {}};
      continue;
    }

    if (keyword == "dims") {
      if (pending->dims) throw ParseError(line_no, "duplicate dims line");
      if (tokens.size() < 2) throw ParseError(line_no, "dims line needs at least one entry");
      auto dims = parse_ints(tokens, line_no);
      for (int n : dims)
        if (n < 1) throw ParseError(line_no, "projective dimensions must be positive");
      pending->dims = std::move(dims);
    } else if (keyword == "row") {
      if (!pending->dims) throw ParseError(line_no, "row before dims");
      if (tokens.size() < 2) throw ParseError(line_no, "row line needs at least one entry");
      auto row = parse_ints(tokens, line_no);
      for (int q : row)
        if (q < 0) throw ParseError(line_no, "degrees must be non-negative");
      if (!pending->rows.empty() && row.size() != pending->rows.front().size())
        throw ParseError(line_no, "row has " + std::to_string(row.size()) + " entries, expected K = " +
                                      std::to_string(pending->rows.front().size()));
      if (pending->rows.size() == pending->dims->size())
        throw ParseError(line_no, "expected " + std::to_string(pending->dims->size()) + " rows, got more");
      pending->rows.push_back(std::move(row));
    } else if (keyword == "hodge") {
      if (pending->hodge) throw ParseError(line_no, "duplicate hodge line");
      if (tokens.size() != 3) throw ParseError(line_no, "hodge line needs exactly two entries");
      const auto h = parse_ints(tokens, line_no);
      if (h[0] < 1 || h[1] < 0) throw ParseError(line_no, "hodge numbers need h11 >= 1 and h21 >= 0");
      pending->hodge = HodgePair{h[0], h[1]};
    } else if (keyword == "end") {
      if (tokens.size() != 1) throw ParseError(line_no, "unexpected tokens after 'end'");
      records.push_back(finish(*pending, line_no));
      pending.reset();
    } else if (keyword == "config") {
      throw ParseError(line_no, "missing 'end' for config '" + pending->name + "'");
    } else {
      throw ParseError(line_no, "unknown keyword '" + keyword + "'");
    }
  }

  if (pending) throw ParseError(line_no, "missing 'end' for config '" + pending->name + "'");
  return records;
}

std::vector<ConfigRecord> parse_dataset(std::string_view text) {
  std::istringstream is{std::string(text)};
  return parse_dataset(is);
}

void write_dataset(std::ostream& out, const std::vector<ConfigRecord>& records) {
  bool first = true;
  for (const auto& rec : records) {
    if (!first) out << '\n';
    first = false;
    out << "config " << rec.name << "\ndims";
    for (int r = 0; r < rec.cfg.rows(); ++r) out << ' ' << rec.cfg.dim(r);
    out << '\n';
    for (int r = 0; r < rec.cfg.rows(); ++r) {
      out << "row";
      for (int a = 0; a < rec.cfg.cols(); ++a) out << ' ' << rec.cfg(r, a);
      out << '\n';
    }
    if (rec.hodge) out << "hodge " << rec.hodge->h11 << ' ' << rec.hodge->h21 << '\n';
    out << "end\n";
  }
}

std::string write_dataset(const std::vector<ConfigRecord>& records) {
  std::ostringstream os;
  write_dataset(os, records);
  return os.str();
}

}  // namespace cicy
