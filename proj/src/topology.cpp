#include "cicy/topology.hpp"

#include "cicy/errors.hpp"
#include "cicy/poly.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace cicy {

namespace {

void require_valid(const ConfigurationMatrix& cfg) {
  const auto report = validate(cfg);
  if (!report.ok()) {
    std::string why = "configuration is not a valid CICY threefold";
    if (!report.messages.empty()) why += ": " + report.messages.front();
    throw PreconditionError(why);
  }
}

}  // namespace

ChernCubic::ChernCubic(const ConfigurationMatrix& cfg) : nvars_(cfg.rows()) {
  const int m = cfg.rows();
  for (int r = 0; r < m; ++r) {
    for (int s = r; s < m; ++s) {
      for (int t = s; t < m; ++t) {
        std::int64_t v = (r == s && s == t) ? cfg.dim(r) + 1 : 0;
        for (int a = 0; a < cfg.cols(); ++a)
          v -= static_cast<std::int64_t>(cfg(r, a)) * cfg(s, a) * cfg(t, a);
        d3_[{r, s, t}] = v;
      }
    }
  }
}

std::int64_t ChernCubic::operator()(int r, int s, int t) const {
  std::array<int, 3> key{r, s, t};
  std::sort(key.begin(), key.end());
  auto it = d3_.find(key);
  if (it == d3_.end()) throw PreconditionError("cubic index out of range");
  return it->second;
}

ChernCubic chern_cubic(const ConfigurationMatrix& cfg) {
  require_valid(cfg);
  return ChernCubic(cfg);
}

std::int64_t euler_characteristic(const ConfigurationMatrix& cfg) {
  const ChernCubic cubic = chern_cubic(cfg);
  const auto caps = dims_as_caps(cfg);

  // The ordered-triple sum counts each multiset {r,s,t} once per distinct
  // arrangement: 1, 3 or 6 times.
  Poly acc(caps);
  for (const auto& [idx, d3] : cubic.entries()) {
    const auto [r, s, t] = idx;
    const int arrangements = (r == s && s == t) ? 1 : (r == s || s == t) ? 3 : 6;
    Exponent e(caps.size(), 0);
    ++e[static_cast<std::size_t>(r)];
    ++e[static_cast<std::size_t>(s)];
    ++e[static_cast<std::size_t>(t)];
    acc.add_term(e, BigInt(d3) * arrangements);
  }
  for (int b = 0; b < cfg.cols(); ++b) acc = truncated_mul(acc, linear_form(cfg, b));

  const BigInt three_chi = acc.coefficient(caps);
  if (three_chi % 3 != 0)
    throw ConsistencyError("Euler characteristic coefficient " + three_chi.str() + " is not divisible by 3");
  const BigInt chi = three_chi / 3;
  if (chi > std::numeric_limits<std::int64_t>::max() || chi < std::numeric_limits<std::int64_t>::min())
    throw ConsistencyError("Euler characteristic out of 64-bit range");
  return chi.convert_to<std::int64_t>();
}

HodgePair hodge_from_euler(std::int64_t chi, int h11) {
  if (h11 < 1) throw PreconditionError("h11 must be positive");
  if (chi % 2 != 0) throw AnalysisError("non-even Euler characteristic " + std::to_string(chi));
  const std::int64_t h21 = h11 - chi / 2;
  if (h21 < 0)
    throw AnalysisError("inconsistent h11 = " + std::to_string(h11) + " for chi = " + std::to_string(chi));
  if (h21 > std::numeric_limits<int>::max()) throw AnalysisError("h21 out of range");
  return {h11, static_cast<int>(h21)};
}

HodgePair hodge_from_euler(const ConfigurationMatrix& cfg, int h11) {
  return hodge_from_euler(euler_characteristic(cfg), h11);
}

ProductBetti product_betti(const HodgePair& h) { return {1, h.h11, h.h11 + 2 * (h.h21 + 1)}; }

BettiNumbers barely_betti(const HodgePair& h, int n_c) {
  if (n_c < 0 || n_c > h.h11 / 2)
    throw PreconditionError("n_C = " + std::to_string(n_c) + " exceeds floor(h11/2) = " + std::to_string(h.h11 / 2));
  return {n_c, h.h11 + h.h21 + 1 - n_c};
}

}  // namespace cicy
