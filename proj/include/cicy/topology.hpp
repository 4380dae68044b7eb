#pragma once

#include "cicy/config.hpp"

#include <array>
#include <cstdint>
#include <map>

namespace cicy {

// d3(r,s,t) = 3 c3(r,s,t) = (n_r + 1) delta(r,s,t) - sum_a q(r,a) q(s,a) q(t,a).
// Stored once per index multiset; lookups sort the indices.
class ChernCubic {
public:
  explicit ChernCubic(const ConfigurationMatrix& cfg);

  int nvars() const noexcept { return nvars_; }
  std::int64_t operator()(int r, int s, int t) const;
  const std::map<std::array<int, 3>, std::int64_t>& entries() const noexcept { return d3_; }

private:
  int nvars_ = 0;
  std::map<std::array<int, 3>, std::int64_t> d3_;
};

struct HodgePair {
  int h11 = 1;
  int h21 = 0;

  friend bool operator==(const HodgePair&, const HodgePair&) = default;
};

struct BettiNumbers {
  int b2 = 0;
  int b3 = 0;

  friend bool operator==(const BettiNumbers&, const BettiNumbers&) = default;
  friend auto operator<=>(const BettiNumbers&, const BettiNumbers&) = default;
};

// Betti numbers of Y x S^1.
struct ProductBetti {
  int b1 = 1;
  int b2 = 0;
  int b3 = 0;

  friend bool operator==(const ProductBetti&, const ProductBetti&) = default;
};

ChernCubic chern_cubic(const ConfigurationMatrix& cfg);

// Coefficient of prod x_r^{n_r} in (sum d3 x_r x_s x_t) * prod_b (sum_u q(u,b) x_u),
// divided by 3. Throws ConsistencyError if the division is not exact.
std::int64_t euler_characteristic(const ConfigurationMatrix& cfg);

// h21 from chi = 2 (h11 - h21).
HodgePair hodge_from_euler(std::int64_t chi, int h11);
HodgePair hodge_from_euler(const ConfigurationMatrix& cfg, int h11);

ProductBetti product_betti(const HodgePair& h);

// Quotient (Y x S^1)/sigma for a favourable Y with n_c factor swaps:
// b2 = n_c, b3 = h11 + h21 + 1 - n_c.
BettiNumbers barely_betti(const HodgePair& h, int n_c);

}  // namespace cicy
