#pragma once

#include "cicy/config.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

namespace cicy::testing {

inline ConfigurationMatrix quintic() { return ConfigurationMatrix({4}, {{5}}); }

inline ConfigurationMatrix bicubic() { return ConfigurationMatrix({2, 2}, {{3}, {3}}); }

inline ConfigurationMatrix tetraquadric() { return ConfigurationMatrix({1, 1, 1, 1}, {{2}, {2}, {2}, {2}}); }

inline ConfigurationMatrix configex1() {
  return ConfigurationMatrix({1, 1, 1, 2, 3}, {{0, 0, 0, 0, 2},
                                               {0, 0, 1, 1, 0},
                                               {0, 0, 1, 1, 0},
                                               {1, 1, 1, 0, 0},
                                               {1, 1, 0, 1, 1}});
}

inline std::vector<ConfigurationMatrix> corpus() { return {quintic(), bicubic(), tetraquadric(), configex1()}; }

inline std::vector<int> random_permutation(std::mt19937& rng, int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Structurally well-formed, not necessarily Calabi-Yau.
inline ConfigurationMatrix random_matrix(std::mt19937& rng, int max_m, int max_k, int max_entry) {
  std::uniform_int_distribution<int> m_dist(1, max_m), k_dist(1, max_k), n_dist(1, 4), q_dist(0, max_entry);
  const int m = m_dist(rng);
  const int k = k_dist(rng);
  std::vector<int> dims(static_cast<std::size_t>(m));
  for (auto& d : dims) d = n_dist(rng);
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(k)));
  for (auto& row : rows)
    for (auto& q : row) q = q_dist(rng);
  // Duplicate rows now and then so that row swaps have something to find.
  std::bernoulli_distribution dup(0.4);
  for (int r = 1; r < m; ++r) {
    if (dup(rng)) {
      std::uniform_int_distribution<int> src(0, r - 1);
      const int s = src(rng);
      rows[static_cast<std::size_t>(r)] = rows[static_cast<std::size_t>(s)];
      dims[static_cast<std::size_t>(r)] = dims[static_cast<std::size_t>(s)];
    }
  }
  return ConfigurationMatrix(dims, rows);
}

// Random matrix satisfying both Calabi-Yau conditions with no zero column:
// sum n_r = K + 3 and every row sums to n_r + 1, entries <= max_entry.
// Equal-dimension rows are duplicated half the time so C swaps occur.
inline ConfigurationMatrix random_valid_config(std::mt19937& rng, int max_m, int max_k, int max_entry) {
  std::uniform_int_distribution<int> k_dist(1, max_k);
  for (;;) {
    const int k = k_dist(rng);
    std::uniform_int_distribution<int> m_dist(1, std::min(max_m, k + 3));
    const int m = m_dist(rng);

    // Composition of K + 3 into m positive parts.
    std::vector<int> cuts(static_cast<std::size_t>(k + 2));
    std::iota(cuts.begin(), cuts.end(), 1);
    std::shuffle(cuts.begin(), cuts.end(), rng);
    cuts.resize(static_cast<std::size_t>(m - 1));
    std::sort(cuts.begin(), cuts.end());
    std::vector<int> dims;
    int prev = 0;
    for (int c : cuts) {
      dims.push_back(c - prev);
      prev = c;
    }
    dims.push_back(k + 3 - prev);

    std::vector<std::vector<int>> rows(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(k), 0));
    bool ok = true;
    std::uniform_int_distribution<int> col(0, k - 1);
    for (int r = 0; r < m && ok; ++r) {
      const int total = dims[static_cast<std::size_t>(r)] + 1;
      if (total > max_entry * k) {
        ok = false;
        break;
      }
      for (int placed = 0; placed < total;) {
        auto& q = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col(rng))];
        if (q < max_entry) {
          ++q;
          ++placed;
        }
      }
    }
    if (!ok) continue;

    std::bernoulli_distribution dup(0.5);
    for (int r = 1; r < m; ++r) {
      for (int s = 0; s < r; ++s) {
        if (dims[static_cast<std::size_t>(r)] == dims[static_cast<std::size_t>(s)] && dup(rng)) {
          rows[static_cast<std::size_t>(r)] = rows[static_cast<std::size_t>(s)];
          break;
        }
      }
    }

    bool zero_col = false;
    for (int a = 0; a < k; ++a) {
      bool zero = true;
      for (const auto& row : rows) zero = zero && row[static_cast<std::size_t>(a)] == 0;
      zero_col = zero_col || zero;
    }
    if (zero_col) continue;

    ConfigurationMatrix cfg(dims, rows);
    return cfg.permute_rows(random_permutation(rng, m)).permute_cols(random_permutation(rng, k));
  }
}

}  // namespace cicy::testing
