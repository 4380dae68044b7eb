#include "cicy/poly.hpp"

#include <string>

namespace cicy {

std::vector<int> dims_as_caps(const ConfigurationMatrix& cfg) {
  std::vector<int> caps(static_cast<std::size_t>(cfg.rows()));
  for (int r = 0; r < cfg.rows(); ++r) caps[static_cast<std::size_t>(r)] = cfg.dim(r);
  return caps;
}

Poly linear_form(const ConfigurationMatrix& cfg, int column) {
  if (column < 0 || column >= cfg.cols())
    throw PreconditionError("column index " + std::to_string(column) + " out of range");
  Poly p(dims_as_caps(cfg));
  Exponent e(static_cast<std::size_t>(cfg.rows()), 0);
  for (int u = 0; u < cfg.rows(); ++u) {
    e[static_cast<std::size_t>(u)] = 1;
    p.add_term(e, BigInt(cfg(u, column)));
    e[static_cast<std::size_t>(u)] = 0;
  }
  return p;
}

}  // namespace cicy
