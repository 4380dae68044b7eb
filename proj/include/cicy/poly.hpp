#pragma once

#include "cicy/config.hpp"
#include "cicy/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <utility>
#include <vector>

namespace cicy {

using BigInt = boost::multiprecision::cpp_int;
using Exponent = std::vector<int>;

// Sparse polynomial in m variables over Scalar, truncated to the box
// 0 <= e_r <= caps[r]. Monomials leaving the box are dropped, which is the
// quotient by the monomial ideal (x_r^{caps_r + 1}); multiplication stays
// associative and commutative in the quotient.
template <typename Scalar>
class MultiPoly {
public:
  using Terms = std::map<Exponent, Scalar>;

  explicit MultiPoly(std::vector<int> caps) : caps_(std::move(caps)) {
    if (caps_.empty()) throw PreconditionError("polynomial needs at least one variable");
    for (int c : caps_)
      if (c < 0) throw PreconditionError("degree caps must be non-negative");
  }

  static MultiPoly constant(std::vector<int> caps, const Scalar& value) {
    MultiPoly p(std::move(caps));
    p.add_term(Exponent(p.caps_.size(), 0), value);
    return p;
  }

  int nvars() const noexcept { return static_cast<int>(caps_.size()); }
  const std::vector<int>& caps() const noexcept { return caps_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  bool in_box(const Exponent& e) const {
    if (e.size() != caps_.size()) return false;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] < 0 || e[i] > caps_[i]) return false;
    return true;
  }

  // Adds value * x^e; silently drops monomials outside the box.
  void add_term(const Exponent& e, const Scalar& value) {
    if (e.size() != caps_.size()) throw PreconditionError("exponent length does not match variable count");
    if (!in_box(e) || value == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, value);
    if (!inserted) {
      it->second += value;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Scalar coefficient(const Exponent& e) const {
    if (!in_box(e)) throw PreconditionError("exponent exceeds degree caps");
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    require_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.caps_ == b.caps_ && a.terms_ == b.terms_; }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  void require_compatible(const MultiPoly& o) const {
    if (caps_ != o.caps_) throw PreconditionError("polynomials have different variables or degree caps");
  }

private:
  std::vector<int> caps_;
  Terms terms_;
};

template <typename Scalar>
MultiPoly<Scalar> truncated_mul(const MultiPoly<Scalar>& p, const MultiPoly<Scalar>& q) {
  p.require_compatible(q);
  const auto& caps = p.caps();
  MultiPoly<Scalar> out(caps);
  Exponent e(caps.size());
  for (const auto& [ep, cp] : p.terms()) {
    for (const auto& [eq, cq] : q.terms()) {
      bool fits = true;
      for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] = ep[i] + eq[i];
        if (e[i] > caps[i]) {
          fits = false;
          break;
        }
      }
      if (fits) out.add_term(e, cp * cq);
    }
  }
  return out;
}

template <typename Scalar>
Scalar coefficient(const MultiPoly<Scalar>& p, const Exponent& e) {
  return p.coefficient(e);
}

using Poly = MultiPoly<BigInt>;

// sum_u q(u, column) x_u, with caps equal to the factor dimensions.
Poly linear_form(const ConfigurationMatrix& cfg, int column);

std::vector<int> dims_as_caps(const ConfigurationMatrix& cfg);

}  // namespace cicy
