#pragma once

#include "anydim/core/rational.hpp"

#include <algorithm>
#include <map>

namespace anydim {

// Sparse exact linear combination of basis atoms, tagged with the basis it is
// expressed in. Zero coefficients are never stored.
template <class Atom, class Tag>
class BasisPoly {
 public:
  using Terms = std::map<Atom, Rational>;

  BasisPoly() = default;
  explicit BasisPoly(Tag basis) : basis_(basis) {}

  Tag basis() const { return basis_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add(const Atom& atom, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(atom, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Rational coeff(const Atom& atom) const {
    auto it = terms_.find(atom);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  int degree() const {
    int d = 0;
    for (const auto& [a, c] : terms_) d = std::max(d, a.weight());
    return d;
  }

  BasisPoly& operator+=(const BasisPoly& o) {
    for (const auto& [a, c] : o.terms_) add(a, c);
    return *this;
  }
  BasisPoly& operator-=(const BasisPoly& o) {
    for (const auto& [a, c] : o.terms_) add(a, -c);
    return *this;
  }
  BasisPoly& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [a, c] : terms_) c *= s;
    return *this;
  }

  friend BasisPoly operator+(BasisPoly a, const BasisPoly& b) { return a += b; }
  friend BasisPoly operator-(BasisPoly a, const BasisPoly& b) { return a -= b; }
  friend BasisPoly operator*(const Rational& s, BasisPoly a) { return a *= s; }

  bool operator==(const BasisPoly& o) const { return basis_ == o.basis_ && terms_ == o.terms_; }

 private:
  Tag basis_{};
  Terms terms_;
};

}  // namespace anydim
