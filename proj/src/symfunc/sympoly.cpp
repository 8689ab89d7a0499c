#include "anydim/symfunc/sympoly.hpp"

namespace anydim {

std::string basis_name(SymBasis b) { return b == SymBasis::PowerSum ? "s" : "m"; }

std::string to_string(const SymPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [lam, c] : p.terms()) {
    Rational a = c;
    if (!first) {
      out += a < 0 ? " - " : " + ";
      if (a < 0) a = -a;
    } else if (a < 0) {
      out += "-";
      a = -a;
    }
    first = false;
    if (a != 1) out += anydim::to_string(a) + "*";
    out += basis_name(p.basis()) + lam.to_string();
  }
  return out;
}

SymPoly s_to_m(const SymPoly& p) {
  if (p.basis() != SymBasis::PowerSum) throw std::invalid_argument("s_to_m expects s-basis input");
  SymPoly out(SymBasis::Monomial);
  for (const auto& [lam, c] : p.terms()) {
    if (lam.empty()) {
      out.add(lam, c);
      continue;
    }
    for (const auto& mu : partitions_of(lam.weight())) {
      if (mu.len() > lam.len()) continue;
      auto r = refinement_count(lam, mu);
      if (r) out.add(mu, c * Rational(static_cast<long long>(r)));
    }
  }
  return out;
}

SymPoly m_to_s(const SymPoly& p) {
  if (p.basis() != SymBasis::Monomial) throw std::invalid_argument("m_to_s expects m-basis input");
  SymPoly rest = p;
  SymPoly out(SymBasis::PowerSum);
  while (!rest.is_zero()) {
    // the finest remaining atom only receives contributions from its own s-term
    auto finest = rest.terms().begin();
    for (auto it = rest.terms().begin(); it != rest.terms().end(); ++it)
      if (it->first.len() > finest->first.len()) finest = it;
    Partition lam = finest->first;
    Rational c = finest->second / Rational(static_cast<long long>(aut_count_partition(lam)));
    out.add(lam, c);
    SymPoly single(SymBasis::PowerSum);
    single.add(lam, c);
    rest -= s_to_m(single);
  }
  return out;
}

}  // namespace anydim
