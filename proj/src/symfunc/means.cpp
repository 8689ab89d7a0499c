#include "anydim/symfunc/means.hpp"

#include <algorithm>

namespace anydim {

std::string basis_name(MeanBasis b) { return b == MeanBasis::PowerMean ? "sbar" : "mbar"; }

std::string to_string(const MeanPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [atom, c] : p.terms()) {
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
    out += basis_name(p.basis()) + atom.to_string();
  }
  return out;
}

MeanPoly dualize_means(const MeanPoly& p) {
  if (p.basis() != MeanBasis::PowerMean)
    throw std::invalid_argument("dualize expects power-mean input");
  MeanPoly q(MeanBasis::MonomialMean);
  for (const auto& [atom, c] : p.terms()) q.add(atom, c);
  return q;
}

int max_atom_len(const MeanPoly& p) {
  int out = 0;
  for (const auto& [atom, c] : p.terms()) out = std::max(out, atom.len());
  return out;
}

}  // namespace anydim
