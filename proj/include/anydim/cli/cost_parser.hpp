#pragma once
#include "anydim/core/partition.hpp"
#include "anydim/core/rational.hpp"
#include "anydim/graphalg/multigraph.hpp"
#include "anydim/optimize/sweep.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace anydim {

enum class AtomFamily { Sym, Mean, GraphDensity, GraphNumbers };

// Atom identifiers: s, m (partitions); sbar, mbar (multi-index lists);
// hom, inj, mg, t, tinj, tc, tinjc (graphs). tc and tinjc are evaluated on
// the entrywise complement 1 - X.
struct CostAtom {
  std::string ident;
  std::variant<Partition, MultiIndexList, GraphClass> arg;
  AtomFamily family() const;
  int degree() const;
  std::string to_string() const;
  bool operator==(const CostAtom& o) const { return ident == o.ident && arg == o.arg; }
};
bool operator<(const CostAtom& a, const CostAtom& b);

struct CostTerm {
  Rational coeff;
  CostAtom atom;
  bool operator==(const CostTerm&) const = default;
};

// Canonical form: equal atoms merged, zero terms dropped, sorted by atom.
struct CostExpr {
  std::vector<CostTerm> terms;
  AtomFamily family() const;  // Sym for the empty expression
  int degree() const;
  bool operator==(const CostExpr&) const = default;
};

class CostParseError : public std::invalid_argument {
 public:
  CostParseError(const std::string& what, std::size_t offset);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

constexpr int kMaxCostDegree = 6;

// expr := term (('+'|'-') term)*, term := [rational ['*']] atom,
// rational := int ['/' int], atom := ident '[' ... ']' | ident '{' edges '}'
// | ident '(' name ')' | shortcut. Graph atoms take 1-based edge lists in
// braces or a graph name in brackets or parentheses. A shortcut is the name
// of a stored cost (see named_cost_text).
CostExpr parse_cost(std::string_view text);
std::string print_cost(const CostExpr& e);
CostExpr canonicalize(const CostExpr& e);

// Stored costs: goodman, ramsey, bad-quartic, quadratic, mfg, graph-numbers.
bool is_named_cost(std::string_view name);
std::string named_cost_text(std::string_view name);
std::vector<std::string> named_costs();

// Setting implied by the atoms.
Setting infer_setting(const CostExpr& e);
CostPoly to_cost_poly(const CostExpr& e);
CostExpr from_cost_poly(const CostPoly& p);

}  // namespace anydim
