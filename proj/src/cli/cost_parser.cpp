#include "anydim/cli/cost_parser.hpp"

#include "anydim/graphalg/counts.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>

namespace anydim {

namespace {

constexpr std::array<std::string_view, 11> kIdents = {"s",   "m", "sbar", "mbar", "hom", "inj",
                                                      "mg",  "t", "tinj", "tc",   "tinjc"};

int ident_rank(std::string_view id) {
  auto it = std::find(kIdents.begin(), kIdents.end(), id);
  return it == kIdents.end() ? -1 : static_cast<int>(it - kIdents.begin());
}

const std::map<std::string, std::string, std::less<>>& named_table() {
  static const std::map<std::string, std::string, std::less<>> table = {
      {"bad-quartic", "4*s[4] - 139/20*s[3,1] + 4*s[2,2] - 5*s[2,1,1] + 4*s[1,1,1,1]"},
      {"goodman", "t[K3] - 2*t[K2uK2] + t[K2]"},
      {"graph-numbers", "inj[P3] - inj[K2uK2]"},
      {"mfg", "5*sbar[1,1] - 4*sbar[2,1] - sbar[1]"},
      {"quadratic", "s[2]"},
      {"ramsey", "t[K3pendant] + tc[K3pendant]"},
  };
  return table;
}

class Parser {
 public:
  explicit Parser(std::string_view text, int depth = 0) : s_(text), depth_(depth) {}

  std::vector<CostTerm> parse_expr() {
    skip_ws();
    if (at_end()) fail("empty cost expression", pos_);
    std::vector<CostTerm> out;
    Rational sign = 1;
    if (peek() == '+' || peek() == '-') {
      if (peek() == '-') sign = -1;
      ++pos_;
    }
    while (true) {
      for (auto& t : parse_term(sign)) out.push_back(std::move(t));
      skip_ws();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') fail(std::string("expected '+' or '-', found '") + peek() + "'", pos_);
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    return out;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
  int depth_;
  std::optional<AtomFamily> family_;

  [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
    throw CostParseError(msg + " at offset " + std::to_string(at), at);
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  BigInt parse_int() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected an integer", start);
    return BigInt(std::string(s_.substr(start, pos_ - start)));
  }

  std::vector<CostTerm> parse_term(const Rational& sign) {
    skip_ws();
    if (at_end()) fail("expected a term", pos_);
    Rational coeff = 1;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      BigInt num = parse_int();
      BigInt den = 1;
      skip_ws();
      if (!at_end() && peek() == '/') {
        ++pos_;
        skip_ws();
        std::size_t at = pos_;
        den = parse_int();
        if (den == 0) fail("zero denominator", at);
      }
      coeff = Rational(num, den);
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
      }
    }
    if (at_end()) fail("expected an atom", pos_);
    return parse_atom(sign * coeff);
  }

  // Text between `open` at pos_ and the matching closer; pos_ ends past it.
  std::string_view delimited(char close) {
    std::size_t start = ++pos_;
    std::size_t end = s_.find(close, start);
    if (end == std::string_view::npos) fail(std::string("expected '") + close + "'", s_.size());
    pos_ = end + 1;
    return s_.substr(start, end - start);
  }

  Partition parse_parts(std::string_view body, std::size_t base) {
    std::vector<int> parts;
    std::size_t i = 0;
    auto ws = [&] {
      while (i < body.size() && std::isspace(static_cast<unsigned char>(body[i]))) ++i;
    };
    ws();
    if (i == body.size()) return Partition();
    while (true) {
      ws();
      std::size_t start = i;
      while (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i]))) ++i;
      if (start == i) fail("expected a positive part", base + start);
      int v = std::stoi(std::string(body.substr(start, i - start)));
      if (v < 1) fail("parts must be positive", base + start);
      parts.push_back(v);
      ws();
      if (i == body.size()) break;
      if (body[i] != ',') fail("expected ',' between parts", base + i);
      ++i;
    }
    return Partition::from_unsorted(parts);
  }

  std::vector<CostTerm> parse_atom(const Rational& coeff) {
    const std::size_t start = pos_;
    if (!std::isalpha(static_cast<unsigned char>(peek()))) fail("expected an atom", start);
    while (!at_end()) {
      char c = peek();
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
        ++pos_;
      } else if (c == '-' && pos_ + 1 < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_ + 1]))) {
        ++pos_;
      } else {
        break;
      }
    }
    std::string ident(s_.substr(start, pos_ - start));
    skip_ws();
    const bool has_arg = !at_end() && (peek() == '[' || peek() == '{' || peek() == '(');
    if (ident_rank(ident) < 0) {
      if (has_arg) fail("unknown atom '" + ident + "'", start);
      if (!is_named_cost(ident)) fail("unknown shortcut '" + ident + "'", start);
      if (depth_ > 2) fail("shortcut nesting too deep", start);
      std::vector<CostTerm> inner = Parser(named_cost_text(ident), depth_ + 1).parse_expr();
      for (auto& t : inner) {
        t.coeff *= coeff;
        check_family(t.atom, start);
      }
      return inner;
    }
    if (!has_arg) fail("expected '[' after '" + ident + "'", pos_);
    const char open = peek();
    const std::size_t body_at = pos_ + 1;
    CostAtom atom;
    atom.ident = ident;
    if (ident == "s" || ident == "m") {
      if (open != '[') fail("expected '[' after '" + ident + "'", pos_);
      atom.arg = parse_parts(delimited(']'), body_at);
    } else if (ident == "sbar" || ident == "mbar") {
      if (open != '[') fail("expected '[' after '" + ident + "'", pos_);
      std::string_view body = delimited(']');
      try {
        atom.arg = MultiIndexList::parse("[" + std::string(body) + "]");
      } catch (const std::invalid_argument& e) {
        fail(e.what(), body_at);
      }
    } else {
      std::string_view body = delimited(open == '{' ? '}' : open == '[' ? ']' : ')');
      try {
        if (open == '{') {
          atom.arg = GraphClass(parse_graph("{" + std::string(body) + "}"));
        } else {
          std::string name;
          for (char c : body)
            if (!std::isspace(static_cast<unsigned char>(c))) name += c;
          if (!is_named_graph(name)) fail("unknown graph name '" + name + "'", body_at);
          atom.arg = GraphClass(named_graph(name));
        }
      } catch (const CostParseError&) {
        throw;
      } catch (const std::invalid_argument& e) {
        fail(e.what(), body_at);
      }
    }
    if (atom.degree() > kMaxCostDegree)
      fail("atom degree " + std::to_string(atom.degree()) + " exceeds " + std::to_string(kMaxCostDegree), start);
    check_family(atom, start);
    return {CostTerm{coeff, std::move(atom)}};
  }

  void check_family(const CostAtom& atom, std::size_t at) {
    AtomFamily f = atom.family();
    if (!family_) family_ = f;
    else if (*family_ != f) fail("cannot mix atoms of different settings ('" + atom.ident + "')", at);
  }
};

}  // namespace

CostParseError::CostParseError(const std::string& what, std::size_t offset)
    : std::invalid_argument(what), offset_(offset) {}

AtomFamily CostAtom::family() const {
  if (ident == "s" || ident == "m") return AtomFamily::Sym;
  if (ident == "sbar" || ident == "mbar") return AtomFamily::Mean;
  if (ident == "t" || ident == "tinj" || ident == "tc" || ident == "tinjc") return AtomFamily::GraphDensity;
  return AtomFamily::GraphNumbers;
}

int CostAtom::degree() const {
  return std::visit([](const auto& a) { return a.weight(); }, arg);
}

std::string CostAtom::to_string() const {
  return ident + std::visit([](const auto& a) { return a.to_string(); }, arg);
}

bool operator<(const CostAtom& a, const CostAtom& b) {
  int ra = ident_rank(a.ident), rb = ident_rank(b.ident);
  if (ra != rb) return ra < rb;
  return a.arg < b.arg;
}

AtomFamily CostExpr::family() const { return terms.empty() ? AtomFamily::Sym : terms.front().atom.family(); }

int CostExpr::degree() const {
  int d = 0;
  for (const auto& t : terms) d = std::max(d, t.atom.degree());
  return d;
}

CostExpr canonicalize(const CostExpr& e) {
  std::vector<CostTerm> terms = e.terms;
  std::stable_sort(terms.begin(), terms.end(), [](const CostTerm& a, const CostTerm& b) { return a.atom < b.atom; });
  CostExpr out;
  for (auto& t : terms) {
    if (!out.terms.empty() && out.terms.back().atom == t.atom) out.terms.back().coeff += t.coeff;
    else out.terms.push_back(std::move(t));
    if (out.terms.back().coeff == 0) out.terms.pop_back();
  }
  return out;
}

CostExpr parse_cost(std::string_view text) {
  CostExpr e;
  e.terms = Parser(text).parse_expr();
  return canonicalize(e);
}

std::string print_cost(const CostExpr& e) {
  if (e.terms.empty()) return "0*s[]";
  std::string out;
  for (std::size_t i = 0; i < e.terms.size(); ++i) {
    const auto& t = e.terms[i];
    Rational c = t.coeff;
    if (i == 0) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (c < 0) c = -c;
    if (c != 1) out += anydim::to_string(c) + "*";
    out += t.atom.to_string();
  }
  return out;
}

bool is_named_cost(std::string_view name) { return named_table().count(name) > 0; }

std::string named_cost_text(std::string_view name) {
  auto it = named_table().find(name);
  if (it == named_table().end()) throw std::invalid_argument("unknown shortcut '" + std::string(name) + "'");
  return it->second;
}

std::vector<std::string> named_costs() {
  std::vector<std::string> out;
  for (const auto& [k, v] : named_table()) out.push_back(k);
  return out;
}

Setting infer_setting(const CostExpr& e) {
  switch (e.family()) {
    case AtomFamily::Sym: return Setting::Symfunc;
    case AtomFamily::Mean: return Setting::Means;
    case AtomFamily::GraphDensity: return Setting::GraphDensity;
    case AtomFamily::GraphNumbers: return Setting::GraphNumbers;
  }
  return Setting::Symfunc;
}

namespace {

GraphBasis graph_basis(const std::string& id) {
  if (id == "hom") return GraphBasis::Hom;
  if (id == "inj") return GraphBasis::Inj;
  if (id == "mg") return GraphBasis::MGraphSum;
  if (id == "t" || id == "tc") return GraphBasis::T;
  return GraphBasis::TInj;
}

}  // namespace

CostPoly to_cost_poly(const CostExpr& e) {
  for (const auto& t : e.terms)
    if (t.atom.family() != e.family()) throw std::invalid_argument("cannot mix atoms of different settings");
  switch (e.family()) {
    case AtomFamily::Sym: {
      bool all_m = true;
      for (const auto& t : e.terms)
        if (t.atom.ident == "s") all_m = false;
      if (all_m && !e.terms.empty()) {
        SymPoly p(SymBasis::Monomial);
        for (const auto& t : e.terms) p.add(std::get<Partition>(t.atom.arg), t.coeff);
        return p;
      }
      SymPoly s(SymBasis::PowerSum), m(SymBasis::Monomial);
      for (const auto& t : e.terms) (t.atom.ident == "s" ? s : m).add(std::get<Partition>(t.atom.arg), t.coeff);
      return s + m_to_s(m);
    }
    case AtomFamily::Mean: {
      const std::string& id = e.terms.front().atom.ident;
      MeanPoly p(id == "sbar" ? MeanBasis::PowerMean : MeanBasis::MonomialMean);
      int dim = -1;
      for (const auto& t : e.terms) {
        if (t.atom.ident != id) throw std::invalid_argument("cannot mix sbar and mbar atoms in one cost");
        const auto& a = std::get<MultiIndexList>(t.atom.arg);
        if (!a.empty()) {
          if (dim >= 0 && a.ambient_dim() != dim) throw std::invalid_argument("mean atoms have different dimensions");
          dim = a.ambient_dim();
        }
        p.add(a, t.coeff);
      }
      return p;
    }
    case AtomFamily::GraphDensity: {
      std::optional<GraphBasis> basis;
      for (const auto& t : e.terms) {
        GraphBasis b = graph_basis(t.atom.ident);
        if (basis && *basis != b) throw std::invalid_argument("cannot mix t and tinj atoms in one cost");
        basis = b;
      }
      GraphCost c{GraphPoly(*basis), GraphPoly(*basis)};
      for (const auto& t : e.terms) {
        bool comp = t.atom.ident == "tc" || t.atom.ident == "tinjc";
        (comp ? c.complement : c.direct).add(std::get<GraphClass>(t.atom.arg), t.coeff);
      }
      return c;
    }
    case AtomFamily::GraphNumbers: {
      std::optional<GraphBasis> basis;
      bool mixed = false;
      for (const auto& t : e.terms) {
        GraphBasis b = graph_basis(t.atom.ident);
        if (basis && *basis != b) mixed = true;
        basis = b;
      }
      if (!mixed) {
        GraphPoly p(*basis);
        for (const auto& t : e.terms) p.add(std::get<GraphClass>(t.atom.arg), t.coeff);
        return GraphCost(p);
      }
      GraphPoly out(GraphBasis::MGraphSum);
      for (const auto& t : e.terms) {
        GraphPoly one(graph_basis(t.atom.ident));
        one.add(std::get<GraphClass>(t.atom.arg), t.coeff);
        out += one.basis() == GraphBasis::MGraphSum ? one : hom_to_m(one);
      }
      return GraphCost(out);
    }
  }
  throw std::invalid_argument("unknown atom family");
}

CostExpr from_cost_poly(const CostPoly& p) {
  CostExpr e;
  if (const auto* s = std::get_if<SymPoly>(&p)) {
    for (const auto& [lam, c] : s->terms()) e.terms.push_back({c, {basis_name(s->basis()), lam}});
  } else if (const auto* m = std::get_if<MeanPoly>(&p)) {
    for (const auto& [a, c] : m->terms()) e.terms.push_back({c, {basis_name(m->basis()), a}});
  } else {
    const auto& g = std::get<GraphCost>(p);
    for (const auto& [h, c] : g.direct.terms()) e.terms.push_back({c, {basis_name(g.direct.basis()), h}});
    const std::string comp = g.complement.basis() == GraphBasis::T ? "tc" : "tinjc";
    if (!g.complement.is_zero() && g.complement.basis() != GraphBasis::T && g.complement.basis() != GraphBasis::TInj)
      throw std::invalid_argument("complement terms need a density basis");
    for (const auto& [h, c] : g.complement.terms()) e.terms.push_back({c, {comp, h}});
  }
  return canonicalize(e);
}

}  // namespace anydim
