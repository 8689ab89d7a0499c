#include "anydim/graphalg/multigraph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace anydim {

MultiGraph::MultiGraph(int n_vertices) : adj_(n_vertices, n_vertices, 0) {}

MultiGraph::MultiGraph(Matrix<int> adjacency) : adj_(std::move(adjacency)) {
  if (adj_.rows() != adj_.cols()) throw std::invalid_argument("adjacency must be square");
  if (!adj_.is_symmetric()) throw std::invalid_argument("adjacency must be symmetric");
  for (int v : adj_.data())
    if (v < 0) throw std::invalid_argument("negative edge multiplicity");
}

MultiGraph MultiGraph::from_edges(int n_vertices, const std::vector<std::pair<int, int>>& edges) {
  MultiGraph g(n_vertices);
  for (auto [i, j] : edges) g.add_edge(i, j);
  return g;
}

void MultiGraph::add_edge(int i, int j, int multiplicity) {
  if (i < 0 || j < 0 || i >= n_vertices() || j >= n_vertices())
    throw std::invalid_argument("edge endpoint out of range");
  adj_(i, j) += multiplicity;
  if (i != j) adj_(j, i) += multiplicity;
}

int MultiGraph::total_weight() const {
  int w = 0;
  for (int i = 0; i < n_vertices(); ++i)
    for (int j = i; j < n_vertices(); ++j) w += adj_(i, j);
  return w;
}

int MultiGraph::degree(int v) const {
  int d = 0;
  for (int j = 0; j < n_vertices(); ++j) d += adj_(v, j);
  return d;
}

bool MultiGraph::has_loop() const {
  for (int i = 0; i < n_vertices(); ++i)
    if (adj_(i, i)) return true;
  return false;
}

MultiGraph MultiGraph::without_isolated() const {
  std::vector<int> keep;
  for (int v = 0; v < n_vertices(); ++v)
    if (degree(v) > 0) keep.push_back(v);
  return relabeled(keep);
}

MultiGraph MultiGraph::relabeled(const std::vector<int>& perm) const {
  const int m = static_cast<int>(perm.size());
  MultiGraph out(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) out.adj_(i, j) = adj_(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
  return out;
}

bool operator<(const GraphClass& a, const GraphClass& b) {
  if (a.edge_count() != b.edge_count()) return a.edge_count() < b.edge_count();
  if (a.n_vertices() != b.n_vertices()) return a.n_vertices() < b.n_vertices();
  return a.representative().adjacency().data() < b.representative().adjacency().data();
}

std::string GraphClass::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int i = 0; i < rep_.n_vertices(); ++i)
    for (int j = i; j < rep_.n_vertices(); ++j)
      for (int m = 0; m < rep_(i, j); ++m) {
        if (!first) s += ',';
        first = false;
        s += std::to_string(i + 1) + "-" + std::to_string(j + 1);
      }
  return s + "}";
}

namespace {

const std::map<std::string, std::vector<std::pair<int, int>>, std::less<>>& named_table() {
  static const std::map<std::string, std::vector<std::pair<int, int>>, std::less<>> table = {
      {"K1", {}},
      {"loop", {{1, 1}}},
      {"K2", {{1, 2}}},
      {"K3", {{1, 2}, {2, 3}, {1, 3}}},
      {"K4", {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}},
      {"P3", {{1, 2}, {2, 3}}},
      {"P4", {{1, 2}, {2, 3}, {3, 4}}},
      {"C4", {{1, 2}, {2, 3}, {3, 4}, {1, 4}}},
      {"K2uK2", {{1, 2}, {3, 4}}},
      {"K3pendant", {{1, 2}, {2, 3}, {1, 3}, {3, 4}}},
  };
  return table;
}

}  // namespace

bool is_named_graph(std::string_view name) { return named_table().count(name) > 0; }

MultiGraph named_graph(std::string_view name) {
  auto it = named_table().find(name);
  if (it == named_table().end()) throw std::invalid_argument("unknown shortcut: " + std::string(name));
  int n = name == "K1" ? 1 : 0;
  for (auto [a, b] : it->second) n = std::max({n, a, b});
  MultiGraph g(n);
  for (auto [a, b] : it->second) g.add_edge(a - 1, b - 1);
  return g;
}

MultiGraph parse_graph(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (!text.empty() && text.front() == 'H') text.remove_prefix(1);
  if (text.size() < 2 || text.front() != '{' || text.back() != '}') return named_graph(text);
  std::string_view body = text.substr(1, text.size() - 2);
  std::vector<std::pair<int, int>> edges;
  int n = 0;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    auto comma = body.find(',', pos);
    if (comma == std::string_view::npos) comma = body.size();
    std::string tok;
    for (char c : body.substr(pos, comma - pos))
      if (c != ' ') tok += c;
    if (tok.empty()) {
      if (comma == body.size() && edges.empty()) break;
      throw std::invalid_argument("empty edge in edge list");
    }
    auto dash = tok.find('-');
    if (dash == std::string::npos) throw std::invalid_argument("edge needs the form i-j: " + tok);
    auto num = [&](const std::string& s) {
      if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw std::invalid_argument("bad vertex label: " + s);
      int v = std::stoi(s);
      if (v < 1) throw std::invalid_argument("vertex labels start at 1");
      return v;
    };
    int a = num(tok.substr(0, dash)), b = num(tok.substr(dash + 1));
    edges.emplace_back(a - 1, b - 1);
    n = std::max({n, a, b});
    pos = comma + 1;
  }
  return MultiGraph::from_edges(n, edges);
}

std::string basis_name(GraphBasis b) {
  switch (b) {
    case GraphBasis::Hom: return "hom";
    case GraphBasis::Inj: return "inj";
    case GraphBasis::T: return "t";
    case GraphBasis::TInj: return "tinj";
    case GraphBasis::MGraphSum: return "mg";
  }
  return "?";
}

std::string to_string(const GraphPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [g, c] : p.terms()) {
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
    out += basis_name(p.basis()) + g.to_string();
  }
  return out;
}

int max_vertices(const GraphPoly& p) {
  int out = 0;
  for (const auto& [g, c] : p.terms()) out = std::max(out, g.n_vertices());
  return out;
}

MultiGraph multigraph_quotient(const MultiGraph& g, const FiniteMap& f) {
  if (f.source_size() != g.n_vertices()) throw std::invalid_argument("map source differs from vertex count");
  MultiGraph out(f.target_size());
  for (int i = 0; i < g.n_vertices(); ++i)
    for (int j = i; j < g.n_vertices(); ++j)
      if (g(i, j)) out.add_edge(f(i), f(j), g(i, j));
  return out;
}

SimpleGraphStream::SimpleGraphStream(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("graph size must be positive");
  if (n > kSimpleGraphStreamLimit) throw std::invalid_argument("size limit: at most 8 vertices");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs_.emplace_back(i, j);
}

Matrix<int> SimpleGraphStream::at(std::uint64_t index) const {
  Matrix<int> x(n_, n_, 0);
  for (std::size_t b = 0; b < pairs_.size(); ++b)
    if ((index >> b) & 1) {
      x(pairs_[b].first, pairs_[b].second) = 1;
      x(pairs_[b].second, pairs_[b].first) = 1;
    }
  return x;
}

SimpleGraphStream enumerate_simple_graphs(int n) { return SimpleGraphStream(n); }

}  // namespace anydim
