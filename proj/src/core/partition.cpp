#include "anydim/core/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace anydim {

namespace {

std::vector<int> parse_int_list(std::string_view body) {
  std::vector<int> out;
  std::string cur;
  auto flush = [&] {
    std::string t;
    for (char c : cur)
      if (c != ' ' && c != '\t') t += c;
    if (t.empty()) throw std::invalid_argument("empty entry in list");
    for (char c : t)
      if (c < '0' || c > '9') throw std::invalid_argument("bad integer in list: " + t);
    out.push_back(std::stoi(t));
    cur.clear();
  };
  bool any = false;
  for (char c : body) {
    if (c == ',') {
      flush();
    } else {
      cur += c;
      if (c != ' ' && c != '\t') any = true;
    }
  }
  if (any) flush();
  else if (!out.empty()) throw std::invalid_argument("trailing comma");
  return out;
}

std::string_view strip_brackets(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    throw std::invalid_argument("expected bracketed list: " + std::string(text));
  return text.substr(1, text.size() - 2);
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::parse(std::string_view text) {
  return Partition::from_unsorted(parse_int_list(strip_brackets(text)));
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Partition::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + "]";
}

bool operator<(const Partition& a, const Partition& b) {
  int wa = a.weight(), wb = b.weight();
  if (wa != wb) return wa < wb;
  return std::lexicographical_compare(b.parts().begin(), b.parts().end(), a.parts().begin(),
                                      a.parts().end());
}

MultiIndexList::MultiIndexList(std::vector<MultiIndex> entries, int ambient_dim)
    : entries_(std::move(entries)), dim_(ambient_dim) {
  if (dim_ < 1) throw std::invalid_argument("ambient dimension must be positive");
  for (const auto& e : entries_) {
    if (static_cast<int>(e.size()) != dim_)
      throw std::invalid_argument("multi-index length differs from ambient dimension");
    bool nonzero = false;
    for (int v : e) {
      if (v < 0) throw std::invalid_argument("multi-index entries must be nonnegative");
      nonzero = nonzero || v > 0;
    }
    if (!nonzero) throw std::invalid_argument("zero multi-index not allowed");
  }
  std::sort(entries_.begin(), entries_.end(), std::greater<>());
}

MultiIndexList MultiIndexList::from_partition(const Partition& p) {
  std::vector<MultiIndex> e;
  for (int v : p.parts()) e.push_back({v});
  return MultiIndexList(std::move(e), 1);
}

MultiIndexList MultiIndexList::parse(std::string_view text) {
  std::string_view body = strip_brackets(text);
  if (body.find('(') == std::string_view::npos) {
    std::vector<MultiIndex> e;
    for (int v : parse_int_list(body)) e.push_back({v});
    return MultiIndexList(std::move(e), 1);
  }
  std::vector<MultiIndex> entries;
  int dim = -1;
  std::size_t pos = 0;
  while (pos < body.size()) {
    char c = body[pos];
    if (c == ' ' || c == ';') {
      ++pos;
      continue;
    }
    if (c != '(') throw std::invalid_argument("expected '(' in multi-index list");
    auto close = body.find(')', pos);
    if (close == std::string_view::npos) throw std::invalid_argument("unclosed '('");
    MultiIndex m = parse_int_list(body.substr(pos + 1, close - pos - 1));
    if (dim < 0) dim = static_cast<int>(m.size());
    entries.push_back(std::move(m));
    pos = close + 1;
  }
  if (dim < 0) dim = 1;
  return MultiIndexList(std::move(entries), dim);
}

int MultiIndexList::weight() const {
  int w = 0;
  for (const auto& e : entries_)
    for (int v : e) w += v;
  return w;
}

std::string MultiIndexList::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) s += ';';
    s += '(';
    for (std::size_t j = 0; j < entries_[i].size(); ++j) {
      if (j) s += ',';
      s += std::to_string(entries_[i][j]);
    }
    s += ')';
  }
  return s + "]";
}

bool operator<(const MultiIndexList& a, const MultiIndexList& b) {
  if (a.ambient_dim() != b.ambient_dim()) return a.ambient_dim() < b.ambient_dim();
  int wa = a.weight(), wb = b.weight();
  if (wa != wb) return wa < wb;
  return std::lexicographical_compare(b.entries().begin(), b.entries().end(),
                                      a.entries().begin(), a.entries().end());
}

}  // namespace anydim
