#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace anydim {

// Weakly decreasing list of positive parts. The empty partition is the
// constant atom.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  static Partition from_unsorted(std::vector<int> parts);
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const;
  int len() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }

  // "[3,1]", "[]"
  std::string to_string() const;

  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

// Canonical order: weight ascending, then reverse-lex, so (2) < (1,1).
bool operator<(const Partition& a, const Partition& b);

using MultiIndex = std::vector<int>;

// Sorted (lex descending) list of nonzero multi-indices in N^dim.
class MultiIndexList {
 public:
  MultiIndexList() = default;
  MultiIndexList(std::vector<MultiIndex> entries, int ambient_dim);
  // Accepts "[(2,0);(1,1)]", or "[2,1]" as shorthand when ambient_dim is 1.
  static MultiIndexList parse(std::string_view text);
  static MultiIndexList from_partition(const Partition& p);

  const std::vector<MultiIndex>& entries() const { return entries_; }
  int ambient_dim() const { return dim_; }
  int weight() const;
  int len() const { return static_cast<int>(entries_.size()); }
  bool empty() const { return entries_.empty(); }

  std::string to_string() const;

  bool operator==(const MultiIndexList&) const = default;

 private:
  std::vector<MultiIndex> entries_;
  int dim_ = 1;
};

bool operator<(const MultiIndexList& a, const MultiIndexList& b);

}  // namespace anydim
