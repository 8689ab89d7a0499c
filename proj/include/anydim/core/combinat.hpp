#pragma once

#include "anydim/core/partition.hpp"
#include "anydim/core/rational.hpp"

#include <cstdint>
#include <vector>

namespace anydim {

// Partitions of exactly w, reverse-lex: (w), (w-1,1), ..., (1,...,1).
std::vector<Partition> partitions_of(int w);
// All partitions of weight <= d in canonical order, starting with ().
std::vector<Partition> partitions_up_to(int d);

// Number of surjections [len lam] -> [len mu] whose fiber sums reproduce mu.
std::uint64_t refinement_count(const Partition& lam, const Partition& mu);
// Product of factorials of part multiplicities.
std::uint64_t aut_count_partition(const Partition& lam);

BigInt falling_factorial(long long k, long long l);
BigInt factorial(long long n);
// Product of factorials of the parts.
BigInt parts_factorial(const Partition& lam);

}  // namespace anydim
