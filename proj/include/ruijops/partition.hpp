#pragma once

#include <vector>

#include "ruijops/errors.hpp"

namespace ruijops {

// Weakly decreasing list of nonnegative parts; trailing zeros allowed on
// input but canonical form is trimmed.
using Partition = std::vector<int>;

bool is_partition(const Partition& lam);
int partition_weight(const Partition& lam);
int partition_length(const Partition& lam);

Partition trim(Partition lam);
Partition pad(Partition lam, int n);

// Sorts arbitrary nonnegative entries into a partition.
Partition sort_to_partition(std::vector<int> v);

// Dominance comparison for equal weights: every prefix sum of `hi` is at
// least the matching prefix sum of `lo`.
bool dominates(const Partition& hi, const Partition& lo);

// All partitions of k with at most max_length parts, descending lex order.
std::vector<Partition> partitions_of(int k, int max_length);

}  // namespace ruijops
