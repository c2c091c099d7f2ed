#pragma once

#include <vector>

namespace ruijops {

// Multi-index in N^n; also used for subsets (as sorted index lists) and for
// integer compositions.
using MultiIndex = std::vector<int>;

int mi_total(const MultiIndex& mu);
std::vector<int> mi_support(const MultiIndex& mu);
MultiIndex mi_sum(const MultiIndex& a, const MultiIndex& b);

// Indicator vector of a subset of {0,...,n-1}.
MultiIndex mi_from_subset(int n, const std::vector<int>& subset);

// All mu in N^n with |mu| = total, lexicographic order.
std::vector<MultiIndex> enumerate_multiindices(int n, int total);

// All r-element subsets of {0,...,n-1} as increasing index lists.
std::vector<std::vector<int>> enumerate_subsets(int n, int r);

// All subsets of {0,...,n-1} in size-then-lex order.
std::vector<std::vector<int>> enumerate_all_subsets(int n);

// All compositions of l into d positive parts (d ranging over 1..l when
// d == 0 is passed).
std::vector<std::vector<int>> enumerate_compositions(int l, int d = 0);

}  // namespace ruijops
