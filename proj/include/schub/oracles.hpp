#pragma once

// Brute-force reference implementations used by the self-test and the unit
// tests. None of them call into the lp or transition code paths.

#include <vector>

#include "schub/permutations.hpp"
#include "schub/tableaux.hpp"

namespace schub::oracle {

// All alpha in Z_{>=0}^parts summing to total, lexicographically decreasing.
std::vector<std::vector<int>> compositions(int total, int parts);

// All partitions of size at most max_size, parts decreasing.
std::vector<Partition> partitions_up_to(int max_size);

// Depth-first search over 0/1 fillings column by column, subject to (A)-(C).
bool has_01_point(const Diagram& d, const std::vector<int>& alpha);

bool contains_2143(const Permutation& w);

// w composed with the transposition of positions a and b.
Permutation swap_positions(const Permutation& w, int a, int b);

// max #tau^{-1}(S) over flagged column-injective tableaux, column by column.
int max_fci_preimage(const Diagram& d, SubsetS s);

// Cells not covered by any dot or its east/south rays.
Diagram rothe_by_definition(const Permutation& w, int n);
// (i,j) with w(i) > j, w^{-1}(j) > i, w(i+1) <= j and w^{-1}(j+1) <= i.
std::set<Cell> essential_by_rank(const Permutation& w);

}  // namespace schub::oracle
