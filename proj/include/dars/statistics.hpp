#pragma once

#include <vector>

#include "dars/partition.hpp"

namespace dars {

// Deficiency statistic of a sequence over a two-value alphabet {x, x+1}:
// the smallest d >= 0 such that for every i > 0, whenever the (d+i)-th
// occurrence of x+1 exists it is preceded by at least i occurrences of x.
// `x` is the smaller alphabet value; entries must lie in {x, x+1}.
int d_statistic(const std::vector<int>& seq, int x);

// Convenience overload that infers x: two distinct values pick x = min; a
// constant sequence reads its sole value as x (giving 0).  More than two
// distinct values, or a gap bigger than 1, is a usage error.
int d_statistic(const std::vector<int>& seq);

// max(d(a), d(b)) over a shared alphabet {x, x+1}.
int delta_statistic(const std::vector<int>& a, const std::vector<int>& b, int x);
int delta_statistic(const std::vector<int>& a, const std::vector<int>& b);

// Smallest inner shape admitting a skew standard filling with the given
// column word (word[k-1] = column of entry k; entries >= 1).  Smallest is
// componentwise: the result is contained in every admissible inner shape.
Partition minimal_inner_shape(const std::vector<int>& word);

// Simultaneous version: smallest inner shape admitting skew standard
// fillings for both column words at once (the words must use each column
// equally often, i.e. describe a common shape).
Partition minimal_inner_shape_pair(const std::vector<int>& word_a,
                                   const std::vector<int>& word_b);

}  // namespace dars
