#pragma once

#include <optional>
#include <vector>

#include "dars/affine_permutation.hpp"
#include "dars/finite_permutation.hpp"
#include "dars/partition.hpp"
#include "dars/skew_tableau.hpp"
#include "dars/tabloid.hpp"

namespace dars {

std::vector<FinitePermutation> all_finite_permutations(int n);

// All windows with entries in [lo, hi] and pairwise distinct residues,
// optionally filtered by index.  Lexicographic order.
std::vector<AffinePermutation> enumerate_window_box(int n, int lo, int hi,
                                                    std::optional<int> index_filter = {},
                                                    long long cap = 2'000'000);

// Breadth-first ball of Coxeter length <= max_length around the translation
// of the given index, by right multiplication with simple reflections.
std::vector<AffinePermutation> enumerate_by_length(int n, int index, int max_length,
                                                   long long cap = 2'000'000);

std::vector<Partition> partitions_of(int total);
std::vector<Partition> partitions_up_to(int max_total, int max_rows);
std::vector<Partition> partitions_in_box(int max_rows, int max_cols);

std::vector<Tabloid> tabloids_of_shape(const Partition& shape);
std::vector<StandardTableau> standard_tableaux_of_shape(const Partition& shape);

// Nonnegative integer vectors of the given length summing to total.
std::vector<std::vector<int>> compositions_of(int total, int length);

}  // namespace dars
