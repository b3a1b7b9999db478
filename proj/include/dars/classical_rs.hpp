#pragma once

#include <string>
#include <vector>

#include "dars/finite_permutation.hpp"
#include "dars/skew_tableau.hpp"

namespace dars {

struct RsPair {
    StandardTableau p;
    StandardTableau q;
    friend bool operator==(const RsPair&, const RsPair&) = default;
};

// Row insertion of w(1), ..., w(n); q records insertion order.
RsPair rs_insertion(const FinitePermutation& w);

// Local-rule growth on the (n+1) x (n+1) vertex grid with empty partitions
// on the north and west boundaries; p is read along the south boundary
// (left to right), q along the east boundary (top to bottom).
RsPair rs_growth(const FinitePermutation& w);

// Iterated shadow-line passes: pass k produces the k-th rows of p (exit
// rows of each line) and q (entry columns of each line).
RsPair rs_shadow(const FinitePermutation& w);

// Dual local rules on the n x n edge grid with zero labels on the north and
// east boundaries.  `west` collects the column-addition chain down the west
// boundary, `south` the chain along the south boundary right to left.  The
// relation to row insertion: west == rs_insertion(w).p and
// evacuation(south) == rs_insertion(w).q.
struct DualRsResult {
    StandardTableau west;
    StandardTableau south;
};
DualRsResult dual_rs(const FinitePermutation& w);

// Edge labels on the n x n grid, 0 meaning unlabeled.
// horizontal[r][c-1]: edge on row line r (0..n) in tile column c (1..n);
// vertical[r-1][c]:   edge on column line c (0..n) in tile row r (1..n).
struct ClassicalEdgeLabels {
    std::vector<std::vector<int>> horizontal;
    std::vector<std::vector<int>> vertical;
    friend bool operator==(const ClassicalEdgeLabels&, const ClassicalEdgeLabels&) = default;
};

// Labels where consecutive growth vertices differ: the label is the row of
// the added box.
ClassicalEdgeLabels growth_edge_labels(const FinitePermutation& w);
// Labels from geometric shadow lines: the label is the pass number of the
// line crossing the edge.
ClassicalEdgeLabels shadow_edge_labels(const FinitePermutation& w);

// Number of shadow lines in each pass (pass k count == size of row k).
std::vector<int> shadow_pass_line_counts(const FinitePermutation& w);

// Cross-checks all four realizations on the whole symmetric group S_n.
struct CellInvariantReport {
    int cases = 0;
    int failures = 0;
    std::vector<std::string> details;  // one entry per failing permutation
};
CellInvariantReport classical_cell_invariants(int n, int max_n_allowed = 7);

}  // namespace dars
