#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dars/affine_permutation.hpp"
#include "dars/growth_region.hpp"
#include "dars/partition.hpp"
#include "dars/skew_tableau.hpp"
#include "dars/tabloid.hpp"

namespace dars {

// Image of an extended affine permutation under the dual affine
// Robinson-Schensted correspondence: two tabloids of the same shape mu
// (a partition of n), an inner shape lambda, and the index n0 of the first
// stable window of the growth diagram.
struct DarsTuple {
    Tabloid p;
    Tabloid q;
    Partition lambda;
    int n0 = 0;

    int n() const { return p.n(); }
    // The index of every preimage: n * (n0 - 2) - |lambda|.
    int index() const;

    friend bool operator==(const DarsTuple&, const DarsTuple&) = default;
};

// Forward correspondence.  Builds the growth diagram of w, finds the first
// stable window n0, and reads the tuple off that window's boundary: row i of
// p collects the positions whose east-edge colour is i (top to bottom), row
// i of q the positions whose north-edge colour is i (right to left), and
// lambda is the vertex partition at the window's north-east corner.
DarsTuple forward(const AffinePermutation& w, const GrowthLimits& limits = GrowthLimits{});

// Finite dual-rule diagram used by the saturation test: an n-by-n grid with
// no marked tiles, swept from boundary labels given by the column words of
// two same-shape skew fillings (north edges, right to left, from q's; east
// edges, top to bottom, from p's).  Every tile is a bump (equal north and
// east labels) or a crossing, and the lines entering from the north or
// reaching the east boundary are traced and painted with the row index of
// the seeding entry.
struct OmegaDiagram {
    int n = 0;
    // h[r][c-1] = label of H(r, c) for r = 0..n, c = 1..n.
    std::vector<std::vector<int>> h;
    // v[r-1][c] = label of V(r, c) for r = 1..n, c = 0..n.
    std::vector<std::vector<int>> v;
    // Colour painted on the two pipe roles of tile (r, c): `upper` is the
    // north-east elbow of a bump, `lower` the south-west elbow; 0 where no
    // traced line passes.  Crossing tiles stay unpainted.
    std::vector<std::vector<int>> upper_color;  // [r-1][c-1]
    std::vector<std::vector<int>> lower_color;  // [r-1][c-1]
    bool shape_difference_is_partition = false;
    std::vector<std::pair<int, int>> conflict_tiles;  // bumps seeing two colours
    bool saturated = false;
    std::string failure_reason;  // empty iff saturated

    bool is_bump(int r, int c) const { return h[r - 1][c - 1] == v[r - 1][c]; }
};

// Requires p and q to have the same inner and outer shapes and the same
// number of entries.  Saturation holds when the shape difference is a
// partition and no bump tile is painted with two distinct colours; lines
// never touched by a trace impose no constraint.
OmegaDiagram build_omega(const SkewTableau& p, const SkewTableau& q);

// One validation condition: a short code ("1", "2a", "2b", "2c", "3", "4"),
// whether it held, and a human-readable explanation.
struct ConditionResult {
    std::string code;
    bool pass = false;
    std::string details;
};

// Conditions are checked in order and evaluation stops at the first failure,
// so `conditions` lists every condition checked and at most one failure.
struct ValidationReport {
    std::vector<ConditionResult> conditions;
    bool valid = false;

    std::string first_failure() const;  // failing code, or "" when valid
};

// Decides whether a tuple lies in the image of the forward correspondence:
//   1   p and q are tabloids of the same shape mu, a partition of n;
//   2a  lambda has at most as many rows as mu;
//   2b  placing p and q atop lambda gives standard skew fillings, and no
//       single column can slide up one row keeping both standard;
//   2c  the omega diagram of the two fillings is saturated;
//   3   if lambda - mu is a partition, the tuple (p, q, lambda - mu) must
//       itself break one of 2a/2b/2c;
//   4   n0 may be any integer.
ValidationReport validate(const DarsTuple& t);

// Inverse correspondence.  Validates the tuple (throwing ValidationError
// naming the failed condition otherwise), seeds the south and west boundary
// of the diagram above the stable window from the column words of the two
// skew fillings, and reconstructs the marked tiles upward window by window
// using the reversed local rules until the diagram is exhausted.  Exceeding
// limits.max_windows reconstruction steps raises ResourceLimitError.
AffinePermutation inverse(const DarsTuple& t, const GrowthLimits& limits = GrowthLimits{});

}  // namespace dars
