#pragma once

#include <string>
#include <vector>

#include "dars/affine_permutation.hpp"
#include "dars/dars_map.hpp"
#include "dars/growth_region.hpp"
#include "dars/partition.hpp"
#include "dars/tabloid.hpp"

namespace dars {

// Resource caps for the asymptotic oracles.
struct OracleLimits {
    int max_blocks = 40;        // insertion prefix cap, in blocks of n entries
    int max_lambda_total = 12;  // witness-search cap on |lambda|
};

// Shape of the Schensted row-insertion tableau of a word with pairwise
// distinct integer entries.
Partition insertion_shape(const std::vector<int>& word);

// A tabloid obtained as the limit of row data of growing insertion
// tableaux, with the prefix length at which the rows stopped moving.
struct AsymptoticTabloid {
    Tabloid tabloid;
    int stabilized_after = 0;
};

// Row-insertion oracle: inserts w(start+1), w(start+2), ... block by block
// (n entries per block) and reports, for each residue class, the limiting
// row of its entries.  Each block yields one residue-to-row map;
// stabilization requires the same map to fill a strict majority of the
// blocks, as a single run, at two consecutive depths.  Only the limiting
// map's run grows with the depth, so no fixed-width plateau of early blocks
// can keep a majority.  Exceeding limits.max_blocks raises
// ResourceLimitError.  Independent of the growth diagram.
AsymptoticTabloid ptabloid_oracle(const AffinePermutation& w, int start = 0,
                                  const OracleLimits& limits = OracleLimits{});

// Evacuation oracle: evacuates the standardized insertion tableaux of the
// segments (w(n+1-start-bn), ..., w(n-start)) and reads the limiting rows
// at reversed ranks, keyed by the complemented residue class.  Read
// right-to-left and complemented, such a segment is a prefix of the
// reflected permutation r(w) (see duality_suite), so this computes the
// insertion rows of r(w) through finite evacuation, with the same stopping
// rule and caps as ptabloid_oracle.
AsymptoticTabloid affine_evacuation_of(const AffinePermutation& w, int start = 0,
                                       const OracleLimits& limits = OracleLimits{});

// Evacuation on tabloids: finds a witness permutation w whose forward image
// has first tabloid `t` (bounded search over candidate tuples driven by the
// inverse correspondence) and returns the first tabloid of the reflected
// witness.  Raises ResourceLimitError when no witness appears within the
// bounds; the result is never guessed.
Tabloid evacuate_tabloid(const Tabloid& t, const OracleLimits& limits = OracleLimits{});

// Cell membership through the correspondence; both arguments must have
// index 0 (anything else is a usage error).  Right cells share the first
// tabloid, left cells the second.
bool same_right_cell(const AffinePermutation& u, const AffinePermutation& w,
                     const GrowthLimits& limits = GrowthLimits{});
bool same_left_cell(const AffinePermutation& u, const AffinePermutation& w,
                    const GrowthLimits& limits = GrowthLimits{});

// One verification check on one input.
struct CheckRecord {
    std::string suite;
    std::string input;
    bool pass = true;
    std::string details;
};

struct SuiteReport {
    std::vector<CheckRecord> records;
    int passed = 0;
    int failed = 0;

    bool all_pass() const { return failed == 0; }
    void add(CheckRecord record);
    void merge(const SuiteReport& other);
};

// Duality and oracle-agreement checks for each element:
//   duality.qbar   second tabloid of w equals first tabloid of r(w^-1),
//                  where r is the reflection q -> n+1-w(n+1-q);
//   duality.evac   the two asymptotic oracles agree: evacuation rows of w
//                  equal insertion rows of r(w);
//   oracle.pbar    forward correspondence and insertion oracle agree on the
//                  first tabloid;
//   oracle.index   the tuple's index n(n0-2)-|lambda| equals the index of w.
SuiteReport duality_suite(const std::vector<AffinePermutation>& elements,
                          const OracleLimits& limits = OracleLimits{});

// inverse(forward(w)) == w for every element.
SuiteReport roundtrip_suite(const std::vector<AffinePermutation>& elements,
                            const GrowthLimits& limits = GrowthLimits{});

// Structural invariants of each element's growth region:
//   invariants.rows        every vertex partition has at most n rows;
//   invariants.colors      every vertical-edge colour is between 1 and n;
//   invariants.consistency both edges of a pipe caught by the multiplicity
//                          rule and the downstream trace agree on colour;
//   invariants.crossing    where two coloured lines cross, the one with the
//                          smaller colour has the strictly larger label;
//   invariants.index       |lambda^m| == n(m-2) - index for full windows;
//   invariants.dominance   shape differences of consecutive full windows
//                          grow in dominance order;
//   invariants.persistence windows n0..n0+3 are all stable;
//   invariants.stability   a full window is stable iff its east and west
//                          colours agree and colour multiplicities weakly
//                          decrease.
SuiteReport invariant_suite(const std::vector<AffinePermutation>& elements,
                            const GrowthLimits& limits = GrowthLimits{});

}  // namespace dars
