#pragma once

#include <string>
#include <vector>

#include "dars/affine_permutation.hpp"
#include "dars/partition.hpp"

namespace dars {

// Resource caps for growth-region construction and shadow-line tracing.
struct GrowthLimits {
    int max_windows = 64;
};

// Classification of a growth-diagram tile by its north/east edge labels:
//   Empty:  unmarked, north = east = 0         -> south = west = 0
//   Marked: w(column) = row, north = east = 0  -> south = west = 1
//   Bump:   unmarked, north = east = a > 0     -> south = west = a + 1
//   Cross:  unmarked, north != east            -> south = north, west = east
enum class TileClass { Empty, Marked, Bump, Cross };

// Names one edge of the growth grid.  H(r, c) is the horizontal edge from
// vertex (r, c-1) to (r, c); V(r, c) is the vertical edge from (r-1, c) to
// (r, c).
struct EdgeCoordinate {
    enum class Orientation { Horizontal, Vertical };
    Orientation orientation = Orientation::Horizontal;
    int row_line = 0;
    int col_line = 0;

    static EdgeCoordinate horizontal(int r, int c) {
        return {Orientation::Horizontal, r, c};
    }
    static EdgeCoordinate vertical(int r, int c) { return {Orientation::Vertical, r, c}; }

    friend bool operator==(const EdgeCoordinate&, const EdgeCoordinate&) = default;
};

// Edge-labelled growth diagram of an extended affine permutation, restricted
// to a finite region large enough to determine every label it stores.
//
// Matrix coordinates: rows grow southward, columns eastward.  Tile (i, j)
// spans row lines [i-1, i] and column lines [j-1, j] and is marked iff
// w(j) = i.  Edge H(r, c) is the horizontal edge on row line r crossing tile
// column c (the south edge of tile (r, c)); edge V(r, c) is the vertical edge
// on column line c crossing tile row r (the east edge of tile (r, c)).
//
// The region stores tile rows [top_row_line()+1, bottom_row_line()] and tile
// columns [1, east_column_line()], where bottom_row_line() = n * windows.
// The bounds are chosen so that every mark influencing a stored edge lies
// inside the region; all true labels north or east of it vanish, so accessors
// extend by zero in those directions.  Queries south or west of the region
// are out of range.
class GrowthRegion {
public:
    // Sweeps the dual local rules over the region covering `window_count`
    // windows of rows (window m = tile rows ((m-1)n, mn]).
    static GrowthRegion build(const AffinePermutation& w, int window_count);

    const AffinePermutation& permutation() const { return w_; }
    int n() const { return w_.n(); }
    int window_count() const { return windows_; }

    int top_row_line() const { return r_top_; }
    int bottom_row_line() const { return row_hi_; }
    int east_column_line() const { return c_hi_; }

    // Label of H(r, c); requires c >= 1 and r <= bottom_row_line().
    int horizontal_label(int r, int c) const;
    // Label of V(r, c); requires c >= 0 and r <= bottom_row_line().
    int vertical_label(int r, int c) const;

    // Requires c >= 1 and r <= bottom_row_line().
    TileClass tile_class(int r, int c) const;

    // Shape accumulated along column line c from the top of the region down
    // to row line r: each nonzero vertical label k adds a box in column k.
    Partition vertex_partition(int r, int c) const;

    // Colour of a nonzero vertical edge: the 1-based occurrence index of its
    // label among equal labels on the same column line, counted from the top
    // of the region downward.
    int vertical_color(int r, int c) const;

    // True if every tile of window m (tile rows ((m-1)n, mn], columns 1..n)
    // is a bump or a crossing, i.e. the window contains no mark and no empty
    // tile.
    bool window_is_full(int m) const;

private:
    GrowthRegion(const AffinePermutation& w, int window_count);
    void sweep();

    int& h_ref(int r, int c) { return h_[r - r_top_][c - 1]; }
    int& v_ref(int r, int c) { return v_[r - r_top_ - 1][c]; }

    AffinePermutation w_;
    AffinePermutation w_inv_;
    int windows_;
    int row_hi_;  // n * windows_
    int r_top_;   // highest row line carried by the region
    int c_hi_;    // easternmost column line carried by the region
    std::vector<std::vector<int>> h_;  // h_[r - r_top_][c - 1]
    std::vector<std::vector<int>> v_;  // v_[r - r_top_ - 1][c]
};

// Colour of a nonzero horizontal edge: follow its shadow line southward
// through crossings until the line turns east at a bump, then report the
// colour of the vertical edge reached there.  When the trace runs past the
// bottom of the region, the region is rebuilt in place with twice as many
// windows (labels and colours are unchanged by deepening); limits.max_windows
// caps that growth.
int horizontal_edge_color(GrowthRegion& region, int r, int c,
                          const GrowthLimits& limits = GrowthLimits{});

// A maximal south-east run of one shadow line: the edges visited from the
// start edge up to and including the first vertical edge reached, plus the
// colour shared by the whole line.
struct ShadowTrace {
    std::vector<EdgeCoordinate> path;
    int color = 0;
};

// Follows the shadow line through `start` downstream (south through
// crossings, east at bumps) until it reaches a vertical edge, whose colour it
// reports.  `start` must carry a nonzero label.  May deepen the region in
// place like horizontal_edge_color.
ShadowTrace trace_shadow_line(GrowthRegion& region, EdgeCoordinate start,
                              const GrowthLimits& limits = GrowthLimits{});

// Boundary data of window m: tile rows ((m-1)n, mn], bounded by row lines
// (m-1)n (north) and mn (south) and column lines 0 (west) and n (east).
struct WindowSummary {
    int m = 0;
    bool is_full = false;
    Partition lambda;               // vertex partition at row line (m-1)n, column line n
    Composition mu;                 // row-wise difference to the next window's shape
    bool mu_is_partition = false;
    bool is_stable = false;         // mu is a partition and equals the next window's mu
    std::vector<int> north_labels;  // H((m-1)n, c) for c = 1..n, west to east
    std::vector<int> south_labels;  // H(mn, c) for c = 1..n
    std::vector<int> east_labels;   // V((m-1)n + t, n) for t = 1..n, top to bottom
    std::vector<int> west_labels;   // V((m-1)n + t, 0) for t = 1..n
    std::vector<int> north_colors;  // traced colours; 0 where the label is 0
    std::vector<int> east_colors;
    std::vector<int> west_colors;
};

// Requires m <= region.window_count() - 1 (stability looks one window ahead).
// Tracing north-edge colours may deepen the region in place.
WindowSummary window_summary(GrowthRegion& region, int m,
                             const GrowthLimits& limits = GrowthLimits{});

// Search result: the smallest full window n0 from which the shape
// differences repeat, together with a region covering at least windows
// n0, n0 + 1 and n0 + 2.
struct StableWindowSearch {
    GrowthRegion region;
    int n0 = 0;
};

// Finds the first full window m whose shape difference mu is a partition and
// agrees with the next window's, doubling the region depth as needed up to
// limits.max_windows.
StableWindowSearch first_stable_window(const AffinePermutation& w,
                                       const GrowthLimits& limits = GrowthLimits{});

// Plain-text dump of every stored edge: lines "H r c label" (row-line major)
// followed by lines "V r c label color", colour 0 on zero labels.
std::string dump_region(const GrowthRegion& region);

}  // namespace dars
