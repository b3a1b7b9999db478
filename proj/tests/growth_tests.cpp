#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "dars/affine_permutation.hpp"
#include "dars/enumerate.hpp"
#include "dars/errors.hpp"
#include "dars/growth_region.hpp"
#include "dars/oracles.hpp"

using namespace dars;

namespace {

// Shape contract of a growth vertex: classical insertion of the values
// w(k) <= r found east of column line c, in position order.
Partition truncated_insertion_shape(const AffinePermutation& w, int r, int c) {
    std::vector<int> word;
    for (int k = c + 1; k <= c + 256; ++k)
        if (w(k) <= r) word.push_back(w(k));
    return insertion_shape(word);
}

}  // namespace

TEST_CASE("hand-swept two-element embedding") {
    const AffinePermutation w = AffinePermutation::embed(FinitePermutation({2, 1}));
    GrowthRegion region = GrowthRegion::build(w, 1);
    CHECK(region.top_row_line() == 0);
    CHECK(region.bottom_row_line() == 2);
    CHECK(region.east_column_line() == 2);

    CHECK(region.tile_class(1, 2) == TileClass::Marked);
    CHECK(region.tile_class(2, 1) == TileClass::Marked);
    CHECK(region.tile_class(1, 1) == TileClass::Cross);
    CHECK(region.tile_class(2, 2) == TileClass::Cross);

    CHECK(region.vertical_label(1, 1) == 1);
    CHECK(region.horizontal_label(1, 1) == 0);
    CHECK(region.horizontal_label(2, 1) == 1);
    CHECK(region.horizontal_label(1, 2) == 1);
    CHECK(region.horizontal_label(2, 2) == 1);
    CHECK(region.vertical_label(1, 0) == 1);
    CHECK(region.vertical_label(2, 0) == 1);
    CHECK(region.vertical_label(2, 1) == 0);
    CHECK(region.vertical_label(1, 2) == 0);
    CHECK(region.vertical_label(2, 2) == 0);

    CHECK(region.vertex_partition(2, 2) == Partition{});
    CHECK(region.vertex_partition(2, 1) == Partition({1}));
    CHECK(region.vertex_partition(2, 0) == Partition({1, 1}));
    CHECK(region.vertical_color(1, 1) == 1);
    CHECK(region.vertical_color(1, 0) == 1);
    CHECK(region.vertical_color(2, 0) == 2);

    const std::string dump = dump_region(region);
    CHECK(dump.find("H 1 1 0") != std::string::npos);
    CHECK(dump.find("H 2 1 1") != std::string::npos);
    CHECK(dump.find("V 1 1 1 1") != std::string::npos);
    CHECK(dump.find("V 2 0 1 2") != std::string::npos);
}

TEST_CASE("region accessors enforce their bounds") {
    const AffinePermutation w = AffinePermutation::embed(FinitePermutation({2, 1}));
    GrowthRegion region = GrowthRegion::build(w, 1);
    // North and east of the region all labels vanish, and reads are allowed.
    CHECK(region.horizontal_label(-3, 1) == 0);
    CHECK(region.vertical_label(0, 1) == 0);
    CHECK(region.vertical_label(1, 5) == 0);
    // South and west are out of range.
    CHECK_THROWS_AS(region.horizontal_label(3, 1), std::out_of_range);
    CHECK_THROWS_AS(region.horizontal_label(1, 0), std::out_of_range);
    CHECK_THROWS_AS(region.vertical_label(1, -1), std::out_of_range);
    CHECK_THROWS_AS(region.tile_class(3, 1), std::out_of_range);
    CHECK_THROWS_AS(region.vertical_color(2, 1), std::invalid_argument);  // zero label
    CHECK_THROWS_AS(GrowthRegion::build(w, 0), std::invalid_argument);
}

TEST_CASE("identity translation has single-row full windows") {
    const AffinePermutation id3 = AffinePermutation::identity(3);
    GrowthRegion region = GrowthRegion::build(id3, 5);
    for (int j = 1; j <= 3; ++j) CHECK(region.tile_class(j, j) == TileClass::Marked);
    CHECK_FALSE(region.window_is_full(1));
    for (int m = 2; m <= 4; ++m) CHECK(region.window_is_full(m));
    CHECK(region.vertex_partition(3, 3) == Partition{});
    CHECK(region.vertex_partition(6, 3) == Partition({3}));
    CHECK(region.vertex_partition(9, 3) == Partition({6}));

    const StableWindowSearch search = first_stable_window(id3);
    CHECK(search.n0 == 2);
    GrowthRegion r2 = search.region;
    const WindowSummary s = window_summary(r2, 2);
    CHECK(s.is_full);
    CHECK(s.is_stable);
    CHECK(s.lambda == Partition{});
    CHECK(s.mu == Composition({3}));
}

TEST_CASE("four-element running example") {
    const AffinePermutation w(4, {10, 3, -3, 12});
    StableWindowSearch search = first_stable_window(w);
    CHECK(search.n0 == 7);
    GrowthRegion& region = search.region;

    CHECK(region.vertex_partition(24, 4) == Partition({6, 6, 5}));

    WindowSummary s7 = window_summary(region, 7);
    CHECK(s7.is_full);
    CHECK(s7.is_stable);
    CHECK(s7.lambda == Partition({6, 6, 5}));
    CHECK(s7.mu == Composition({2, 1, 1}));
    CHECK(s7.east_colors == std::vector<int>({1, 2, 1, 3}));
    // North colours are stored west to east; read right to left they are
    // (1, 1, 2, 3), putting positions {1,2} in row 1, {3} in row 2, {4} in row 3.
    CHECK(s7.north_colors == std::vector<int>({3, 2, 1, 1}));

    // Windows are full from m = 4 on; stability first holds at m = 7.
    CHECK_FALSE(region.window_is_full(3));
    for (int m = 4; m <= 8; ++m) CHECK(region.window_is_full(m));
    for (int m = 4; m <= 6; ++m) CHECK_FALSE(window_summary(region, m).is_stable);
    CHECK(window_summary(region, 8).is_stable);

    // Index identity at every full window.
    for (int m = 4; m <= region.window_count() - 1; ++m)
        CHECK(region.vertex_partition((m - 1) * 4, 4).total() == 4 * (m - 2) - 3);
}

TEST_CASE("window summaries expose raw boundary labels") {
    const AffinePermutation w(4, {10, 3, -3, 12});
    StableWindowSearch search = first_stable_window(w);
    GrowthRegion& region = search.region;
    for (int m : {5, 7}) {
        const WindowSummary s = window_summary(region, m);
        for (int c = 1; c <= 4; ++c) {
            CHECK(s.north_labels[c - 1] == region.horizontal_label((m - 1) * 4, c));
            CHECK(s.south_labels[c - 1] == region.horizontal_label(m * 4, c));
        }
        for (int t = 1; t <= 4; ++t) {
            CHECK(s.east_labels[t - 1] == region.vertical_label((m - 1) * 4 + t, 4));
            CHECK(s.west_labels[t - 1] == region.vertical_label((m - 1) * 4 + t, 0));
        }
        // Full windows have nonzero boundary labels all around.
        for (int t = 1; t <= 4; ++t) {
            CHECK(s.east_labels[t - 1] > 0);
            CHECK(s.west_labels[t - 1] > 0);
        }
    }
    const WindowSummary s1 = window_summary(region, 1);
    CHECK_FALSE(s1.is_full);  // marks inside
    CHECK_FALSE(s1.is_stable);
}

TEST_CASE("labels and tiles repeat with period (n, n)") {
    for (const AffinePermutation& w :
         {AffinePermutation(4, {10, 3, -3, 12}), AffinePermutation(3, {-3, 5, 7}),
          AffinePermutation(2, {-4, -1})}) {
        const int n = w.n();
        GrowthRegion region = GrowthRegion::build(w, 8);
        const int r_lo = region.top_row_line() + 1;
        const int r_hi = region.bottom_row_line() - n;
        const int c_hi = region.east_column_line() - n;
        for (int i = r_lo; i <= r_hi; ++i)
            for (int j = 1; j <= c_hi; ++j) {
                CHECK(region.tile_class(i, j) == region.tile_class(i + n, j + n));
                CHECK(region.horizontal_label(i, j) == region.horizontal_label(i + n, j + n));
                CHECK(region.vertical_label(i, j) == region.vertical_label(i + n, j + n));
            }
    }
}

TEST_CASE("vertex partitions match truncated classical insertion") {
    for (const AffinePermutation& w :
         {AffinePermutation(4, {10, 3, -3, 12}), AffinePermutation(3, {-3, 5, 7}),
          AffinePermutation(3, {4, 5, -6}), AffinePermutation(2, {2, 7})}) {
        GrowthRegion region = GrowthRegion::build(w, 6);
        for (int r = region.top_row_line(); r <= region.bottom_row_line(); r += 2)
            for (int c = 0; c <= region.east_column_line(); c += 2)
                CHECK(region.vertex_partition(r, c) == truncated_insertion_shape(w, r, c));
    }
}

TEST_CASE("shadow traces land on vertical edges of their own colour") {
    const AffinePermutation w(4, {10, 3, -3, 12});
    StableWindowSearch search = first_stable_window(w);
    GrowthRegion& region = search.region;
    for (int c = 1; c <= 4; ++c) {
        const int label = region.horizontal_label(24, c);
        REQUIRE(label > 0);
        const ShadowTrace trace = trace_shadow_line(region, EdgeCoordinate::horizontal(24, c));
        REQUIRE_FALSE(trace.path.empty());
        CHECK(trace.path.front() == EdgeCoordinate::horizontal(24, c));
        const EdgeCoordinate last = trace.path.back();
        REQUIRE(last.orientation == EdgeCoordinate::Orientation::Vertical);
        CHECK(trace.color == region.vertical_color(last.row_line, last.col_line));
        CHECK(trace.color == horizontal_edge_color(region, 24, c));
        // Labels are constant along the traced line.
        for (const EdgeCoordinate& e : trace.path) {
            const int l = e.orientation == EdgeCoordinate::Orientation::Horizontal
                              ? region.horizontal_label(e.row_line, e.col_line)
                              : region.vertical_label(e.row_line, e.col_line);
            CHECK(l == label);
        }
    }
    // Starting on a vertical edge resolves immediately.
    const ShadowTrace direct = trace_shadow_line(region, EdgeCoordinate::vertical(25, 4));
    CHECK(direct.path.size() == 1);
    CHECK(direct.color == region.vertical_color(25, 4));
}

TEST_CASE("embedded finite permutations stabilize at the second window") {
    for (const FinitePermutation& u : all_finite_permutations(3))
        CHECK(first_stable_window(AffinePermutation::embed(u)).n0 == 2);
    CHECK(first_stable_window(AffinePermutation::embed(FinitePermutation({3, 6, 5, 2, 1, 4})))
              .n0 == 2);
}

TEST_CASE("resource caps turn runaway searches into errors") {
    const AffinePermutation w(4, {10, 3, -3, 12});
    CHECK_THROWS_AS(first_stable_window(w, GrowthLimits{4}), ResourceLimitError);
    GrowthRegion shallow = GrowthRegion::build(w, 4);
    // A trace from the bottom boundary must deepen the region, which the
    // tight window cap forbids.
    CHECK_THROWS_AS(
        [&] {
            GrowthLimits tight{4};
            for (int c = 1; c <= 4; ++c) horizontal_edge_color(shallow, 16, c, tight);
        }(),
        ResourceLimitError);
}
