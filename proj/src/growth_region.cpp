#include "dars/growth_region.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "dars/errors.hpp"

namespace dars {

namespace {

int floor_div(int a, int b) {
    int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

int ceil_div(int a, int b) { return -floor_div(-a, b); }

std::vector<int> stripped(const std::vector<int>& v) {
    std::vector<int> out = v;
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

}  // namespace

GrowthRegion::GrowthRegion(const AffinePermutation& w, int window_count)
    : w_(w), w_inv_(w.inverse()), windows_(window_count), row_hi_(w.n() * window_count) {
    const int n = w_.n();
    // Easternmost column whose mark is at or above the bottom row line; every
    // mark in rows <= row_hi_ then lies in a column <= c_hi_, so labels east
    // of column line c_hi_ vanish throughout the stored rows.
    c_hi_ = 1;
    for (int j0 = 1; j0 <= n; ++j0) {
        const int k = floor_div(row_hi_ - w_(j0), n);
        c_hi_ = std::max(c_hi_, j0 + n * k);
    }
    // Highest mark row among stored columns; labels on or above row line
    // r_top_ vanish because no mark sits north of it in columns 1..c_hi_.
    r_top_ = row_hi_;
    for (int j = 1; j <= c_hi_; ++j) r_top_ = std::min(r_top_, w_(j) - 1);

    h_.assign(row_hi_ - r_top_ + 1, std::vector<int>(c_hi_, 0));
    v_.assign(row_hi_ - r_top_, std::vector<int>(c_hi_ + 1, 0));
}

GrowthRegion GrowthRegion::build(const AffinePermutation& w, int window_count) {
    if (window_count < 1) throw std::invalid_argument("window_count must be >= 1");
    GrowthRegion region(w, window_count);
    region.sweep();
    return region;
}

void GrowthRegion::sweep() {
    // North-east to south-west: row lines downward, columns right to left.
    // The north boundary row line r_top_ and east boundary column line c_hi_
    // stay zero, matching the vanishing labels of the infinite diagram.
    for (int i = r_top_ + 1; i <= row_hi_; ++i) {
        for (int j = c_hi_; j >= 1; --j) {
            const int north = h_ref(i - 1, j);
            const int east = v_ref(i, j);
            int south = 0;
            int west = 0;
            if (w_(j) == i) {
                if (north != 0 || east != 0)
                    throw std::logic_error("marked tile with nonzero north/east labels");
                south = west = 1;
            } else if (north == east) {
                south = west = (north == 0) ? 0 : north + 1;
            } else {
                south = north;
                west = east;
            }
            h_ref(i, j) = south;
            v_ref(i, j - 1) = west;
        }
    }
}

int GrowthRegion::horizontal_label(int r, int c) const {
    if (c < 1 || r > row_hi_)
        throw std::out_of_range("horizontal edge south or west of the region");
    if (c > c_hi_ || r < r_top_) return 0;
    return h_[r - r_top_][c - 1];
}

int GrowthRegion::vertical_label(int r, int c) const {
    if (c < 0 || r > row_hi_)
        throw std::out_of_range("vertical edge south or west of the region");
    if (c > c_hi_ || r <= r_top_) return 0;
    return v_[r - r_top_ - 1][c];
}

TileClass GrowthRegion::tile_class(int r, int c) const {
    if (c < 1 || r > row_hi_) throw std::out_of_range("tile south or west of the region");
    if (w_(c) == r) return TileClass::Marked;
    const int north = horizontal_label(r - 1, c);
    const int east = vertical_label(r, c);
    if (north == east) return north == 0 ? TileClass::Empty : TileClass::Bump;
    return TileClass::Cross;
}

Partition GrowthRegion::vertex_partition(int r, int c) const {
    if (c < 0 || r > row_hi_) throw std::out_of_range("vertex south or west of the region");
    if (c > c_hi_) return Partition{};  // every label east of the region is zero
    std::vector<int> profile;
    for (int i = r_top_ + 1; i <= r; ++i) {
        const int label = v_[i - r_top_ - 1][c];
        if (label == 0) continue;
        if (label > static_cast<int>(profile.size())) profile.resize(label, 0);
        ++profile[label - 1];
    }
    return Partition::from_column_profile(profile);
}

int GrowthRegion::vertical_color(int r, int c) const {
    const int label = vertical_label(r, c);
    if (label == 0) throw std::invalid_argument("colour of a zero-labelled vertical edge");
    int count = 0;
    for (int i = r_top_ + 1; i <= r; ++i)
        if (v_[i - r_top_ - 1][c] == label) ++count;
    return count;
}

bool GrowthRegion::window_is_full(int m) const {
    if (m < 1 || m * n() > row_hi_) throw std::out_of_range("window outside the region");
    const int base = (m - 1) * n();
    for (int i = base + 1; i <= base + n(); ++i)
        for (int j = 1; j <= n(); ++j) {
            const TileClass tile = tile_class(i, j);
            if (tile == TileClass::Marked || tile == TileClass::Empty) return false;
        }
    return true;
}

ShadowTrace trace_shadow_line(GrowthRegion& region, EdgeCoordinate start,
                              const GrowthLimits& limits) {
    ShadowTrace trace;
    trace.path.push_back(start);
    if (start.orientation == EdgeCoordinate::Orientation::Vertical) {
        trace.color = region.vertical_color(start.row_line, start.col_line);
        return trace;
    }
    const int r = start.row_line;
    const int c = start.col_line;
    if (region.horizontal_label(r, c) == 0)
        throw std::invalid_argument("colour of a zero-labelled horizontal edge");
    for (int i = r + 1;; ++i) {
        while (i > region.bottom_row_line()) {
            const int next = std::min(region.window_count() * 2, limits.max_windows);
            if (next <= region.window_count())
                throw ResourceLimitError("shadow-line trace exceeded the window cap at edge H(" +
                                         std::to_string(r) + ", " + std::to_string(c) + ")");
            region = GrowthRegion::build(region.permutation(), next);
        }
        switch (region.tile_class(i, c)) {
            case TileClass::Cross:
                // The line continues straight down to the tile's south edge.
                trace.path.push_back(EdgeCoordinate::horizontal(i, c));
                break;
            case TileClass::Bump:
                // The line turns east along the tile's upper elbow.
                trace.path.push_back(EdgeCoordinate::vertical(i, c));
                trace.color = region.vertical_color(i, c);
                return trace;
            default:
                // A marked or empty tile would need a zero north label.
                throw std::logic_error("shadow-line trace met a tile without a line");
        }
    }
}

int horizontal_edge_color(GrowthRegion& region, int r, int c, const GrowthLimits& limits) {
    return trace_shadow_line(region, EdgeCoordinate::horizontal(r, c), limits).color;
}

WindowSummary window_summary(GrowthRegion& region, int m, const GrowthLimits& limits) {
    if (m > region.window_count() - 1)
        throw std::invalid_argument("window summary needs one window of lookahead");
    const int n = region.n();
    const int base = (m - 1) * n;

    WindowSummary s;
    s.m = m;
    s.is_full = region.window_is_full(m);
    s.lambda = region.vertex_partition(base, n);
    const Partition next = region.vertex_partition(base + n, n);
    const Partition after = region.vertex_partition(base + 2 * n, n);
    s.mu = Composition(subtract(next, s.lambda));
    s.mu_is_partition = s.mu.is_partition();
    const std::vector<int> mu_next = subtract(after, next);
    s.is_stable = s.mu_is_partition && stripped(s.mu.parts()) == stripped(mu_next);

    s.north_labels.resize(n);
    s.south_labels.resize(n);
    s.east_labels.resize(n);
    s.west_labels.resize(n);
    for (int c = 1; c <= n; ++c) {
        s.north_labels[c - 1] = region.horizontal_label(base, c);
        s.south_labels[c - 1] = region.horizontal_label(base + n, c);
    }
    for (int t = 1; t <= n; ++t) {
        s.east_labels[t - 1] = region.vertical_label(base + t, n);
        s.west_labels[t - 1] = region.vertical_label(base + t, 0);
    }

    s.north_colors.assign(n, 0);
    s.east_colors.assign(n, 0);
    s.west_colors.assign(n, 0);
    for (int t = 1; t <= n; ++t) {
        if (s.east_labels[t - 1] != 0) s.east_colors[t - 1] = region.vertical_color(base + t, n);
        if (s.west_labels[t - 1] != 0) s.west_colors[t - 1] = region.vertical_color(base + t, 0);
    }
    for (int c = 1; c <= n; ++c)
        if (s.north_labels[c - 1] != 0)
            s.north_colors[c - 1] = horizontal_edge_color(region, base, c, limits);
    return s;
}

namespace {

// Stability of window m from shapes alone, without tracing colours.
bool window_is_stable(const GrowthRegion& region, int m) {
    const int n = region.n();
    const int base = (m - 1) * n;
    const Partition lambda = region.vertex_partition(base, n);
    const Partition next = region.vertex_partition(base + n, n);
    const Partition after = region.vertex_partition(base + 2 * n, n);
    const Composition mu(subtract(next, lambda));
    if (!mu.is_partition()) return false;
    return stripped(mu.parts()) == stripped(subtract(after, next));
}

}  // namespace

StableWindowSearch first_stable_window(const AffinePermutation& w, const GrowthLimits& limits) {
    const int n = w.n();
    const int max_entry = *std::max_element(w.window().begin(), w.window().end());
    // Windows at or below this index lie strictly below every mark of
    // columns 1..n, which forces all their tiles to be bumps or crossings.
    const int first_full = std::max(1, ceil_div(max_entry, n) + 1);

    int window_count = std::min(std::max(1, first_full + 4), limits.max_windows);
    for (;;) {
        GrowthRegion region = GrowthRegion::build(w, window_count);
        // Stop at window_count - 2 so the returned region always covers
        // windows m, m + 1 and m + 2.
        for (int m = first_full; m <= window_count - 2; ++m) {
            if (!region.window_is_full(m)) continue;
            if (window_is_stable(region, m)) return {std::move(region), m};
        }
        if (window_count >= limits.max_windows) {
            std::ostringstream msg;
            msg << "no stable window within " << window_count << " windows for " << w.to_string()
                << "; shape differences:";
            for (int m = std::max(first_full, window_count - 4); m <= window_count - 1; ++m) {
                const int base = (m - 1) * n;
                const Partition a = region.vertex_partition(base, n);
                const Partition b = region.vertex_partition(base + n, n);
                msg << " mu^" << m << "=(" << Composition(subtract(b, a)).to_string() << ")";
            }
            throw ResourceLimitError(msg.str());
        }
        window_count = std::min(window_count * 2, limits.max_windows);
    }
}

std::string dump_region(const GrowthRegion& region) {
    std::ostringstream out;
    for (int r = region.top_row_line(); r <= region.bottom_row_line(); ++r)
        for (int c = 1; c <= region.east_column_line(); ++c)
            out << "H " << r << ' ' << c << ' ' << region.horizontal_label(r, c) << '\n';
    for (int r = region.top_row_line() + 1; r <= region.bottom_row_line(); ++r)
        for (int c = 0; c <= region.east_column_line(); ++c) {
            const int label = region.vertical_label(r, c);
            out << "V " << r << ' ' << c << ' ' << label << ' '
                << (label == 0 ? 0 : region.vertical_color(r, c)) << '\n';
        }
    return out.str();
}

}  // namespace dars
