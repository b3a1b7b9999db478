#include "dars/dars_map.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "dars/errors.hpp"

namespace dars {

int DarsTuple::index() const { return n() * (n0 - 2) - lambda.total(); }

DarsTuple forward(const AffinePermutation& w, const GrowthLimits& limits) {
    const int n = w.n();
    // The first stable window can have any integer index, but the region
    // numbers windows from 1.  Adding k*n to every window entry shifts the
    // whole diagram down k windows without changing the tabloids, so lift the
    // permutation until its entries are positive (then the first stable
    // window index is at least 2) and shift the found index back.
    const int min_entry = *std::min_element(w.window().begin(), w.window().end());
    const int shift = min_entry < 1 ? (n - min_entry) / n : 0;
    std::vector<int> lifted_window = w.window();
    for (int& entry : lifted_window) entry += shift * n;
    const AffinePermutation lifted(n, std::move(lifted_window));

    StableWindowSearch search = first_stable_window(lifted, limits);
    WindowSummary s = window_summary(search.region, search.n0, limits);
    std::vector<int> p_rows(n), q_rows(n);
    for (int j = 1; j <= n; ++j) {
        p_rows[j - 1] = s.east_colors[j - 1];
        q_rows[j - 1] = s.north_colors[n - j];
    }
    DarsTuple t;
    t.p = tabloid_from_row_map(p_rows);
    t.q = tabloid_from_row_map(q_rows);
    t.lambda = s.lambda;
    t.n0 = search.n0 - shift;
    return t;
}

OmegaDiagram build_omega(const SkewTableau& p, const SkewTableau& q) {
    if (p.inner() != q.inner() || p.outer() != q.outer())
        throw std::invalid_argument("omega needs two fillings of the same skew shape");
    const int n = p.size();
    if (n < 1) throw std::invalid_argument("omega needs at least one entry");

    OmegaDiagram d;
    d.n = n;
    d.h.assign(n + 1, std::vector<int>(n, 0));
    d.v.assign(n, std::vector<int>(n + 1, 0));
    d.upper_color.assign(n, std::vector<int>(n, 0));
    d.lower_color.assign(n, std::vector<int>(n, 0));

    const std::vector<int> col_p = p.column_word();
    const std::vector<int> col_q = q.column_word();
    for (int i = 1; i <= n; ++i) {
        d.h[0][n - i] = col_q[i - 1];  // H(0, n - i + 1)
        d.v[i - 1][n] = col_p[i - 1];  // V(i, n)
    }
    // North-east to south-west sweep of the dual local rules.  All labels
    // are positive, so each tile is a bump (equal labels, both incremented)
    // or a crossing (labels pass straight through).
    for (int r = 1; r <= n; ++r)
        for (int c = n; c >= 1; --c) {
            const int north = d.h[r - 1][c - 1];
            const int east = d.v[r - 1][c];
            if (north == east) {
                d.h[r][c - 1] = north + 1;
                d.v[r - 1][c - 1] = north + 1;
            } else {
                d.h[r][c - 1] = north;
                d.v[r - 1][c - 1] = east;
            }
        }

    std::vector<std::vector<char>> conflict(n, std::vector<char>(n, 0));
    auto paint = [&](int r, int c, bool upper, int color) {
        int& slot = (upper ? d.upper_color : d.lower_color)[r - 1][c - 1];
        if (slot == 0)
            slot = color;
        else if (slot != color)
            conflict[r - 1][c - 1] = 1;
    };

    // Downstream trace of the line entering at each north-boundary edge:
    // south through crossings, east along a bump's upper elbow, then south
    // again off another bump's lower elbow.  The paint colour is the row of
    // the seeding entry of q.
    for (int i = 1; i <= n; ++i) {
        const int color = q.row_of(i);
        int r = 1;
        int c = n - i + 1;
        bool via_north = true;
        while (r <= n && c <= n) {
            if (d.is_bump(r, c)) {
                paint(r, c, via_north, color);
                if (via_north) {
                    ++c;  // upper elbow exits east
                    via_north = false;
                } else {
                    ++r;  // lower elbow exits south
                    via_north = true;
                }
            } else {
                if (via_north)
                    ++r;
                else
                    ++c;
            }
        }
    }
    // Upstream trace of the line leaving at each east-boundary edge: west
    // through crossings, north along a bump's upper elbow, west again off
    // another bump's lower elbow.  The paint colour is the row of the
    // seeding entry of p.
    for (int t = 1; t <= n; ++t) {
        const int color = p.row_of(t);
        int r = t;
        int c = n;
        bool via_east = true;
        while (r >= 1 && c >= 1) {
            if (d.is_bump(r, c)) {
                paint(r, c, via_east, color);
                if (via_east) {
                    --r;  // upper elbow entered from the east exits north
                    via_east = false;
                } else {
                    --c;  // lower elbow entered from the south exits west
                    via_east = true;
                }
            } else {
                if (via_east)
                    --c;
                else
                    --r;
            }
        }
    }

    for (int r = 1; r <= n; ++r)
        for (int c = 1; c <= n; ++c) {
            if (!d.is_bump(r, c)) continue;
            const int u = d.upper_color[r - 1][c - 1];
            const int l = d.lower_color[r - 1][c - 1];
            if (conflict[r - 1][c - 1] || (u != 0 && l != 0 && u != l))
                d.conflict_tiles.emplace_back(r, c);
        }

    const std::vector<int> diff = subtract(p.outer(), p.inner());
    d.shape_difference_is_partition = std::is_sorted(diff.rbegin(), diff.rend());
    d.saturated = d.shape_difference_is_partition && d.conflict_tiles.empty();
    if (!d.shape_difference_is_partition) {
        d.failure_reason = "the shape difference is not weakly decreasing";
    } else if (!d.conflict_tiles.empty()) {
        std::ostringstream msg;
        msg << "bump tile (" << d.conflict_tiles.front().first << ", "
            << d.conflict_tiles.front().second << ") is painted with two colours";
        d.failure_reason = msg.str();
    }
    return d;
}

std::string ValidationReport::first_failure() const {
    for (const ConditionResult& c : conditions)
        if (!c.pass) return c.code;
    return "";
}

namespace {

bool record(ValidationReport& report, std::string code, bool pass, std::string details) {
    report.conditions.push_back({std::move(code), pass, std::move(details)});
    return pass;
}

std::string shape_name(const Partition& lambda) {
    return lambda.empty() ? std::string("the empty shape") : "(" + lambda.to_string() + ")";
}

// Conditions 2a/2b/2c for an arbitrary inner shape; empty result means the
// condition holds, anything else describes the failure.
std::string check_2a(const Partition& lambda, const Partition& mu) {
    if (lambda.rows() > mu.rows())
        return "inner shape " + shape_name(lambda) + " has more rows than the tabloid shape (" +
               mu.to_string() + ")";
    return "";
}

std::string check_2b(const Tabloid& p, const Tabloid& q, const Partition& lambda) {
    const SkewTableau sp = skew_from_tabloid(lambda, p);
    const SkewTableau sq = skew_from_tabloid(lambda, q);
    if (!sp.is_standard())
        return "placing p atop " + shape_name(lambda) + " is not a standard skew filling";
    if (!sq.is_standard())
        return "placing q atop " + shape_name(lambda) + " is not a standard skew filling";
    const int columns = sp.outer().part(1);
    for (int c = 1; c <= columns; ++c) {
        const std::optional<SkewTableau> up_p = slide_column_up(sp, c);
        if (!up_p || !up_p->is_standard()) continue;
        const std::optional<SkewTableau> up_q = slide_column_up(sq, c);
        if (up_q && up_q->is_standard())
            return "column " + std::to_string(c) +
                   " can slide up one row keeping both fillings standard";
    }
    return "";
}

std::string check_2c(const Tabloid& p, const Tabloid& q, const Partition& lambda) {
    const OmegaDiagram d =
        build_omega(skew_from_tabloid(lambda, p), skew_from_tabloid(lambda, q));
    if (!d.saturated) return "the omega diagram is not saturated: " + d.failure_reason;
    return "";
}

}  // namespace

ValidationReport validate(const DarsTuple& t) {
    ValidationReport report;
    const int n = t.n();
    {
        bool pass = true;
        std::string details;
        if (n < 1) {
            pass = false;
            details = "p must contain at least one entry";
        } else if (t.q.n() != n) {
            pass = false;
            details = "p and q have different entry counts";
        } else if (t.p.shape() != t.q.shape()) {
            pass = false;
            details = "p and q have different shapes";
        } else {
            details = "both tabloids have shape (" + t.p.shape().to_string() + ")";
        }
        if (!record(report, "1", pass, std::move(details))) return report;
    }
    const Partition mu = t.p.shape();
    {
        std::string why = check_2a(t.lambda, mu);
        const bool pass = why.empty();
        if (!record(report, "2a", pass,
                    pass ? "inner shape fits within " + std::to_string(mu.rows()) + " rows"
                         : std::move(why)))
            return report;
    }
    {
        std::string why = check_2b(t.p, t.q, t.lambda);
        const bool pass = why.empty();
        if (!record(report, "2b", pass,
                    pass ? "both skew fillings are standard and no column slides up"
                         : std::move(why)))
            return report;
    }
    {
        std::string why = check_2c(t.p, t.q, t.lambda);
        const bool pass = why.empty();
        if (!record(report, "2c", pass, pass ? "the omega diagram is saturated" : std::move(why)))
            return report;
    }
    {
        const std::vector<int> diff = subtract(t.lambda, mu);
        const bool nonnegative = std::all_of(diff.begin(), diff.end(), [](int x) { return x >= 0; });
        const bool decreasing = std::is_sorted(diff.rbegin(), diff.rend());
        bool pass = true;
        std::string details;
        if (!nonnegative || !decreasing) {
            details = "lambda minus mu is not a partition, so lambda sits at the lowest level";
        } else {
            const Partition lower(diff);
            std::string why = check_2a(lower, mu);
            if (why.empty()) why = check_2b(t.p, t.q, lower);
            if (why.empty()) why = check_2c(t.p, t.q, lower);
            if (why.empty()) {
                pass = false;
                details = "the smaller inner shape " + shape_name(lower) +
                          " also satisfies conditions 2a-2c";
            } else {
                details = "the smaller inner shape " + shape_name(lower) + " fails: " + why;
            }
        }
        if (!record(report, "3", pass, std::move(details))) return report;
    }
    record(report, "4", true, "any integer window index is allowed");
    report.valid = true;
    return report;
}

AffinePermutation inverse(const DarsTuple& t, const GrowthLimits& limits) {
    const ValidationReport report = validate(t);
    if (!report.valid) {
        const ConditionResult& fail = report.conditions.back();
        throw ValidationError(fail.code,
                              "validation condition " + fail.code + " failed: " + fail.details);
    }
    const int n = t.n();
    const SkewTableau sp = skew_from_tabloid(t.lambda, t.p);
    const SkewTableau sq = skew_from_tabloid(t.lambda, t.q);
    const std::vector<int> col_p = sp.column_word();
    const std::vector<int> col_q = sq.column_word();

    // South boundary of the first window to rebuild (window n0 - 1): the
    // stable window's north edges carry q's column word right to left.
    std::vector<int> south(n);
    for (int c = 1; c <= n; ++c) south[c - 1] = col_q[n - c];
    // Its west boundary, top to bottom: the west edges of a window equal the
    // east edges of the window below by periodicity, and the stable window's
    // east edges carry p's column word.
    std::vector<int> west_column(col_p);

    std::vector<int> marks(n, 0);
    std::vector<char> marked(n, 0);
    int found = 0;

    for (int step = 0;; ++step) {
        const bool exhausted =
            std::all_of(south.begin(), south.end(), [](int x) { return x == 0; }) &&
            std::all_of(west_column.begin(), west_column.end(), [](int x) { return x == 0; });
        if (exhausted) {
            if (found == n) break;
            throw std::logic_error("reverse sweep ran out of labels before finding every mark");
        }
        if (step >= limits.max_windows)
            throw ResourceLimitError("reverse reconstruction exceeded " +
                                     std::to_string(limits.max_windows) + " windows");

        const int base = (t.n0 - 2 - step) * n;  // north row line of the window to rebuild
        std::vector<int> next_west(n, 0);
        for (int i = base + n; i > base; --i) {
            int west = west_column[i - base - 1];
            for (int j = 1; j <= n; ++j) {
                const int s = south[j - 1];
                int north = 0;
                int east = 0;
                if (s == west) {
                    if (s == 1) {
                        // A marked tile: both outgoing labels are 1, both
                        // incoming labels vanish.
                        if (marked[j - 1])
                            throw std::logic_error("reverse sweep found two marks in one column");
                        marked[j - 1] = 1;
                        marks[j - 1] = i;
                        ++found;
                    } else if (s != 0) {
                        north = east = s - 1;  // bump
                    }
                } else {
                    north = s;  // crossing
                    east = west;
                }
                south[j - 1] = north;
                west = east;
            }
            next_west[i - base - 1] = west;  // V(i, n), this window's east edge
        }
        west_column = std::move(next_west);
    }

    const AffinePermutation w(n, marks);
    if (w.index() != t.index())
        throw std::logic_error("reconstructed window has the wrong index");
    return w;
}

}  // namespace dars
