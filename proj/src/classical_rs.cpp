#include "dars/classical_rs.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "dars/partition.hpp"

namespace dars {

namespace {

// Builds a standard tableau from "entry k goes to row r_k" where rows fill
// left to right in entry order.
StandardTableau tableau_from_entry_rows(const std::vector<int>& row_of_entry) {
    int max_row = 0;
    for (int r : row_of_entry) max_row = std::max(max_row, r);
    std::vector<std::vector<int>> rows(max_row);
    for (std::size_t k = 0; k < row_of_entry.size(); ++k)
        rows[row_of_entry[k] - 1].push_back(static_cast<int>(k) + 1);
    return StandardTableau(std::move(rows));
}

}  // namespace

RsPair rs_insertion(const FinitePermutation& w) {
    int n = w.n();
    std::vector<std::vector<int>> p_rows;
    std::vector<int> q_row_of_entry(n, 0);
    for (int j = 1; j <= n; ++j) {
        int v = w(j);
        std::size_t r = 0;
        while (true) {
            if (r == p_rows.size()) {
                p_rows.push_back({v});
                break;
            }
            auto& row = p_rows[r];
            auto it = std::upper_bound(row.begin(), row.end(), v);
            if (it == row.end()) {
                row.push_back(v);
                break;
            }
            std::swap(*it, v);  // bump the displaced entry down
            ++r;
        }
        q_row_of_entry[j - 1] = static_cast<int>(r) + 1;
    }
    std::vector<std::vector<int>> p_sorted = p_rows;  // rows are already sorted
    return RsPair{StandardTableau(std::move(p_sorted)), tableau_from_entry_rows(q_row_of_entry)};
}

namespace {

Partition union_max(const Partition& a, const Partition& b) {
    int len = std::max(a.rows(), b.rows());
    std::vector<int> parts(len);
    for (int r = 1; r <= len; ++r) parts[r - 1] = std::max(a.part(r), b.part(r));
    return Partition(std::move(parts));
}

// Row in which `big` exceeds `small` (the two differ by exactly one box).
int added_box_row(const Partition& small, const Partition& big) {
    for (int r = 1; r <= big.rows(); ++r)
        if (big.part(r) != small.part(r)) return r;
    throw std::logic_error("added_box_row: partitions are equal");
}

// Vertex partitions of the classical growth diagram, (n+1) x (n+1).
std::vector<std::vector<Partition>> growth_vertices(const FinitePermutation& w) {
    int n = w.n();
    std::vector<std::vector<Partition>> g(n + 1, std::vector<Partition>(n + 1));
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            const Partition& nw = g[i - 1][j - 1];
            const Partition& ne = g[i - 1][j];
            const Partition& sw = g[i][j - 1];
            if (w(j) == i) {
                if (!(nw == ne && nw == sw))
                    throw std::logic_error("growth: marked tile with unequal corners");
                Partition se = nw;
                se.add_box_in_row(1);
                g[i][j] = std::move(se);
            } else if (!(ne == sw)) {
                g[i][j] = union_max(ne, sw);
            } else if (ne == nw) {
                g[i][j] = sw;
            } else {
                Partition se = ne;
                se.add_box_in_row(added_box_row(nw, ne) + 1);
                g[i][j] = std::move(se);
            }
        }
    }
    return g;
}

}  // namespace

RsPair rs_growth(const FinitePermutation& w) {
    int n = w.n();
    auto g = growth_vertices(w);
    // East chain g[i][n] grows when value i joins, so it records p; the
    // south chain g[n][j] grows with insertion step j, recording q.
    std::vector<int> p_rows(n), q_rows(n);
    for (int i = 1; i <= n; ++i) p_rows[i - 1] = added_box_row(g[i - 1][n], g[i][n]);
    for (int j = 1; j <= n; ++j) q_rows[j - 1] = added_box_row(g[n][j - 1], g[n][j]);
    return RsPair{tableau_from_entry_rows(p_rows), tableau_from_entry_rows(q_rows)};
}

ClassicalEdgeLabels growth_edge_labels(const FinitePermutation& w) {
    int n = w.n();
    auto g = growth_vertices(w);
    ClassicalEdgeLabels out;
    out.horizontal.assign(n + 1, std::vector<int>(n, 0));
    out.vertical.assign(n, std::vector<int>(n + 1, 0));
    for (int r = 0; r <= n; ++r)
        for (int c = 1; c <= n; ++c)
            if (!(g[r][c - 1] == g[r][c]))
                out.horizontal[r][c - 1] = added_box_row(g[r][c - 1], g[r][c]);
    for (int c = 0; c <= n; ++c)
        for (int r = 1; r <= n; ++r)
            if (!(g[r - 1][c] == g[r][c]))
                out.vertical[r - 1][c] = added_box_row(g[r - 1][c], g[r][c]);
    return out;
}

namespace {

using Point = std::pair<int, int>;  // (row, col), matrix orientation

// One shadow pass: peels NW-minimal staircases off `points` until none are
// left; returns the lines in extraction order, each sorted by column with
// rows decreasing.
std::vector<std::vector<Point>> shadow_lines_of_pass(std::vector<Point> points) {
    std::vector<std::vector<Point>> lines;
    while (!points.empty()) {
        std::vector<Point> line, rest;
        for (const Point& p : points) {
            bool dominated = false;
            for (const Point& q : points)
                if (q.first < p.first && q.second < p.second) {
                    dominated = true;
                    break;
                }
            (dominated ? rest : line).push_back(p);
        }
        std::sort(line.begin(), line.end(),
                  [](const Point& a, const Point& b) { return a.second < b.second; });
        lines.push_back(std::move(line));
        points = std::move(rest);
    }
    return lines;
}

std::vector<Point> next_pass_points(const std::vector<std::vector<Point>>& lines) {
    std::vector<Point> out;
    for (const auto& line : lines)
        for (std::size_t i = 1; i < line.size(); ++i)
            out.emplace_back(line[i - 1].first, line[i].second);  // concave corner
    return out;
}

}  // namespace

RsPair rs_shadow(const FinitePermutation& w) {
    int n = w.n();
    std::vector<Point> points;
    for (int j = 1; j <= n; ++j) points.emplace_back(w(j), j);
    std::vector<std::vector<int>> p_rows, q_rows;
    while (!points.empty()) {
        auto lines = shadow_lines_of_pass(points);
        std::vector<int> p_row, q_row;
        for (const auto& line : lines) {
            q_row.push_back(line.front().second);  // entry column (southmost point)
            p_row.push_back(line.back().first);    // exit row (eastmost point)
        }
        std::sort(p_row.begin(), p_row.end());
        std::sort(q_row.begin(), q_row.end());
        p_rows.push_back(std::move(p_row));
        q_rows.push_back(std::move(q_row));
        points = next_pass_points(lines);
    }
    return RsPair{StandardTableau(std::move(p_rows)), StandardTableau(std::move(q_rows))};
}

std::vector<int> shadow_pass_line_counts(const FinitePermutation& w) {
    std::vector<Point> points;
    for (int j = 1; j <= w.n(); ++j) points.emplace_back(w(j), j);
    std::vector<int> counts;
    while (!points.empty()) {
        auto lines = shadow_lines_of_pass(points);
        counts.push_back(static_cast<int>(lines.size()));
        points = next_pass_points(lines);
    }
    return counts;
}

ClassicalEdgeLabels shadow_edge_labels(const FinitePermutation& w) {
    int n = w.n();
    ClassicalEdgeLabels out;
    out.horizontal.assign(n + 1, std::vector<int>(n, 0));
    out.vertical.assign(n, std::vector<int>(n + 1, 0));
    std::vector<Point> points;
    for (int j = 1; j <= n; ++j) points.emplace_back(w(j), j);
    int pass = 0;
    while (!points.empty()) {
        ++pass;
        auto lines = shadow_lines_of_pass(points);
        for (const auto& line : lines) {
            // Entry segment: up tile column j_1 from below the grid; row
            // line n (the south boundary) is crossed too.
            for (int r = line.front().first; r <= n; ++r)
                out.horizontal[r][line.front().second - 1] = pass;
            // Between consecutive points: east along the left point's tile
            // row, then up the right point's tile column.
            for (std::size_t i = 1; i < line.size(); ++i) {
                const Point& a = line[i - 1];
                const Point& b = line[i];
                for (int c = a.second; c <= b.second - 1; ++c)
                    out.vertical[a.first - 1][c] = pass;
                for (int r = b.first; r <= a.first - 1; ++r)
                    out.horizontal[r][b.second - 1] = pass;
            }
            // Exit segment: east along the last point's tile row.
            for (int c = line.back().second; c <= n; ++c)
                out.vertical[line.back().first - 1][c] = pass;
        }
        points = next_pass_points(lines);
    }
    return out;
}

DualRsResult dual_rs(const FinitePermutation& w) {
    int n = w.n();
    // h[r][c-1]: row line r (0..n), tile column c; v[r-1][c]: column line c
    // (0..n), tile row r.  North and east boundaries are zero.
    std::vector<std::vector<int>> h(n + 1, std::vector<int>(n, 0));
    std::vector<std::vector<int>> v(n, std::vector<int>(n + 1, 0));
    for (int i = 1; i <= n; ++i) {
        for (int j = n; j >= 1; --j) {
            int north = h[i - 1][j - 1];
            int east = v[i - 1][j];
            int south, west;
            if (w(j) == i) {
                if (north != 0 || east != 0)
                    throw std::logic_error("dual rules: marked tile with nonzero inputs");
                south = west = 1;
            } else if (north == east) {
                south = west = (north == 0 ? 0 : north + 1);
            } else {
                south = north;
                west = east;
            }
            h[i][j - 1] = south;
            v[i - 1][j - 1] = west;
        }
    }

    // West boundary chain, top to bottom: add a box in column v[i-1][0].
    Partition shape;
    std::vector<int> west_rows(n);
    for (int i = 1; i <= n; ++i) {
        int col = v[i - 1][0];
        if (col <= 0) throw std::logic_error("dual rules: zero label on west boundary");
        west_rows[i - 1] = shape.row_of_new_box_in_column(col);
        shape.add_box_in_column(col);
    }
    // South boundary chain, right to left: add a box in column h[n][c-1].
    Partition shape_s;
    std::vector<int> south_rows(n);
    for (int step = 1; step <= n; ++step) {
        int col = h[n][n - step];
        if (col <= 0) throw std::logic_error("dual rules: zero label on south boundary");
        south_rows[step - 1] = shape_s.row_of_new_box_in_column(col);
        shape_s.add_box_in_column(col);
    }
    return DualRsResult{tableau_from_entry_rows(west_rows), tableau_from_entry_rows(south_rows)};
}

CellInvariantReport classical_cell_invariants(int n, int max_n_allowed) {
    if (n < 1 || n > max_n_allowed)
        throw std::invalid_argument("classical_cell_invariants: n out of the allowed range");
    CellInvariantReport report;
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i + 1;
    do {
        FinitePermutation w{std::vector<int>(perm)};
        ++report.cases;
        RsPair ins = rs_insertion(w);
        RsPair gro = rs_growth(w);
        RsPair sha = rs_shadow(w);
        DualRsResult dual = dual_rs(w);
        RsPair dua{dual.west, evacuation(dual.south)};
        std::ostringstream why;
        if (!(gro == ins)) why << "growth != insertion; ";
        if (!(sha == ins)) why << "shadow != insertion; ";
        if (!(dua == ins)) why << "dual != insertion; ";
        if (!(growth_edge_labels(w) == shadow_edge_labels(w)))
            why << "growth edge labels != shadow edge labels; ";
        if (auto s = why.str(); !s.empty()) {
            ++report.failures;
            report.details.push_back(w.to_string() + ": " + s);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return report;
}

}  // namespace dars
