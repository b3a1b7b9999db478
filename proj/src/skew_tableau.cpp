#include "dars/skew_tableau.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dars {

StandardTableau::StandardTableau(std::vector<std::vector<int>> row_lists)
    : rows_(std::move(row_lists)) {
    while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
    std::vector<int> lens;
    for (const auto& row : rows_) {
        lens.push_back(static_cast<int>(row.size()));
        n_ += static_cast<int>(row.size());
    }
    Partition shape{lens};  // validates weakly decreasing, positive
    cell_of_.assign(n_, {0, 0});
    for (int r = 1; r <= rows(); ++r) {
        const auto& row = rows_[r - 1];
        for (std::size_t i = 0; i < row.size(); ++i) {
            int k = row[i];
            if (k < 1 || k > n_)
                throw std::invalid_argument("standard tableau entries must lie in 1..m");
            if (cell_of_[k - 1].first != 0)
                throw std::invalid_argument("standard tableau entries must be distinct");
            cell_of_[k - 1] = {r, static_cast<int>(i) + 1};
            if (i > 0 && row[i - 1] >= row[i])
                throw std::invalid_argument("standard tableau rows must strictly increase");
            if (r > 1 && rows_[r - 2][i] >= k)
                throw std::invalid_argument("standard tableau columns must strictly increase");
        }
    }
}

const std::vector<int>& StandardTableau::row(int r) const {
    if (r < 1 || r > rows()) throw std::invalid_argument("tableau row out of range");
    return rows_[r - 1];
}

Partition StandardTableau::shape() const {
    std::vector<int> lens;
    for (const auto& row : rows_) lens.push_back(static_cast<int>(row.size()));
    return Partition(std::move(lens));
}

int StandardTableau::entry_at(int r, int c) const {
    if (r < 1 || r > rows()) return 0;
    const auto& row = rows_[r - 1];
    if (c < 1 || c > static_cast<int>(row.size())) return 0;
    return row[c - 1];
}

int StandardTableau::row_of(int k) const {
    if (k < 1 || k > n_) throw std::invalid_argument("tableau entry out of range");
    return cell_of_[k - 1].first;
}

int StandardTableau::column_of(int k) const {
    if (k < 1 || k > n_) throw std::invalid_argument("tableau entry out of range");
    return cell_of_[k - 1].second;
}

StandardTableau StandardTableau::transpose() const {
    int cols = rows_.empty() ? 0 : static_cast<int>(rows_.front().size());
    std::vector<std::vector<int>> out(cols);
    for (int c = 1; c <= cols; ++c)
        for (int r = 1; r <= rows(); ++r)
            if (int v = entry_at(r, c)) out[c - 1].push_back(v);
    return StandardTableau(std::move(out));
}

std::string StandardTableau::to_string() const {
    std::ostringstream out;
    for (int r = 1; r <= rows(); ++r) {
        if (r > 1) out << '/';
        const auto& row = rows_[r - 1];
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ',';
            out << row[i];
        }
    }
    return out.str();
}

StandardTableau evacuation(const StandardTableau& t) {
    int m = t.size();
    // Mutable grid of entries; 0 marks an absent cell.
    std::vector<std::vector<int>> grid(t.rows());
    for (int r = 1; r <= t.rows(); ++r) grid[r - 1] = t.row(r);
    auto at = [&](int r, int c) -> int {
        if (r < 1 || r > static_cast<int>(grid.size())) return 0;
        const auto& row = grid[r - 1];
        if (c < 1 || c > static_cast<int>(row.size())) return 0;
        return row[c - 1];
    };

    std::vector<std::vector<int>> result(t.rows());
    for (int r = 1; r <= t.rows(); ++r)
        result[r - 1].assign(t.row(r).size(), 0);

    // Remove the minimum m times; the hole slides to an outer corner, which
    // receives m+1-step in the evacuated tableau.
    for (int step = 1; step <= m; ++step) {
        int r = 1, c = 1;
        while (true) {
            int right = at(r, c + 1);
            int below = at(r + 1, c);
            if (right == 0 && below == 0) break;
            if (below == 0 || (right != 0 && right < below)) {
                grid[r - 1][c - 1] = right;
                ++c;
            } else {
                grid[r - 1][c - 1] = below;
                ++r;
            }
        }
        grid[r - 1].pop_back();
        if (grid[r - 1].empty()) grid.pop_back();
        result[r - 1][c - 1] = m + 1 - step;
    }
    return StandardTableau(std::move(result));
}

Tabloid row_content_tabloid(const StandardTableau& t) {
    return Tabloid(t.row_lists());
}

SkewTableau::SkewTableau(Partition inner, Partition outer, std::vector<std::vector<int>> rows)
    : inner_(std::move(inner)), outer_(std::move(outer)), rows_(std::move(rows)) {
    if (!outer_.contains(inner_))
        throw std::invalid_argument("skew shape requires inner inside outer");
    if (static_cast<int>(rows_.size()) != outer_.rows())
        throw std::invalid_argument("skew filling must have one list per outer row");
    for (int r = 1; r <= outer_.rows(); ++r) {
        int expect = outer_.part(r) - inner_.part(r);
        if (static_cast<int>(rows_[r - 1].size()) != expect)
            throw std::invalid_argument("skew filling row length mismatch");
        n_ += expect;
    }
    cell_of_.assign(n_, {0, 0});
    for (int r = 1; r <= outer_.rows(); ++r) {
        for (std::size_t i = 0; i < rows_[r - 1].size(); ++i) {
            int k = rows_[r - 1][i];
            if (k < 1 || k > n_)
                throw std::invalid_argument("skew filling entries must lie in 1..m");
            if (cell_of_[k - 1].first != 0)
                throw std::invalid_argument("skew filling entries must be distinct");
            cell_of_[k - 1] = {r, inner_.part(r) + static_cast<int>(i) + 1};
        }
    }
}

bool SkewTableau::has_cell(int r, int c) const {
    return r >= 1 && r <= outer_.rows() && c > inner_.part(r) && c <= outer_.part(r);
}

int SkewTableau::entry_at(int r, int c) const {
    if (!has_cell(r, c)) return 0;
    return rows_[r - 1][c - inner_.part(r) - 1];
}

int SkewTableau::row_of(int k) const {
    if (k < 1 || k > n_) throw std::invalid_argument("skew filling entry out of range");
    return cell_of_[k - 1].first;
}

int SkewTableau::column_of(int k) const {
    if (k < 1 || k > n_) throw std::invalid_argument("skew filling entry out of range");
    return cell_of_[k - 1].second;
}

bool SkewTableau::is_standard() const {
    for (int r = 1; r <= outer_.rows(); ++r) {
        const auto& row = rows_[r - 1];
        for (std::size_t i = 1; i < row.size(); ++i)
            if (row[i - 1] >= row[i]) return false;
    }
    // Column condition: compare vertically adjacent cells.
    for (int r = 2; r <= outer_.rows(); ++r) {
        for (int c = inner_.part(r) + 1; c <= outer_.part(r); ++c) {
            int above = entry_at(r - 1, c);
            int here = entry_at(r, c);
            if (above != 0 && here != 0 && above >= here) return false;
        }
    }
    return true;
}

std::vector<int> SkewTableau::column_word() const {
    std::vector<int> word(n_);
    for (int k = 1; k <= n_; ++k) word[k - 1] = column_of(k);
    return word;
}

std::string SkewTableau::to_string() const {
    std::ostringstream out;
    for (int r = 1; r <= outer_.rows(); ++r) {
        if (r > 1) out << '/';
        bool first = true;
        for (int c = 1; c <= outer_.part(r); ++c) {
            if (!first) out << ',';
            first = false;
            if (c <= inner_.part(r))
                out << '.';
            else
                out << entry_at(r, c);
        }
    }
    return out.str();
}

SkewTableau skew_from_tabloid(const Partition& lambda, const Tabloid& tab) {
    Partition outer = add(lambda, tab.shape());
    std::vector<std::vector<int>> rows(outer.rows());
    for (int r = 1; r <= tab.rows(); ++r) rows[r - 1] = tab.row(r);  // already sorted
    return SkewTableau(lambda, outer, std::move(rows));
}

Tabloid row_content_tabloid(const SkewTableau& t) {
    std::vector<std::vector<int>> rows;
    for (int r = 1; r <= t.outer().rows(); ++r) {
        int inner_r = t.inner().part(r);
        int outer_r = t.outer().part(r);
        if (outer_r == inner_r) continue;
        std::vector<int> row;
        for (int c = inner_r + 1; c <= outer_r; ++c) row.push_back(t.entry_at(r, c));
        rows.push_back(std::move(row));
    }
    return Tabloid(std::move(rows));
}

std::optional<SkewTableau> slide_column_up(const SkewTableau& t, int c) {
    std::vector<int> inner_prof = t.inner().column_profile();
    std::vector<int> outer_prof = t.outer().column_profile();
    auto prof_at = [](const std::vector<int>& p, int col) {
        return col >= 1 && col <= static_cast<int>(p.size()) ? p[col - 1] : 0;
    };
    int lo = prof_at(inner_prof, c);
    int hi = prof_at(outer_prof, c);
    if (hi <= lo) return std::nullopt;  // empty column: nothing to slide
    if (lo < 1) return std::nullopt;    // no blank above to slide into
    // Both profiles must stay weakly decreasing after decrementing column c.
    if (lo - 1 < prof_at(inner_prof, c + 1)) return std::nullopt;
    if (hi - 1 < prof_at(outer_prof, c + 1)) return std::nullopt;

    inner_prof[c - 1] = lo - 1;
    outer_prof[c - 1] = hi - 1;
    Partition new_inner = Partition::from_column_profile(inner_prof);
    Partition new_outer = Partition::from_column_profile(outer_prof);

    // Rebuild the filling: entries keep their columns; rows of column c drop
    // by one, everything else stays.
    std::vector<std::vector<int>> rows(new_outer.rows());
    for (int r = 1; r <= new_outer.rows(); ++r)
        rows[r - 1].assign(new_outer.part(r) - new_inner.part(r), 0);
    for (int k = 1; k <= t.size(); ++k) {
        int r = t.row_of(k);
        int col = t.column_of(k);
        if (col == c) r -= 1;
        if (r < 1 || r > new_outer.rows()) return std::nullopt;
        int lo_r = new_inner.part(r), hi_r = new_outer.part(r);
        if (col <= lo_r || col > hi_r) return std::nullopt;
        rows[r - 1][col - lo_r - 1] = k;
    }
    for (const auto& row : rows)
        for (int v : row)
            if (v == 0) return std::nullopt;
    return SkewTableau(new_inner, new_outer, std::move(rows));
}

}  // namespace dars
