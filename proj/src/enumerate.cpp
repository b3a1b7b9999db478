#include "dars/enumerate.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

#include "dars/errors.hpp"

namespace dars {

std::vector<FinitePermutation> all_finite_permutations(int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<FinitePermutation> out;
    do {
        out.emplace_back(std::vector<int>(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::vector<AffinePermutation> enumerate_window_box(int n, int lo, int hi,
                                                    std::optional<int> index_filter,
                                                    long long cap) {
    if (lo > hi) return {};  // empty box, empty stream
    std::vector<AffinePermutation> out;
    std::vector<int> window;
    std::vector<bool> used(n, false);
    long long visited = 0;
    auto residue = [n](int v) { return ((v % n) + n) % n; };

    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == n) {
            AffinePermutation w(n, window);
            if (!index_filter || w.index() == *index_filter) out.push_back(std::move(w));
            return;
        }
        for (int v = lo; v <= hi; ++v) {
            int r = residue(v);
            if (used[r]) continue;
            if (++visited > cap)
                throw ResourceLimitError("enumerate_window_box: cap exceeded");
            used[r] = true;
            window.push_back(v);
            self(self, depth + 1);
            window.pop_back();
            used[r] = false;
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<AffinePermutation> enumerate_by_length(int n, int index, int max_length,
                                                   long long cap) {
    AffinePermutation start = AffinePermutation::translation(n, index);
    std::set<std::vector<int>> seen{start.window()};
    std::vector<AffinePermutation> out{start};
    std::deque<AffinePermutation> frontier{start};
    for (int len = 1; len <= max_length; ++len) {
        std::deque<AffinePermutation> next;
        for (const auto& w : frontier) {
            for (int r = 0; r < n; ++r) {
                AffinePermutation v = w.times_simple(r);
                if (seen.insert(v.window()).second) {
                    if (static_cast<long long>(seen.size()) > cap)
                        throw ResourceLimitError("enumerate_by_length: cap exceeded");
                    out.push_back(v);
                    next.push_back(std::move(v));
                }
            }
        }
        frontier = std::move(next);
    }
    return out;
}

namespace {

void partitions_rec(int remaining, int max_part, int max_rows, std::vector<int>& parts,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(parts);
        return;
    }
    if (max_rows == 0) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        parts.push_back(p);
        partitions_rec(remaining - p, p, max_rows - 1, parts, out);
        parts.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int total) {
    std::vector<Partition> out;
    std::vector<int> parts;
    partitions_rec(total, total == 0 ? 1 : total, total, parts, out);
    return out;
}

std::vector<Partition> partitions_up_to(int max_total, int max_rows) {
    std::vector<Partition> out;
    for (int t = 0; t <= max_total; ++t) {
        std::vector<int> parts;
        partitions_rec(t, t == 0 ? 1 : t, max_rows, parts, out);
    }
    return out;
}

std::vector<Partition> partitions_in_box(int max_rows, int max_cols) {
    std::vector<Partition> out;
    std::vector<int> parts;
    // All weakly decreasing sequences with <= max_rows parts of size <= max_cols.
    auto rec = [&](auto&& self, int rows_left, int max_part) -> void {
        out.emplace_back(parts);
        if (rows_left == 0) return;
        for (int p = max_part; p >= 1; --p) {
            parts.push_back(p);
            self(self, rows_left - 1, p);
            parts.pop_back();
        }
    };
    rec(rec, max_rows, max_cols);
    return out;
}

std::vector<Tabloid> tabloids_of_shape(const Partition& shape) {
    int n = shape.total();
    std::vector<std::vector<int>> rows(shape.rows());
    std::vector<Tabloid> out;
    auto rec = [&](auto&& self, int entry) -> void {
        if (entry > n) {
            // Row sizes match the shape exactly, so Tabloid construction
            // cannot fail; rows of equal size remain distinguishable.
            out.emplace_back(rows);
            return;
        }
        for (int r = 1; r <= shape.rows(); ++r) {
            if (static_cast<int>(rows[r - 1].size()) == shape.part(r)) continue;
            rows[r - 1].push_back(entry);
            self(self, entry + 1);
            rows[r - 1].pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

std::vector<StandardTableau> standard_tableaux_of_shape(const Partition& shape) {
    int n = shape.total();
    std::vector<std::vector<int>> rows(shape.rows());
    std::vector<StandardTableau> out;
    auto rec = [&](auto&& self, int entry) -> void {
        if (entry > n) {
            out.emplace_back(rows);
            return;
        }
        for (int r = 1; r <= shape.rows(); ++r) {
            int len = static_cast<int>(rows[r - 1].size());
            if (len == shape.part(r)) continue;
            // Cell (r, len+1) is addable iff the row above already covers it.
            if (r > 1 && static_cast<int>(rows[r - 2].size()) < len + 1) continue;
            rows[r - 1].push_back(entry);
            self(self, entry + 1);
            rows[r - 1].pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

std::vector<std::vector<int>> compositions_of(int total, int length) {
    std::vector<std::vector<int>> out;
    std::vector<int> parts;
    auto rec = [&](auto&& self, int remaining, int slots) -> void {
        if (slots == 0) {
            if (remaining == 0) out.push_back(parts);
            return;
        }
        for (int p = 0; p <= remaining; ++p) {
            parts.push_back(p);
            self(self, remaining - p, slots - 1);
            parts.pop_back();
        }
    };
    rec(rec, total, length);
    return out;
}

}  // namespace dars
