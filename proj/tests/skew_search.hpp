#pragma once

// Exhaustive reference implementations shared by the unit and acceptance
// suites: existence of standard skew fillings with a prescribed column word,
// and componentwise-minimal inner shapes found by direct search.  These are
// deliberately independent of the library's deficiency-statistic formulas.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "dars/partition.hpp"

namespace dars_test {

namespace detail {

// Places entries k+1, ..., m of `word` one at a time.  `outer[r]` is the
// current right end of row r+1 (starting at the inner shape); each placement
// extends one row by one cell so that the cell set stays a skew shape, which
// is exactly standardness of the final filling.
inline bool extend_filling(std::vector<int>& outer, const std::vector<int>& word,
                           std::size_t k) {
    if (k == word.size()) return true;
    const int c = word[k];
    for (std::size_t r = 0; r < outer.size(); ++r) {
        if (outer[r] != c - 1) continue;
        if (r > 0 && outer[r - 1] < c) continue;  // row above too short
        outer[r] = c;
        const bool done = extend_filling(outer, word, k + 1);
        outer[r] = c - 1;
        if (done) return true;
    }
    return false;
}

}  // namespace detail

// True iff some standard skew filling with inner shape `inner` has column
// word `word` (word[k-1] = column of entry k).
inline bool admits_filling(const dars::Partition& inner, const std::vector<int>& word) {
    std::vector<int> outer(inner.rows() + word.size() + 1, 0);
    for (int r = 1; r <= inner.rows(); ++r) outer[r - 1] = inner.part(r);
    return detail::extend_filling(outer, word, 0);
}

// Every partition fitting in a rows x cols box, the empty one included.
inline std::vector<dars::Partition> box_partitions(int rows, int cols) {
    std::vector<dars::Partition> out;
    std::vector<int> parts;
    const auto recurse = [&](auto&& self, int max_part) -> void {
        out.emplace_back(parts.empty() ? dars::Partition{} : dars::Partition(parts));
        if (static_cast<int>(parts.size()) == rows) return;
        for (int p = max_part; p >= 1; --p) {
            parts.push_back(p);
            self(self, p);
            parts.pop_back();
        }
    };
    recurse(recurse, cols);
    return out;
}

// Componentwise-least inner shape within the box that admits standard
// fillings for every word in `words`.  `least_exists` reports whether the
// admissible family has a least element (the componentwise minimum is
// itself admissible); the result is empty when nothing in the box works.
inline std::optional<dars::Partition> least_admissible(
    const std::vector<std::vector<int>>& words, int box_rows, int box_cols,
    bool& least_exists) {
    least_exists = false;
    std::vector<dars::Partition> admissible;
    for (const dars::Partition& inner : box_partitions(box_rows, box_cols)) {
        bool all = true;
        for (const std::vector<int>& word : words)
            if (!admits_filling(inner, word)) {
                all = false;
                break;
            }
        if (all) admissible.push_back(inner);
    }
    if (admissible.empty()) return std::nullopt;
    std::vector<int> floor(static_cast<std::size_t>(box_rows), 0);
    for (int r = 1; r <= box_rows; ++r) {
        int lo = admissible.front().part(r);
        for (const dars::Partition& shape : admissible) lo = std::min(lo, shape.part(r));
        floor[r - 1] = lo;
    }
    dars::Partition minimum(floor);
    least_exists = std::find(admissible.begin(), admissible.end(), minimum) !=
                   admissible.end();
    return minimum;
}

}  // namespace dars_test
