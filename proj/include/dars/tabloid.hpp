#pragma once

#include <string>
#include <vector>

#include "dars/partition.hpp"

namespace dars {

// Tabloid: an ordered list of disjoint nonempty subsets of {1..n} whose
// union is all of {1..n} and whose sizes weakly decrease, so the shape is a
// partition of n.  Rows are stored sorted ascending.
class Tabloid {
public:
    Tabloid() = default;  // empty tabloid (n = 0)
    explicit Tabloid(std::vector<std::vector<int>> rows);

    int n() const { return n_; }
    int rows() const { return static_cast<int>(rows_.size()); }
    const std::vector<int>& row(int r) const;  // 1-based
    const std::vector<std::vector<int>>& row_sets() const { return rows_; }
    Partition shape() const;

    // Row containing entry k (1-based); entries are 1..n.
    int row_of(int k) const;

    std::string to_string() const;  // "1,3/2/4"

    friend bool operator==(const Tabloid&, const Tabloid&) = default;

private:
    std::vector<std::vector<int>> rows_;
    std::vector<int> row_of_;  // row_of_[k-1] = row containing k
    int n_ = 0;
};

// Builds a tabloid from arbitrary disjoint row sets covering {1..n}.  The
// row sizes must already be weakly decreasing; anything else is a usage
// error (shapes are partitions by construction).
Tabloid row_content_tabloid(const std::vector<std::vector<int>>& rows);

// Builds a tabloid directly from a map entry -> row (1..rows).
Tabloid tabloid_from_row_map(const std::vector<int>& row_of_entry);

}  // namespace dars
