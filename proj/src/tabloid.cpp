#include "dars/tabloid.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dars {

Tabloid::Tabloid(std::vector<std::vector<int>> row_lists) : rows_(std::move(row_lists)) {
    for (auto& row : rows_) {
        if (row.empty()) throw std::invalid_argument("tabloid rows must be nonempty");
        std::sort(row.begin(), row.end());
        n_ += static_cast<int>(row.size());
    }
    for (std::size_t r = 1; r < rows_.size(); ++r)
        if (rows_[r - 1].size() < rows_[r].size())
            throw std::invalid_argument("tabloid row sizes must weakly decrease");
    row_of_.assign(n_, 0);
    for (int r = 1; r <= rows(); ++r) {
        for (int k : rows_[r - 1]) {
            if (k < 1 || k > n_)
                throw std::invalid_argument("tabloid entries must lie in 1..n");
            if (row_of_[k - 1] != 0)
                throw std::invalid_argument("tabloid entries must be distinct");
            row_of_[k - 1] = r;
        }
    }
    // Disjoint rows with n distinct entries in 1..n cover {1..n} exactly.
}

const std::vector<int>& Tabloid::row(int r) const {
    if (r < 1 || r > rows()) throw std::invalid_argument("tabloid row out of range");
    return rows_[r - 1];
}

Partition Tabloid::shape() const {
    std::vector<int> sizes;
    sizes.reserve(rows_.size());
    for (const auto& row : rows_) sizes.push_back(static_cast<int>(row.size()));
    return Partition(std::move(sizes));
}

int Tabloid::row_of(int k) const {
    if (k < 1 || k > n_) throw std::invalid_argument("tabloid entry out of range");
    return row_of_[k - 1];
}

std::string Tabloid::to_string() const {
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

Tabloid row_content_tabloid(const std::vector<std::vector<int>>& rows) {
    return Tabloid(rows);
}

Tabloid tabloid_from_row_map(const std::vector<int>& row_of_entry) {
    int max_row = 0;
    for (int r : row_of_entry) max_row = std::max(max_row, r);
    std::vector<std::vector<int>> rows(max_row);
    for (std::size_t k = 0; k < row_of_entry.size(); ++k) {
        int r = row_of_entry[k];
        if (r < 1) throw std::invalid_argument("row map entries must be >= 1");
        rows[r - 1].push_back(static_cast<int>(k) + 1);
    }
    return Tabloid(std::move(rows));
}

}  // namespace dars
