#include "dars/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dars {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i - 1] < parts_[i])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

Partition Partition::from_column_profile(const std::vector<int>& profile) {
    for (std::size_t i = 0; i < profile.size(); ++i) {
        if (profile[i] < 0)
            throw std::invalid_argument("column profile must be nonnegative");
        if (i > 0 && profile[i - 1] < profile[i])
            throw std::invalid_argument("column profile must be weakly decreasing");
    }
    // Row r has length = number of columns with height >= r.
    std::vector<int> rows;
    int height = profile.empty() ? 0 : profile.front();
    for (int r = 1; r <= height; ++r) {
        int len = 0;
        while (len < static_cast<int>(profile.size()) && profile[len] >= r) ++len;
        rows.push_back(len);
    }
    return Partition(std::move(rows));
}

int Partition::part(int r) const {
    if (r <= 0) throw std::invalid_argument("partition rows are 1-based");
    return r <= rows() ? parts_[r - 1] : 0;
}

int Partition::total() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::column_height(int c) const {
    if (c <= 0) throw std::invalid_argument("partition columns are 1-based");
    int h = 0;
    while (h < rows() && parts_[h] >= c) ++h;
    return h;
}

std::vector<int> Partition::column_profile() const {
    std::vector<int> profile(parts_.empty() ? 0 : parts_.front());
    for (std::size_t c = 0; c < profile.size(); ++c)
        profile[c] = column_height(static_cast<int>(c) + 1);
    return profile;
}

Partition Partition::conjugate() const {
    return Partition(column_profile());
}

bool Partition::contains(const Partition& inner) const {
    if (inner.rows() > rows()) return false;
    for (int r = 1; r <= inner.rows(); ++r)
        if (part(r) < inner.part(r)) return false;
    return true;
}

void Partition::add_box_in_row(int r) {
    if (r <= 0 || r > rows() + 1)
        throw std::invalid_argument("add_box_in_row: row out of range");
    if (r == rows() + 1) {
        parts_.push_back(1);
    } else {
        if (r > 1 && parts_[r - 2] < parts_[r - 1] + 1)
            throw std::invalid_argument("add_box_in_row: result not a partition");
        ++parts_[r - 1];
    }
}

int Partition::row_of_new_box_in_column(int c) const {
    if (c <= 0) throw std::invalid_argument("partition columns are 1-based");
    return column_height(c) + 1;
}

void Partition::add_box_in_column(int c) {
    int r = row_of_new_box_in_column(c);
    if (part(r) != c - 1)
        throw std::invalid_argument("add_box_in_column: result not a partition");
    add_box_in_row(r);
}

std::string Partition::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out << ',';
        out << parts_[i];
    }
    return out.str();
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p < 0) throw std::invalid_argument("composition parts must be nonnegative");
}

int Composition::part(int r) const {
    if (r <= 0) throw std::invalid_argument("composition parts are 1-based");
    return r <= length() ? parts_[r - 1] : 0;
}

int Composition::total() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Composition::is_partition() const {
    for (std::size_t i = 1; i < parts_.size(); ++i)
        if (parts_[i - 1] < parts_[i]) return false;
    return true;
}

Partition Composition::to_partition() const {
    if (!is_partition())
        throw std::invalid_argument("composition is not weakly decreasing");
    return Partition(parts_);
}

std::string Composition::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out << ',';
        out << parts_[i];
    }
    return out.str();
}

bool dominates(const Composition& a, const Composition& b) {
    if (a.total() != b.total())
        throw std::invalid_argument("dominance requires equal totals");
    int len = std::max(a.length(), b.length());
    long sum_a = 0, sum_b = 0;
    for (int r = 1; r <= len; ++r) {
        sum_a += a.part(r);
        sum_b += b.part(r);
        if (sum_a < sum_b) return false;
    }
    return true;
}

bool dominates(const Partition& a, const Partition& b) {
    return dominates(Composition(a.parts()), Composition(b.parts()));
}

std::vector<int> subtract(const Partition& a, const Partition& b) {
    int len = std::max(a.rows(), b.rows());
    std::vector<int> out(len);
    for (int r = 1; r <= len; ++r) out[r - 1] = a.part(r) - b.part(r);
    return out;
}

Partition add(const Partition& a, const Partition& b) {
    int len = std::max(a.rows(), b.rows());
    std::vector<int> out(len);
    for (int r = 1; r <= len; ++r) out[r - 1] = a.part(r) + b.part(r);
    return Partition(std::move(out));
}

}  // namespace dars
