#pragma once

#include <compare>
#include <string>
#include <vector>

namespace dars {

// Integer partition: weakly decreasing positive parts.  Trailing zeros are
// stripped on construction, so the empty partition is `Partition{}`.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    // Builds the partition whose k-th column has height `profile[k-1]`.
    // The profile must be weakly decreasing and nonnegative.
    static Partition from_column_profile(const std::vector<int>& profile);

    int rows() const { return static_cast<int>(parts_.size()); }
    // 1-based part access; rows beyond rows() read as 0.
    int part(int r) const;
    int total() const;
    bool empty() const { return parts_.empty(); }
    const std::vector<int>& parts() const { return parts_; }

    // Height of column c (1-based): number of parts >= c.
    int column_height(int c) const;
    std::vector<int> column_profile() const;
    Partition conjugate() const;

    // Componentwise containment: inner fits inside *this.
    bool contains(const Partition& inner) const;

    // Appends one box at the end of row r (1-based; r == rows()+1 starts a
    // new row).  The result must remain a partition.
    void add_box_in_row(int r);
    // Appends one box at the bottom of column c (1-based).  Equivalent to
    // add_box_in_row on the conjugate; the result must remain a partition.
    void add_box_in_column(int c);
    // Row that add_box_in_column(c) would extend, without modifying *this.
    int row_of_new_box_in_column(int c) const;

    std::string to_string() const;  // "6,6,5"; empty partition prints ""

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

// Composition: nonnegative parts with an explicit length (trailing zeros are
// kept, unlike Partition).
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);

    int length() const { return static_cast<int>(parts_.size()); }
    int part(int r) const;  // 1-based; beyond length() reads as 0
    int total() const;
    const std::vector<int>& parts() const { return parts_; }

    bool is_partition() const;  // weakly decreasing
    // Drops trailing zeros and converts; requires is_partition().
    Partition to_partition() const;

    std::string to_string() const;

    friend bool operator==(const Composition&, const Composition&) = default;

private:
    std::vector<int> parts_;
};

// Dominance order: every prefix sum of `a` is >= the matching prefix sum of
// `b` (shorter argument padded with zeros).  Totals must agree; mismatched
// totals are a usage error.
bool dominates(const Composition& a, const Composition& b);
bool dominates(const Partition& a, const Partition& b);

// Componentwise difference a - b with length max(a.rows(), b.rows());
// entries may be negative, hence a raw vector rather than a Composition.
std::vector<int> subtract(const Partition& a, const Partition& b);

// Componentwise sum, padding the shorter with zeros.  The sum of two
// partitions is again a partition.
Partition add(const Partition& a, const Partition& b);

}  // namespace dars
