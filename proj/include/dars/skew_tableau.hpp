#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dars/partition.hpp"
#include "dars/tabloid.hpp"

namespace dars {

// Straight-shape standard tableau: filling of a partition shape by 1..m with
// rows increasing left to right and columns increasing top to bottom.
class StandardTableau {
public:
    StandardTableau() = default;
    explicit StandardTableau(std::vector<std::vector<int>> rows);

    int size() const { return n_; }
    int rows() const { return static_cast<int>(rows_.size()); }
    const std::vector<int>& row(int r) const;  // 1-based
    const std::vector<std::vector<int>>& row_lists() const { return rows_; }
    Partition shape() const;

    int entry_at(int r, int c) const;  // 0 if no such cell
    int row_of(int k) const;
    int column_of(int k) const;

    StandardTableau transpose() const;
    std::string to_string() const;  // "1,4/2,5/3/6"

    friend bool operator==(const StandardTableau&, const StandardTableau&) = default;

private:
    std::vector<std::vector<int>> rows_;
    std::vector<std::pair<int, int>> cell_of_;  // entry k at cell_of_[k-1]
    int n_ = 0;
};

// Schutzenberger evacuation via repeated remove-min + inward slides.  An
// involution on standard tableaux of each shape.
StandardTableau evacuation(const StandardTableau& t);

// Row contents of a standard tableau as a tabloid (shapes always agree).
Tabloid row_content_tabloid(const StandardTableau& t);

// Filling of a skew shape outer/inner by entries 1..m (each exactly once).
// Construction checks shape consistency only; standardness (rows and
// columns strictly increasing) is a separate predicate, so non-standard
// fillings are representable.
class SkewTableau {
public:
    SkewTableau() = default;
    SkewTableau(Partition inner, Partition outer, std::vector<std::vector<int>> rows);

    int size() const { return n_; }
    const Partition& inner() const { return inner_; }
    const Partition& outer() const { return outer_; }
    int rows() const { return outer_.rows(); }

    bool has_cell(int r, int c) const;
    int entry_at(int r, int c) const;  // 0 if no cell there
    int row_of(int k) const;
    int column_of(int k) const;

    // Rows strictly increase left to right, columns strictly increase top to
    // bottom (empty rows are fine).
    bool is_standard() const;

    // column_word()[k-1] = column of entry k.
    std::vector<int> column_word() const;

    std::string to_string() const;  // inner boxes as "."; e.g. ".,.,1,3/2/4"

    friend bool operator==(const SkewTableau&, const SkewTableau&) = default;

private:
    Partition inner_;
    Partition outer_;
    std::vector<std::vector<int>> rows_;        // rows_[r-1][i] at column inner_r+1+i
    std::vector<std::pair<int, int>> cell_of_;  // entry k at cell_of_[k-1]
    int n_ = 0;
};

// Places the tabloid's rows atop the inner shape: row r of `tab`, sorted
// ascending, occupies columns lambda_r+1 .. lambda_r+mu_r of row r, giving a
// filling of (lambda+mu)/lambda.  Total: defined for every lambda and tab;
// the result need not be standard.
SkewTableau skew_from_tabloid(const Partition& lambda, const Tabloid& tab);

// Row contents of a skew filling as a tabloid (sizes must weakly decrease;
// they do whenever the shape difference is a partition).
Tabloid row_content_tabloid(const SkewTableau& t);

// Moves every entry of column c up by one row (entries keep their columns
// and order).  Returns the new filling if the resulting cell set is again a
// skew shape of two partitions, nullopt otherwise.  Standardness of the
// result is for the caller to check.
std::optional<SkewTableau> slide_column_up(const SkewTableau& t, int c);

}  // namespace dars
