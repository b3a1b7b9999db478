#pragma once

#include <string>
#include <vector>

namespace dars {

// Permutation of {1..n} in one-line notation.
class FinitePermutation {
public:
    FinitePermutation() = default;
    explicit FinitePermutation(std::vector<int> one_line);
    static FinitePermutation identity(int n);

    int n() const { return static_cast<int>(values_.size()); }
    int operator()(int j) const;  // 1-based
    const std::vector<int>& one_line() const { return values_; }

    FinitePermutation inverse() const;
    // Right multiplication by the longest element: j -> w(n+1-j).
    FinitePermutation times_longest() const;

    std::string to_string() const;  // "3,6,5,2,1,4"

    friend bool operator==(const FinitePermutation&, const FinitePermutation&) = default;

private:
    std::vector<int> values_;
};

}  // namespace dars
