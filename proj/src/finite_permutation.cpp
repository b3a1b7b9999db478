#include "dars/finite_permutation.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dars {

FinitePermutation::FinitePermutation(std::vector<int> one_line) : values_(std::move(one_line)) {
    std::vector<bool> seen(values_.size(), false);
    for (int v : values_) {
        if (v < 1 || v > n() || seen[v - 1])
            throw std::invalid_argument("one-line notation must list 1..n once each");
        seen[v - 1] = true;
    }
}

FinitePermutation FinitePermutation::identity(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return FinitePermutation(std::move(v));
}

int FinitePermutation::operator()(int j) const {
    if (j < 1 || j > n()) throw std::invalid_argument("permutation argument out of range");
    return values_[j - 1];
}

FinitePermutation FinitePermutation::inverse() const {
    std::vector<int> inv(values_.size());
    for (int j = 1; j <= n(); ++j) inv[values_[j - 1] - 1] = j;
    return FinitePermutation(std::move(inv));
}

FinitePermutation FinitePermutation::times_longest() const {
    std::vector<int> v(values_.rbegin(), values_.rend());
    return FinitePermutation(std::move(v));
}

std::string FinitePermutation::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i) out << ',';
        out << values_[i];
    }
    return out.str();
}

}  // namespace dars
