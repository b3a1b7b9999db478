#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dars/finite_permutation.hpp"

namespace dars {

// Extended affine permutation: a bijection w of the integers with
// w(q + n) = w(q) + n, stored by its window [w(1), ..., w(n)].  The window
// residues mod n must be pairwise distinct; the index (sum of w(j) - j,
// divided by n) can be any integer.  Requires n >= 2.
class AffinePermutation {
public:
    AffinePermutation(int n, std::vector<int> window);
    static AffinePermutation translation(int n, int i);  // t -> t + i
    static AffinePermutation identity(int n) { return translation(n, 0); }
    static AffinePermutation embed(const FinitePermutation& w);

    int n() const { return n_; }
    const std::vector<int>& window() const { return window_; }
    int operator()(int q) const;  // evaluate anywhere via periodicity
    int index() const { return index_; }

    AffinePermutation inverse() const;
    // Composition (this o rhs)(q) = this(rhs(q)); sizes must match.
    AffinePermutation compose(const AffinePermutation& rhs) const;
    // Right multiplication by the simple reflection s_r, 0 <= r < n.
    AffinePermutation times_simple(int r) const;
    // Dynkin-diagram automorphism: q -> n + 1 - w(n + 1 - q); negates the
    // index and reflects the marked tiles across the antidiagonal.
    AffinePermutation dynkin_reflect() const;

    long long coxeter_length() const;

    std::string to_string() const;  // "[10,3,-3,12]"

    friend bool operator==(const AffinePermutation&, const AffinePermutation&) = default;

private:
    int n_ = 0;
    std::vector<int> window_;
    int index_ = 0;
};

// The two sides of the position-balance identity at a cut (a, b) with
// a - b == index: #{t > b : w(t) <= a} and #{t <= b : w(t) > a}.  The two
// counts are equal for every valid cut.
std::pair<long long, long long> balance_counts(const AffinePermutation& w, int a, int b);

}  // namespace dars
