#include "dars/affine_permutation.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dars {

namespace {

// Floor division and positive modulus for possibly negative arguments.
int floor_div(int a, int b) {
    int q = a / b, r = a % b;
    return (r != 0 && (r < 0) != (b < 0)) ? q - 1 : q;
}

int pos_mod(int a, int b) { return a - floor_div(a, b) * b; }

}  // namespace

AffinePermutation::AffinePermutation(int n, std::vector<int> window)
    : n_(n), window_(std::move(window)) {
    if (n_ < 2) throw std::invalid_argument("affine permutations need n >= 2");
    if (static_cast<int>(window_.size()) != n_)
        throw std::invalid_argument("window length must equal n");
    std::vector<bool> seen(n_, false);
    long long sum = 0;
    for (int j = 1; j <= n_; ++j) {
        int res = pos_mod(window_[j - 1], n_);
        if (seen[res])
            throw std::invalid_argument("window residues mod n must be distinct");
        seen[res] = true;
        sum += window_[j - 1] - j;
    }
    // Distinct residues force divisibility of the displacement sum.
    if (sum % n_ != 0) throw std::logic_error("window displacement sum not divisible by n");
    index_ = static_cast<int>(sum / n_);
}

AffinePermutation AffinePermutation::translation(int n, int i) {
    std::vector<int> window(n);
    std::iota(window.begin(), window.end(), 1 + i);
    return AffinePermutation(n, std::move(window));
}

AffinePermutation AffinePermutation::embed(const FinitePermutation& w) {
    return AffinePermutation(w.n(), w.one_line());
}

int AffinePermutation::operator()(int q) const {
    int shift = floor_div(q - 1, n_);
    int base = q - shift * n_;  // in 1..n
    return window_[base - 1] + shift * n_;
}

AffinePermutation AffinePermutation::inverse() const {
    std::vector<int> inv(n_);
    for (int j = 1; j <= n_; ++j) {
        int v = window_[j - 1];
        int shift = floor_div(v - 1, n_);
        int base = v - shift * n_;  // w(j - shift*n) = base in 1..n
        inv[base - 1] = j - shift * n_;
    }
    return AffinePermutation(n_, std::move(inv));
}

AffinePermutation AffinePermutation::compose(const AffinePermutation& rhs) const {
    if (rhs.n_ != n_) throw std::invalid_argument("composition needs matching n");
    std::vector<int> window(n_);
    for (int j = 1; j <= n_; ++j) window[j - 1] = (*this)(rhs(j));
    return AffinePermutation(n_, std::move(window));
}

AffinePermutation AffinePermutation::times_simple(int r) const {
    if (r < 0 || r >= n_) throw std::invalid_argument("simple reflection index must be in 0..n-1");
    std::vector<int> window(n_);
    for (int j = 1; j <= n_; ++j) {
        int res = pos_mod(j, n_);
        int target = j;
        if (res == r)
            target = j + 1;
        else if (res == pos_mod(r + 1, n_))
            target = j - 1;
        window[j - 1] = (*this)(target);
    }
    return AffinePermutation(n_, std::move(window));
}

AffinePermutation AffinePermutation::dynkin_reflect() const {
    std::vector<int> window(n_);
    for (int j = 1; j <= n_; ++j) window[j - 1] = n_ + 1 - (*this)(n_ + 1 - j);
    return AffinePermutation(n_, std::move(window));
}

long long AffinePermutation::coxeter_length() const {
    long long len = 0;
    for (int j = 1; j <= n_; ++j)
        for (int k = j + 1; k <= n_; ++k)
            len += std::abs(floor_div(window_[k - 1] - window_[j - 1], n_));
    return len;
}

std::string AffinePermutation::to_string() const {
    std::ostringstream out;
    out << '[';
    for (int j = 1; j <= n_; ++j) {
        if (j > 1) out << ',';
        out << window_[j - 1];
    }
    out << ']';
    return out.str();
}

std::pair<long long, long long> balance_counts(const AffinePermutation& w, int a, int b) {
    if (static_cast<long long>(a) - b != w.index())
        throw std::invalid_argument("balance cut requires a - b == index");
    int n = w.n();
    int min_disp = w.window()[0] - 1, max_disp = min_disp;
    for (int j = 1; j <= n; ++j) {
        min_disp = std::min(min_disp, w.window()[j - 1] - j);
        max_disp = std::max(max_disp, w.window()[j - 1] - j);
    }
    // w(t) <= a forces t <= a - min_disp; w(t) > a forces t > a - max_disp.
    long long low = 0, high = 0;
    for (int t = b + 1; t <= a - min_disp; ++t)
        if (w(t) <= a) ++low;
    for (int t = a - max_disp; t <= b; ++t)
        if (w(t) > a) ++high;
    return {low, high};
}

}  // namespace dars
