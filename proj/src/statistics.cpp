#include "dars/statistics.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace dars {

int d_statistic(const std::vector<int>& seq, int x) {
    int d = 0;
    int lows = 0;   // occurrences of x so far
    int highs = 0;  // occurrences of x+1 so far
    for (int v : seq) {
        if (v == x) {
            ++lows;
        } else if (v == x + 1) {
            ++highs;
            // The highs-th occurrence of x+1 needs highs-d earlier x's.
            d = std::max(d, highs - lows);
        } else {
            throw std::invalid_argument("d_statistic: entry outside {x, x+1}");
        }
    }
    return d;
}

namespace {

int infer_lower_value(const std::vector<int>& seq, bool& any) {
    int lo = 0, hi = 0;
    any = false;
    for (int v : seq) {
        if (!any) {
            lo = hi = v;
            any = true;
        } else {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    if (any && hi - lo > 1)
        throw std::invalid_argument("d_statistic: sequence must use two adjacent values");
    return lo;
}

}  // namespace

int d_statistic(const std::vector<int>& seq) {
    bool any = false;
    int x = infer_lower_value(seq, any);
    if (!any) return 0;
    return d_statistic(seq, x);
}

int delta_statistic(const std::vector<int>& a, const std::vector<int>& b, int x) {
    return std::max(d_statistic(a, x), d_statistic(b, x));
}

int delta_statistic(const std::vector<int>& a, const std::vector<int>& b) {
    std::multiset<int> content_a(a.begin(), a.end());
    std::multiset<int> content_b(b.begin(), b.end());
    if (content_a != content_b)
        throw std::invalid_argument("delta_statistic: words must have equal content");
    bool any_a = false, any_b = false;
    int xa = infer_lower_value(a, any_a);
    int xb = infer_lower_value(b, any_b);
    if (!any_a && !any_b) return 0;
    // Share one alphabet: use the smaller inferred base covering both.
    int x;
    if (!any_a)
        x = xb;
    else if (!any_b)
        x = xa;
    else
        x = std::min(xa, xb);
    return delta_statistic(a, b, x);
}

namespace {

// Column profile of the minimal inner shape, shared by the single and pair
// versions.  `ds[i]` is the deficiency of the {b_i - 1, b_i} subsequence(s)
// for the i-th largest value b_i; column k receives the sum of all ds[i]
// with b_i >= k+1.
Partition shape_from_deficiencies(const std::vector<int>& values_desc,
                                  const std::vector<int>& ds) {
    int max_col = values_desc.empty() ? 0 : values_desc.front() - 1;
    std::vector<int> profile(max_col, 0);
    int running = 0;
    std::size_t i = 0;
    for (int k = max_col; k >= 1; --k) {
        while (i < values_desc.size() && values_desc[i] >= k + 1) {
            running += ds[i];
            ++i;
        }
        profile[k - 1] = running;
    }
    return Partition::from_column_profile(profile);
}

std::vector<int> distinct_values_desc(const std::vector<int>& word) {
    std::set<int> vals(word.begin(), word.end());
    return {vals.rbegin(), vals.rend()};
}

std::vector<int> two_value_subsequence(const std::vector<int>& word, int x) {
    std::vector<int> sub;
    for (int v : word)
        if (v == x || v == x + 1) sub.push_back(v);
    return sub;
}

void check_word(const std::vector<int>& word) {
    for (int v : word)
        if (v < 1) throw std::invalid_argument("column words use entries >= 1");
}

}  // namespace

Partition minimal_inner_shape(const std::vector<int>& word) {
    check_word(word);
    std::vector<int> values = distinct_values_desc(word);
    std::vector<int> ds;
    ds.reserve(values.size());
    for (int b : values)
        ds.push_back(d_statistic(two_value_subsequence(word, b - 1), b - 1));
    return shape_from_deficiencies(values, ds);
}

Partition minimal_inner_shape_pair(const std::vector<int>& word_a,
                                   const std::vector<int>& word_b) {
    check_word(word_a);
    check_word(word_b);
    std::map<int, int> count_a, count_b;
    for (int v : word_a) ++count_a[v];
    for (int v : word_b) ++count_b[v];
    if (count_a != count_b)
        throw std::invalid_argument("pair minimization needs words with equal column usage");
    std::vector<int> values = distinct_values_desc(word_a);
    std::vector<int> ds;
    ds.reserve(values.size());
    for (int b : values)
        ds.push_back(delta_statistic(two_value_subsequence(word_a, b - 1),
                                     two_value_subsequence(word_b, b - 1), b - 1));
    return shape_from_deficiencies(values, ds);
}

}  // namespace dars
