// Acceptance suite: ten end-to-end criteria, each printing one pass/fail
// line with its runtime.  Failures also fail the embedded doctest checks so
// the binary reports them to ctest.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cstdio>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dars/affine_permutation.hpp"
#include "dars/classical_rs.hpp"
#include "dars/dars_map.hpp"
#include "dars/enumerate.hpp"
#include "dars/finite_permutation.hpp"
#include "dars/growth_region.hpp"
#include "dars/oracles.hpp"
#include "dars/partition.hpp"
#include "dars/skew_tableau.hpp"
#include "dars/statistics.hpp"
#include "dars/tabloid.hpp"
#include "dars/text_io.hpp"
#include "skew_search.hpp"

using namespace dars;

namespace {

// Collects failures for one acceptance criterion and prints a single
// pass/fail line when finished.
struct Criterion {
    int number;
    std::string title;
    std::vector<std::string> failures;
    std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

    Criterion(int number, std::string title) : number(number), title(std::move(title)) {}

    void require(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }

    void finish(double budget_seconds = 0.0) {
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
        if (budget_seconds > 0.0 && elapsed >= budget_seconds) {
            char message[96];
            std::snprintf(message, sizeof(message), "took %.2fs, budget %.0fs", elapsed,
                          budget_seconds);
            failures.push_back(message);
        }
        const bool pass = failures.empty();
        std::printf("[%s] criterion %2d: %s (%.2fs)\n", pass ? "PASS" : "FAIL", number,
                    title.c_str(), elapsed);
        for (std::size_t i = 0; i < failures.size() && i < 3; ++i)
            std::printf("               - %s\n", failures[i].c_str());
        if (failures.size() > 3)
            std::printf("               - ... and %zu more\n", failures.size() - 3);
        std::fflush(stdout);
        CHECK_MESSAGE(pass, "criterion ", number, " failed: ",
                      failures.empty() ? std::string("-") : failures.front());
    }
};

const AffinePermutation& running_example() {
    static const AffinePermutation w(4, {10, 3, -3, 12});
    return w;
}

// Shared sample: every two-line window with entries in [-6, 8] and the
// three-line length balls at indices -1, 0, 1.
std::vector<AffinePermutation> sampled_windows() {
    std::vector<AffinePermutation> windows;
    for (const AffinePermutation& w : enumerate_window_box(2, -6, 8)) windows.push_back(w);
    for (int index : {-1, 0, 1})
        for (const AffinePermutation& w : enumerate_by_length(3, index, 8))
            windows.push_back(w);
    return windows;
}

std::string shape_text(const Partition& p) {
    return p.empty() ? std::string("()") : "(" + p.to_string() + ")";
}

}  // namespace

TEST_CASE("criterion 1: the running example maps to its tuple") {
    Criterion c(1, "window [10,3,-3,12] maps to (1,3/2/4, 1,2/3/4, (6,6,5), 7)");
    const AffinePermutation w = parse_window("10,3,-3,12");
    c.require(w == running_example(), "parsing the window text");
    const DarsTuple t = forward(w);
    c.require(t.p.to_string() == "1,3/2/4", "first tabloid is " + t.p.to_string());
    c.require(t.q.to_string() == "1,2/3/4", "second tabloid is " + t.q.to_string());
    c.require(t.lambda == Partition({6, 6, 5}), "inner shape is " + shape_text(t.lambda));
    c.require(t.n0 == 7, "stable window is " + std::to_string(t.n0));
    c.finish(1.0);
}

TEST_CASE("criterion 2: the classical constructions agree") {
    Criterion c(2, "growth, shadow, insertion, and dual constructions agree up to n = 6");
    const FinitePermutation u = parse_finite_permutation("365214");
    const RsPair fixture = rs_insertion(u);
    c.require(fixture.p.to_string() == "1,4/2,5/3/6",
              "worked insertion tableau is " + fixture.p.to_string());
    c.require(fixture.q.to_string() == "1,2/3,6/4/5",
              "worked recording tableau is " + fixture.q.to_string());

    long long cases = 0;
    for (int n = 1; n <= 6; ++n)
        for (const FinitePermutation& v : all_finite_permutations(n)) {
            ++cases;
            const RsPair ins = rs_insertion(v);
            if (rs_growth(v) != ins) {
                c.require(false, "growth disagrees on " + v.to_string());
                continue;
            }
            if (rs_shadow(v) != ins) {
                c.require(false, "shadow lines disagree on " + v.to_string());
                continue;
            }
            const DualRsResult dual = dual_rs(v);
            if (dual.west != ins.p || evacuation(dual.south) != ins.q)
                c.require(false, "dual construction disagrees on " + v.to_string());
        }
    c.require(cases == 873, "expected 873 permutations, saw " + std::to_string(cases));
    c.finish(10.0);
}

TEST_CASE("criterion 3: inverse of forward recovers every sampled window") {
    Criterion c(3, "inverse of forward is the identity on 439 sampled windows");
    const std::vector<AffinePermutation> windows = sampled_windows();
    c.require(windows.size() == 439,
              "expected 439 windows, saw " + std::to_string(windows.size()));
    for (const AffinePermutation& w : windows) {
        const AffinePermutation back = inverse(forward(w));
        if (back != w)
            c.require(false, "window " + w.to_string() + " came back as " + back.to_string());
    }
    c.finish(120.0);
}

TEST_CASE("criterion 4: forward of inverse reproduces every validated tuple") {
    Criterion c(4, "forward of inverse is the identity on every validated tuple");
    long long valid_by_n[4] = {0, 0, 0, 0};
    for (int n : {2, 3}) {
        for (const Partition& mu : partitions_of(n)) {
            const std::vector<Tabloid> tabs = tabloids_of_shape(mu);
            const std::vector<Partition> inner_shapes = partitions_up_to(8, mu.rows());
            for (const Tabloid& p : tabs)
                for (const Tabloid& q : tabs)
                    for (const Partition& lambda : inner_shapes) {
                        std::vector<int> depths = {2, 3,
                                                   2 + (lambda.total() + n - 1) / n};
                        std::sort(depths.begin(), depths.end());
                        depths.erase(std::unique(depths.begin(), depths.end()),
                                     depths.end());
                        for (int n0 : depths) {
                            const DarsTuple t{p, q, lambda, n0};
                            if (!validate(t).valid) continue;
                            ++valid_by_n[n];
                            const AffinePermutation w = inverse(t);
                            if (forward(w) != t)
                                c.require(false, "tuple (" + p.to_string() + ", " +
                                                     q.to_string() + ", " +
                                                     shape_text(lambda) + ", " +
                                                     std::to_string(n0) +
                                                     ") does not come back");
                        }
                    }
        }
    }
    c.require(valid_by_n[2] == 92, "expected 92 validated two-line tuples, saw " +
                                       std::to_string(valid_by_n[2]));
    c.require(valid_by_n[3] == 1597, "expected 1597 validated three-line tuples, saw " +
                                         std::to_string(valid_by_n[3]));
    c.finish(120.0);
}

TEST_CASE("criterion 5: full-window shapes follow the index identity") {
    Criterion c(5, "every full window m has |shape| = n(m-2) - index");
    std::vector<AffinePermutation> windows = sampled_windows();
    windows.push_back(running_example());
    long long full_windows = 0;
    for (const AffinePermutation& w : windows) {
        const int n = w.n();
        const int n0 = first_stable_window(w).n0;
        GrowthRegion region = GrowthRegion::build(w, n0 + 4);
        for (int m = 1; m <= n0 + 3; ++m) {
            if (!region.window_is_full(m)) continue;
            ++full_windows;
            const int size = region.vertex_partition((m - 1) * n, n).total();
            if (size != n * (m - 2) - w.index())
                c.require(false, "window " + std::to_string(m) + " of " + w.to_string() +
                                     " has size " + std::to_string(size));
        }
    }
    c.require(full_windows > 1000,
              "expected over 1000 full windows, saw " + std::to_string(full_windows));
    c.finish();
}

TEST_CASE("criterion 6: the growth diagram matches the insertion-row oracle") {
    Criterion c(6, "first tabloids agree with asymptotic insertion rows");
    std::vector<AffinePermutation> windows = sampled_windows();
    windows.push_back(running_example());
    for (const AffinePermutation& w : windows) {
        if (forward(w).p != ptabloid_oracle(w).tabloid)
            c.require(false, "oracle disagrees on " + w.to_string());
    }
    c.finish();
}

TEST_CASE("criterion 7: the reflection dualities hold") {
    Criterion c(7, "second tabloids and evacuation rows obey the reflection dualities");
    std::vector<AffinePermutation> windows = sampled_windows();
    windows.push_back(running_example());
    for (const AffinePermutation& w : windows) {
        if (forward(w).q != forward(w.inverse().dynkin_reflect()).p)
            c.require(false, "second tabloid of " + w.to_string() +
                                 " differs from the reflected inverse's first");
        if (affine_evacuation_of(w).tabloid != ptabloid_oracle(w.dynkin_reflect()).tabloid)
            c.require(false, "evacuation rows of " + w.to_string() +
                                 " differ from the reflected insertion rows");
    }
    c.finish();
}

TEST_CASE("criterion 8: structural invariants hold on sampled regions") {
    Criterion c(8, "row bounds, colours, crossings, dominance, stability, persistence");
    std::vector<AffinePermutation> windows;
    for (const AffinePermutation& w : enumerate_window_box(2, -4, 5)) windows.push_back(w);
    for (int index : {-1, 0, 1})
        for (const AffinePermutation& w : enumerate_by_length(3, index, 6))
            windows.push_back(w);
    windows.push_back(running_example());

    const SuiteReport report = invariant_suite(windows);
    c.require(report.records.size() == windows.size() * 8,
              "expected eight records per window");
    for (const CheckRecord& record : report.records)
        if (!record.pass)
            c.require(false, record.suite + " fails on " + record.input + ": " +
                                 record.details);
    c.finish();
}

TEST_CASE("criterion 9: minimal inner shapes match exhaustive search") {
    Criterion c(9, "minimal inner shapes equal direct search over all short column words");

    // Single words: every word of length at most 6 over the alphabet 1..5.
    long long singles = 0;
    std::vector<int> word;
    const auto check_word = [&](auto&& self) -> void {
        ++singles;
        bool least_exists = false;
        const std::optional<Partition> least =
            dars_test::least_admissible({word}, 6, 4, least_exists);
        const Partition computed = minimal_inner_shape(word);
        if (!least || !least_exists || *least != computed) {
            std::string text = "word (";
            for (std::size_t i = 0; i < word.size(); ++i)
                text += (i ? "," : "") + std::to_string(word[i]);
            text += "): computed " + shape_text(computed);
            if (!least)
                text += " but nothing in the box is admissible";
            else if (!least_exists)
                text += " but the admissible family has no least element";
            else
                text += " but direct search gives " + shape_text(*least);
            c.require(false, text);
        }
        if (word.size() == 6) return;
        for (int letter = 1; letter <= 5; ++letter) {
            word.push_back(letter);
            self(self);
            word.pop_back();
        }
    };
    check_word(check_word);
    c.require(singles == 19531, "expected 19531 words, saw " + std::to_string(singles));

    // Pairs with equal content: every pair of words of length at most 4 over
    // the alphabet 1..4 sharing a multiset of letters.
    std::map<std::vector<int>, std::vector<std::vector<int>>> by_content;
    std::vector<int> pair_word;
    const auto collect = [&](auto&& self) -> void {
        std::vector<int> key = pair_word;
        std::sort(key.begin(), key.end());
        by_content[key].push_back(pair_word);
        if (pair_word.size() == 4) return;
        for (int letter = 1; letter <= 4; ++letter) {
            pair_word.push_back(letter);
            self(self);
            pair_word.pop_back();
        }
    };
    collect(collect);
    long long pairs = 0;
    for (const auto& [content, group] : by_content)
        for (const std::vector<int>& a : group)
            for (const std::vector<int>& b : group) {
                ++pairs;
                bool least_exists = false;
                const std::optional<Partition> least =
                    dars_test::least_admissible({a, b}, 4, 3, least_exists);
                const Partition computed = minimal_inner_shape_pair(a, b);
                if (!least || !least_exists || *least != computed)
                    c.require(false, "a pair of words of content size " +
                                         std::to_string(content.size()) + " disagrees");
            }
    c.require(pairs > 3000, "expected over 3000 pairs, saw " + std::to_string(pairs));
    c.finish(60.0);
}

TEST_CASE("criterion 10: validation fixtures fail and pass as designed") {
    Criterion c(10, "validation conditions and saturation diagrams behave on the fixtures");
    const Tabloid two_one({{2}, {1}});
    c.require(validate(DarsTuple{two_one, two_one, Partition({1}), 3}).first_failure() == "2b",
              "inner shape (1) should fail the straightening condition");
    c.require(validate(DarsTuple{two_one, two_one, Partition({2}), 3}).valid,
              "inner shape (2) should validate");
    c.require(validate(DarsTuple{two_one, two_one, Partition({3, 1}), 3}).first_failure() ==
                  "3",
              "inner shape (3,1) should fail minimality");

    const OmegaDiagram left =
        build_omega(skew_from_tabloid(Partition({2, 1}), Tabloid({{1, 4}, {2, 3}})),
                    skew_from_tabloid(Partition({2, 1}), Tabloid({{2, 3}, {1, 4}})));
    c.require(!left.saturated, "the conflicting pair should not saturate");
    c.require(left.conflict_tiles.size() == 1 &&
                  left.conflict_tiles.front() == std::pair<int, int>(3, 4),
              "the conflicting pair should clash exactly at tile (3, 4)");

    const OmegaDiagram right =
        build_omega(skew_from_tabloid(Partition({4, 3}), Tabloid({{1, 3, 4}, {2}})),
                    skew_from_tabloid(Partition({4, 3}), Tabloid({{1, 2, 3}, {4}})));
    c.require(right.saturated && right.conflict_tiles.empty(),
              "the compatible pair should saturate");
    c.finish();
}
