// Tests for the independent oracles: asymptotic insertion rows, asymptotic
// evacuation rows, evacuation on tabloids, cell membership, and the
// verification suites built from them.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "dars/affine_permutation.hpp"
#include "dars/classical_rs.hpp"
#include "dars/dars_map.hpp"
#include "dars/enumerate.hpp"
#include "dars/errors.hpp"
#include "dars/finite_permutation.hpp"
#include "dars/oracles.hpp"
#include "dars/partition.hpp"
#include "dars/tabloid.hpp"
#include "dars/text_io.hpp"

using namespace dars;

namespace {

const AffinePermutation& running_example() {
    static const AffinePermutation w(4, {10, 3, -3, 12});
    return w;
}

std::vector<AffinePermutation> sample_windows() {
    std::vector<AffinePermutation> samples;
    for (const AffinePermutation& w : enumerate_window_box(2, -3, 4)) samples.push_back(w);
    for (const AffinePermutation& w : enumerate_by_length(3, 0, 4)) samples.push_back(w);
    samples.push_back(running_example());
    return samples;
}

}  // namespace

TEST_CASE("insertion shapes of finite words") {
    CHECK(insertion_shape({}) == Partition());
    CHECK(insertion_shape({5}) == Partition({1}));
    CHECK(insertion_shape({1, 2, 3}) == Partition({3}));
    CHECK(insertion_shape({3, 2, 1}) == Partition({1, 1, 1}));
    CHECK(insertion_shape({-5, 0, 3}) == Partition({3}));
    CHECK(insertion_shape({0, -1, -2}) == Partition({1, 1, 1}));
    CHECK(insertion_shape({3, 6, 5, 2, 1, 4}) == Partition({2, 2, 1, 1}));
    CHECK_THROWS_AS(insertion_shape({2, 7, 2}), std::invalid_argument);

    for (const FinitePermutation& u : all_finite_permutations(5)) {
        std::vector<int> word;
        for (int j = 1; j <= 5; ++j) word.push_back(u(j));
        CHECK(insertion_shape(word) == rs_insertion(u).p.shape());
    }
}

TEST_CASE("insertion rows of the running example stabilize to its tabloid") {
    const AsymptoticTabloid result = ptabloid_oracle(running_example());
    CHECK(result.tabloid == Tabloid({{1, 3}, {2}, {4}}));
    CHECK(result.stabilized_after >= 7 * 4);
    CHECK(result.stabilized_after % 4 == 0);
    CHECK(result.tabloid == forward(running_example()).p);
}

TEST_CASE("insertion rows of translations form a single row") {
    for (int n : {2, 3, 4})
        for (int i : {-2, 0, 3}) {
            const AsymptoticTabloid result =
                ptabloid_oracle(AffinePermutation::translation(n, i));
            CHECK(result.tabloid.rows() == 1);
            CHECK(result.tabloid.n() == n);
        }
}

TEST_CASE("the insertion oracle is insensitive to the starting offset") {
    const std::vector<AffinePermutation> windows = {
        running_example(),
        AffinePermutation(3, {5, -2, 0}),
        AffinePermutation(2, {0, 3}),
        AffinePermutation::embed(parse_finite_permutation("365214")),
    };
    for (const AffinePermutation& w : windows) {
        const Tabloid base = ptabloid_oracle(w).tabloid;
        for (int start : {1, 2, 3, w.n(), 17, -5})
            CHECK(ptabloid_oracle(w, start).tabloid == base);
    }
}

TEST_CASE("the insertion oracle agrees with the growth diagram") {
    for (const AffinePermutation& w : sample_windows()) {
        CAPTURE(w.to_string());
        CHECK(ptabloid_oracle(w).tabloid == forward(w).p);
    }
}

TEST_CASE("the evacuation oracle matches the reflected insertion rows") {
    for (const AffinePermutation& w : sample_windows()) {
        CAPTURE(w.to_string());
        const AsymptoticTabloid lhs = affine_evacuation_of(w);
        const AffinePermutation reflected = w.dynkin_reflect();
        CHECK(lhs.tabloid == ptabloid_oracle(reflected).tabloid);
        CHECK(lhs.tabloid == forward(reflected).p);
        CHECK(lhs.stabilized_after >= 6 * w.n());
    }
}

TEST_CASE("evacuation on tabloids is a shape-preserving involution") {
    SUBCASE("frozen values") {
        CHECK(evacuate_tabloid(Tabloid({{1, 2}})) == Tabloid({{1, 2}}));
        CHECK(evacuate_tabloid(Tabloid({{2, 3}, {1}})) == Tabloid({{2, 3}, {1}}));
        CHECK(evacuate_tabloid(Tabloid({{1, 3}, {2}})) == Tabloid({{1, 2}, {3}}));
        CHECK(evacuate_tabloid(Tabloid({{1, 2}, {3}})) == Tabloid({{1, 3}, {2}}));
        CHECK(evacuate_tabloid(Tabloid({{2}, {1}})) == Tabloid({{2}, {1}}));
        CHECK(evacuate_tabloid(Tabloid({{1}, {2}})) == Tabloid({{1}, {2}}));
        CHECK(evacuate_tabloid(Tabloid({{1, 3}, {2}, {4}})) == Tabloid({{1, 3}, {2}, {4}}));
    }
    SUBCASE("involution over every tabloid with at most four entries") {
        for (int n = 1; n <= 4; ++n)
            for (const Partition& mu : partitions_of(n))
                for (const Tabloid& t : tabloids_of_shape(mu)) {
                    CAPTURE(t.to_string());
                    const Tabloid e = evacuate_tabloid(t);
                    CHECK(e.shape() == mu);
                    CHECK(evacuate_tabloid(e) == t);
                }
    }
    SUBCASE("empty tabloids are usage errors") {
        CHECK_THROWS_AS(evacuate_tabloid(Tabloid()), std::invalid_argument);
    }
}

TEST_CASE("oracle resource caps are enforced") {
    // The stopping rule needs at least seven blocks of evidence, so a
    // six-block cap can never be met.
    const OracleLimits tight{6, 12};
    CHECK_THROWS_AS(ptabloid_oracle(running_example(), 0, tight), ResourceLimitError);
    CHECK_THROWS_AS(affine_evacuation_of(running_example(), 0, tight), ResourceLimitError);
    CHECK_THROWS_AS(ptabloid_oracle(AffinePermutation::identity(2), 0, tight),
                    ResourceLimitError);
}

TEST_CASE("cell membership compares the tabloids of index-zero windows") {
    const AffinePermutation id2 = AffinePermutation::identity(2);
    const AffinePermutation a(2, {3, 0});
    const AffinePermutation b(2, {5, -2});
    const AffinePermutation c(2, {-1, 4});

    CHECK(same_right_cell(id2, id2));
    CHECK(same_left_cell(id2, id2));
    CHECK(same_right_cell(a, b));
    CHECK_FALSE(same_right_cell(id2, a));
    CHECK_FALSE(same_right_cell(a, c));

    SUBCASE("nonzero index or mismatched sizes are usage errors") {
        const AffinePermutation shifted = AffinePermutation::translation(2, 1);
        CHECK_THROWS_AS(same_right_cell(shifted, shifted), std::invalid_argument);
        CHECK_THROWS_AS(same_left_cell(id2, shifted), std::invalid_argument);
        CHECK_THROWS_AS(same_right_cell(id2, AffinePermutation::identity(3)),
                        std::invalid_argument);
    }

    SUBCASE("the cell partition matches the insertion oracle") {
        const std::vector<AffinePermutation> ball = enumerate_by_length(3, 0, 4);
        std::vector<Tabloid> via_map, via_oracle, via_map_q, via_evac;
        for (const AffinePermutation& w : ball) {
            const DarsTuple t = forward(w);
            via_map.push_back(t.p);
            via_map_q.push_back(t.q);
            via_oracle.push_back(ptabloid_oracle(w).tabloid);
            via_evac.push_back(forward(w.inverse().dynkin_reflect()).p);
        }
        for (std::size_t i = 0; i < ball.size(); ++i)
            for (std::size_t j = i + 1; j < ball.size(); ++j) {
                CHECK(same_right_cell(ball[i], ball[j]) == (via_oracle[i] == via_oracle[j]));
                CHECK(same_left_cell(ball[i], ball[j]) == (via_evac[i] == via_evac[j]));
                CHECK((via_map[i] == via_map[j]) == (via_oracle[i] == via_oracle[j]));
                CHECK((via_map_q[i] == via_map_q[j]) == (via_evac[i] == via_evac[j]));
            }
    }
}

TEST_CASE("the duality suite records four checks per element") {
    const std::vector<AffinePermutation> elements = {
        AffinePermutation::identity(2), AffinePermutation(2, {3, 0}), running_example()};
    const SuiteReport report = duality_suite(elements);
    CHECK(report.records.size() == 12);
    CHECK(report.passed == 12);
    CHECK(report.failed == 0);
    CHECK(report.all_pass());
    const std::vector<std::string> suites = {"duality.qbar", "duality.evac", "oracle.pbar",
                                             "oracle.index"};
    for (std::size_t i = 0; i < report.records.size(); ++i) {
        CHECK(report.records[i].suite == suites[i % 4]);
        CHECK(report.records[i].input == elements[i / 4].to_string());
        CHECK(report.records[i].details.empty());
    }
}

TEST_CASE("suite failures are caught per element") {
    const OracleLimits tight{6, 12};
    const SuiteReport report = duality_suite({AffinePermutation::identity(2)}, tight);
    CHECK_FALSE(report.all_pass());
    CHECK(report.failed == 1);
    REQUIRE(!report.records.empty());
    CHECK(report.records.back().suite == "duality.exception");
    CHECK_FALSE(report.records.back().details.empty());
}

TEST_CASE("suite reports merge by concatenation") {
    SuiteReport a = duality_suite({AffinePermutation::identity(2)});
    const SuiteReport b = roundtrip_suite({AffinePermutation::identity(2)});
    CHECK(b.records.size() == 1);
    CHECK(b.records[0].suite == "roundtrip.window");
    a.merge(b);
    CHECK(a.records.size() == 5);
    CHECK(a.passed == 5);
    CHECK(a.failed == 0);
    CHECK(a.all_pass());
}

TEST_CASE("the invariant suite records eight checks per element") {
    const std::vector<AffinePermutation> elements = {AffinePermutation::identity(2),
                                                     AffinePermutation(2, {3, 0})};
    const SuiteReport report = invariant_suite(elements);
    CHECK(report.records.size() == 16);
    CHECK(report.all_pass());
    const std::vector<std::string> suites = {
        "invariants.rows",      "invariants.colors",    "invariants.consistency",
        "invariants.crossing",  "invariants.index",     "invariants.dominance",
        "invariants.stability", "invariants.persistence"};
    for (std::size_t i = 0; i < report.records.size(); ++i)
        CHECK(report.records[i].suite == suites[i % 8]);
}

TEST_CASE("all suites pass over sample enumerations") {
    std::vector<AffinePermutation> elements;
    for (const AffinePermutation& w : enumerate_window_box(2, -2, 3)) elements.push_back(w);
    for (const AffinePermutation& w : enumerate_by_length(3, 0, 3)) elements.push_back(w);
    for (const AffinePermutation& w : enumerate_by_length(3, -1, 2)) elements.push_back(w);
    elements.push_back(running_example());

    SuiteReport merged = duality_suite(elements);
    merged.merge(roundtrip_suite(elements));
    merged.merge(invariant_suite(elements));
    CHECK(merged.all_pass());
    CHECK(merged.failed == 0);
    CHECK(merged.records.size() == elements.size() * 13);
}
