#include "dars/oracles.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dars/enumerate.hpp"
#include "dars/errors.hpp"
#include "dars/skew_tableau.hpp"

namespace dars {

namespace {

int pos_mod(int a, int n) {
    const int r = a % n;
    return r < 0 ? r + n : r;
}

// Residue class of a value, in 1..n.
int residue(int value, int n) { return pos_mod(value - 1, n) + 1; }

// Schensted row insertion for pairwise distinct integers, tracking the row
// of every inserted value.
class RowInsertion {
public:
    void insert(int x) {
        for (std::size_t r = 0;; ++r) {
            if (r == rows_.size()) {
                rows_.push_back({x});
                row_of_[x] = static_cast<int>(r) + 1;
                return;
            }
            std::vector<int>& row = rows_[r];
            const auto it = std::upper_bound(row.begin(), row.end(), x);
            if (it == row.end()) {
                row.push_back(x);
                row_of_[x] = static_cast<int>(r) + 1;
                return;
            }
            const int bumped = *it;
            *it = x;
            row_of_[x] = static_cast<int>(r) + 1;
            x = bumped;
        }
    }

    int row_of(int value) const { return row_of_.at(value); }
    const std::vector<std::vector<int>>& rows() const { return rows_; }

private:
    std::vector<std::vector<int>> rows_;
    std::unordered_map<int, int> row_of_;
};

}  // namespace

Partition insertion_shape(const std::vector<int>& word) {
    if (std::set<int>(word.begin(), word.end()).size() != word.size())
        throw std::invalid_argument("insertion needs pairwise distinct entries");
    RowInsertion ins;
    for (int x : word) ins.insert(x);
    std::vector<int> parts;
    parts.reserve(ins.rows().size());
    for (const std::vector<int>& row : ins.rows()) parts.push_back(static_cast<int>(row.size()));
    return Partition(parts);
}

namespace {

// Longest run of consecutive blocks whose residue-to-row maps agree, if it
// holds a strict majority of the b blocks read so far.  Early blocks can sit
// on plateaus that never move again yet differ from the limit, and blocks
// near the truncation edge are still being bumped, but both regions have
// width independent of the depth: only the true limit's run keeps growing,
// so only it can stay a strict majority.
template <typename BlockMap>
std::vector<int> majority_run(int b, const BlockMap& block_map) {
    int best_len = 0, run_len = 0;
    std::vector<int> best, run;
    for (int k = 1; k <= b; ++k) {
        std::vector<int> map = block_map(k);
        if (k > 1 && map == run) {
            ++run_len;
        } else {
            run = std::move(map);
            run_len = 1;
        }
        if (run_len > best_len) {
            best_len = run_len;
            best = run;
        }
    }
    if (2 * best_len > b) return best;
    return {};
}

}  // namespace

AsymptoticTabloid ptabloid_oracle(const AffinePermutation& w, int start,
                                  const OracleLimits& limits) {
    const int n = w.n();
    RowInsertion ins;
    std::vector<int> previous;
    for (int b = 1; b <= limits.max_blocks; ++b) {
        for (int k = (b - 1) * n + 1; k <= b * n; ++k) ins.insert(w(start + k));
        if (b < 6) continue;
        // Each block holds one value per residue class, so its residue-to-row
        // map is total.  Stabilization requires the same map to win a strict
        // majority of the blocks at two consecutive depths.
        const auto block_map = [&](int k) {
            std::vector<int> map(n);
            for (int i = (k - 1) * n + 1; i <= k * n; ++i) {
                const int v = w(start + i);
                map[residue(v, n) - 1] = ins.row_of(v);
            }
            return map;
        };
        std::vector<int> winner = majority_run(b, block_map);
        if (!winner.empty() && winner == previous) return {tabloid_from_row_map(winner), b * n};
        previous = std::move(winner);
    }
    throw ResourceLimitError("insertion rows of " + w.to_string() + " did not stabilize within " +
                             std::to_string(limits.max_blocks) + " blocks");
}

AsymptoticTabloid affine_evacuation_of(const AffinePermutation& w, int start,
                                       const OracleLimits& limits) {
    const int n = w.n();
    std::vector<int> previous;
    for (int b = 6; b <= limits.max_blocks; ++b) {
        const int m = b * n;
        // Insert the segment (w(n+1-start-m), ..., w(n-start)) and evacuate
        // its standardization.  Read right-to-left and complemented, the
        // segment is a prefix of the reflected permutation r(w), and
        // evacuation reverses ranks: the row of value n+1-v in the insertion
        // tableau of that prefix is the row of entry m+1-rank(v) in the
        // evacuated tableau.  The rows are read off blocks of the r(w)-prefix
        // with the same majority stopping rule as ptabloid_oracle.
        RowInsertion ins;
        std::vector<int> sorted;
        sorted.reserve(m);
        for (int p = n - start - m + 1; p <= n - start; ++p) {
            const int value = w(p);
            ins.insert(value);
            sorted.push_back(value);
        }
        std::sort(sorted.begin(), sorted.end());
        std::unordered_map<int, int> rank;
        for (std::size_t i = 0; i < sorted.size(); ++i)
            rank[sorted[i]] = static_cast<int>(i) + 1;
        std::vector<std::vector<int>> ranked(ins.rows());
        for (std::vector<int>& row : ranked)
            for (int& x : row) x = rank.at(x);
        const StandardTableau evac = evacuation(StandardTableau(ranked));

        // Prefix position i of r(w) carries value n+1-v with v = w(n+1-start-i).
        const auto block_map = [&](int k) {
            std::vector<int> map(n);
            for (int i = (k - 1) * n + 1; i <= k * n; ++i) {
                const int v = w(n + 1 - start - i);
                map[residue(n + 1 - v, n) - 1] = evac.row_of(m + 1 - rank.at(v));
            }
            return map;
        };
        std::vector<int> winner = majority_run(b, block_map);
        if (!winner.empty() && winner == previous) return {tabloid_from_row_map(winner), m};
        previous = std::move(winner);
    }
    throw ResourceLimitError("evacuation rows of " + w.to_string() + " did not stabilize within " +
                             std::to_string(limits.max_blocks) + " blocks");
}

Tabloid evacuate_tabloid(const Tabloid& t, const OracleLimits& limits) {
    const int n = t.n();
    if (n < 1) throw std::invalid_argument("evacuation needs a nonempty tabloid");
    // Only one tabloid has a single entry, and an involution fixes it.
    if (n == 1) return t;
    const Partition mu = t.shape();
    const std::vector<Tabloid> qs = tabloids_of_shape(mu);
    for (int size = 0; size <= limits.max_lambda_total; ++size)
        for (const Partition& lambda : partitions_of(size)) {
            if (lambda.rows() > mu.rows()) continue;
            DarsTuple candidate;
            candidate.p = t;
            candidate.lambda = lambda;
            candidate.n0 = 2 + (size + n - 1) / n;
            for (const Tabloid& q : qs) {
                candidate.q = q;
                if (!validate(candidate).valid) continue;
                const AffinePermutation witness = inverse(candidate);
                return forward(witness.dynkin_reflect()).p;
            }
        }
    throw ResourceLimitError("no permutation with first tabloid " + t.to_string() +
                             " found within |lambda| <= " +
                             std::to_string(limits.max_lambda_total));
}

namespace {

void require_index_zero(const AffinePermutation& u, const AffinePermutation& w) {
    if (u.n() != w.n())
        throw std::invalid_argument("cell comparison needs permutations of the same n");
    if (u.index() != 0 || w.index() != 0)
        throw std::invalid_argument("cell comparison is defined for index 0 only");
}

}  // namespace

bool same_right_cell(const AffinePermutation& u, const AffinePermutation& w,
                     const GrowthLimits& limits) {
    require_index_zero(u, w);
    return forward(u, limits).p == forward(w, limits).p;
}

bool same_left_cell(const AffinePermutation& u, const AffinePermutation& w,
                    const GrowthLimits& limits) {
    require_index_zero(u, w);
    return forward(u, limits).q == forward(w, limits).q;
}

void SuiteReport::add(CheckRecord record) {
    if (record.pass)
        ++passed;
    else
        ++failed;
    records.push_back(std::move(record));
}

void SuiteReport::merge(const SuiteReport& other) {
    records.insert(records.end(), other.records.begin(), other.records.end());
    passed += other.passed;
    failed += other.failed;
}

SuiteReport duality_suite(const std::vector<AffinePermutation>& elements,
                          const OracleLimits& limits) {
    SuiteReport report;
    for (const AffinePermutation& w : elements) {
        const std::string input = w.to_string();
        try {
        const DarsTuple image = forward(w);
        {
            const Tabloid other = forward(w.inverse().dynkin_reflect()).p;
            const bool pass = image.q == other;
            report.add({"duality.qbar", input, pass,
                        pass ? ""
                             : "q = " + image.q.to_string() + " but the reflected inverse gives " +
                                   other.to_string()});
        }
        {
            const Tabloid lhs = affine_evacuation_of(w, 0, limits).tabloid;
            const Tabloid rhs = ptabloid_oracle(w.dynkin_reflect(), 0, limits).tabloid;
            const bool pass = lhs == rhs;
            report.add({"duality.evac", input, pass,
                        pass ? ""
                             : "evacuation rows give " + lhs.to_string() +
                                   " but the reflected insertion rows give " + rhs.to_string()});
        }
        {
            const Tabloid oracle = ptabloid_oracle(w, 0, limits).tabloid;
            const bool pass = image.p == oracle;
            report.add({"oracle.pbar", input, pass,
                        pass ? ""
                             : "growth diagram gives " + image.p.to_string() +
                                   " but insertion rows give " + oracle.to_string()});
        }
        {
            const bool pass = image.index() == w.index();
            report.add({"oracle.index", input, pass,
                        pass ? ""
                             : "tuple index " + std::to_string(image.index()) +
                                   " but window index " + std::to_string(w.index())});
        }
        } catch (const std::exception& e) {
            report.add({"duality.exception", input, false, e.what()});
        }
    }
    return report;
}

SuiteReport roundtrip_suite(const std::vector<AffinePermutation>& elements,
                            const GrowthLimits& limits) {
    SuiteReport report;
    for (const AffinePermutation& w : elements) {
        try {
            const AffinePermutation back = inverse(forward(w, limits), limits);
            const bool pass = back == w;
            report.add({"roundtrip.window", w.to_string(), pass,
                        pass ? "" : "inverse returned " + back.to_string()});
        } catch (const std::exception& e) {
            report.add({"roundtrip.window", w.to_string(), false,
                        std::string("exception: ") + e.what()});
        }
    }
    return report;
}

namespace {

// Colour-based stability: east and west colours agree and the colour
// multiplicities weakly decrease.  Windows with unlabelled boundary edges
// report false.
bool color_stable(const WindowSummary& s, int n) {
    if (s.east_colors != s.west_colors) return false;
    std::vector<int> multiplicity(n + 2, 0);
    for (int c : s.east_colors) {
        if (c < 1 || c > n) return false;
        ++multiplicity[c];
    }
    for (int c = 1; c < n; ++c)
        if (multiplicity[c] < multiplicity[c + 1]) return false;
    return true;
}

std::string edge_name(const char* kind, int r, int c) {
    std::ostringstream out;
    out << kind << "(" << r << ", " << c << ")";
    return out.str();
}

}  // namespace

SuiteReport invariant_suite(const std::vector<AffinePermutation>& elements,
                            const GrowthLimits& limits) {
    SuiteReport report;
    for (const AffinePermutation& w : elements) {
        const std::string input = w.to_string();
        const int n = w.n();
        try {
        const int n0 = first_stable_window(w, limits).n0;
        // Deep enough to summarise windows up to n0 + 3.
        GrowthRegion region = GrowthRegion::build(w, n0 + 5);

        {
            bool ok = true;
            std::string details;
            for (int r = region.top_row_line(); r <= region.bottom_row_line() && ok; ++r)
                for (int c = 0; c <= n; ++c) {
                    if (region.vertex_partition(r, c).rows() <= n) continue;
                    ok = false;
                    details = "vertex (" + std::to_string(r) + ", " + std::to_string(c) +
                              ") has more than " + std::to_string(n) + " rows";
                    break;
                }
            report.add({"invariants.rows", input, ok, std::move(details)});
        }
        {
            bool ok = true;
            std::string details;
            for (int r = region.top_row_line() + 1; r <= region.bottom_row_line() && ok; ++r)
                for (int c = 0; c <= n; ++c) {
                    if (region.vertical_label(r, c) == 0) continue;
                    const int color = region.vertical_color(r, c);
                    if (color >= 1 && color <= n) continue;
                    ok = false;
                    details = edge_name("V", r, c) + " has colour " + std::to_string(color);
                    break;
                }
            report.add({"invariants.colors", input, ok, std::move(details)});
        }
        {
            // Pipe-colour consistency and the crossing rule, over the window
            // columns of the rows up to window n0 + 2.
            bool consistent = true;
            bool crossing = true;
            std::string bad_consistency, bad_crossing;
            for (int i = region.top_row_line() + 1; i <= (n0 + 2) * n; ++i)
                for (int j = 1; j <= n; ++j) {
                    const TileClass tile = region.tile_class(i, j);
                    if (tile == TileClass::Marked || tile == TileClass::Bump) {
                        // The south-west pipe's colour via the trace from its
                        // south edge versus the multiplicity rule on its west
                        // edge.
                        const int via_trace = horizontal_edge_color(region, i, j, limits);
                        const int via_mult = region.vertical_color(i, j - 1);
                        if (consistent && via_trace != via_mult) {
                            consistent = false;
                            bad_consistency = "tile (" + std::to_string(i) + ", " +
                                              std::to_string(j) + ") pipe traced " +
                                              std::to_string(via_trace) + " but counted " +
                                              std::to_string(via_mult);
                        }
                    } else if (tile == TileClass::Cross) {
                        const int north = region.horizontal_label(i - 1, j);
                        const int east = region.vertical_label(i, j);
                        if (east != 0) {
                            const int via_east = region.vertical_color(i, j);
                            const int via_west = region.vertical_color(i, j - 1);
                            if (consistent && via_east != via_west) {
                                consistent = false;
                                bad_consistency = "tile (" + std::to_string(i) + ", " +
                                                  std::to_string(j) + ") pipe coloured " +
                                                  std::to_string(via_east) + " east but " +
                                                  std::to_string(via_west) + " west";
                            }
                            if (north != 0 && crossing) {
                                const int ns = horizontal_edge_color(region, i - 1, j, limits);
                                const bool ok = (ns >= via_east || north > east) &&
                                                (via_east >= ns || east > north);
                                if (!ok) {
                                    crossing = false;
                                    bad_crossing =
                                        "tile (" + std::to_string(i) + ", " + std::to_string(j) +
                                        ") crosses labels " + std::to_string(north) + "/" +
                                        std::to_string(east) + " with colours " +
                                        std::to_string(ns) + "/" + std::to_string(via_east);
                                }
                            }
                        }
                    }
                }
            report.add({"invariants.consistency", input, consistent, std::move(bad_consistency)});
            report.add({"invariants.crossing", input, crossing, std::move(bad_crossing)});
        }
        {
            bool index_ok = true;
            bool dominance_ok = true;
            bool stability_ok = true;
            std::string bad_index, bad_dominance, bad_stability;
            for (int m = 1; m <= n0 + 3; ++m) {
                if (!region.window_is_full(m)) continue;
                const Partition lambda = region.vertex_partition((m - 1) * n, n);
                if (index_ok && lambda.total() != n * (m - 2) - w.index()) {
                    index_ok = false;
                    bad_index = "window " + std::to_string(m) + " has |lambda| = " +
                                std::to_string(lambda.total()) + ", expected " +
                                std::to_string(n * (m - 2) - w.index());
                }
                if (m <= n0 + 2 && region.window_is_full(m + 1)) {
                    const Partition next = region.vertex_partition(m * n, n);
                    const Partition after = region.vertex_partition((m + 1) * n, n);
                    const Composition mu(subtract(next, lambda));
                    const Composition mu_next(subtract(after, next));
                    if (dominance_ok &&
                        (mu.total() != mu_next.total() || !dominates(mu_next, mu))) {
                        dominance_ok = false;
                        bad_dominance = "mu^" + std::to_string(m + 1) + " = (" +
                                        mu_next.to_string() + ") does not dominate mu^" +
                                        std::to_string(m) + " = (" + mu.to_string() + ")";
                    }
                }
                WindowSummary s = window_summary(region, m, limits);
                if (stability_ok && color_stable(s, n) != s.is_stable) {
                    stability_ok = false;
                    bad_stability = "window " + std::to_string(m) +
                                    (s.is_stable ? " is stable but its colours disagree"
                                                 : " is not stable but its colours agree");
                }
            }
            report.add({"invariants.index", input, index_ok, std::move(bad_index)});
            report.add({"invariants.dominance", input, dominance_ok, std::move(bad_dominance)});
            report.add({"invariants.stability", input, stability_ok, std::move(bad_stability)});
        }
        {
            bool ok = true;
            std::string details;
            for (int m = n0; m <= n0 + 3 && ok; ++m) {
                if (window_summary(region, m, limits).is_stable) continue;
                ok = false;
                details = "window " + std::to_string(m) + " is not stable although window " +
                          std::to_string(n0) + " is";
            }
            report.add({"invariants.persistence", input, ok, std::move(details)});
        }
        } catch (const std::exception& e) {
            report.add({"invariants.exception", input, false, e.what()});
        }
    }
    return report;
}

}  // namespace dars
