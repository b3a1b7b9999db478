// Command-line front end for the dual affine Robinson-Schensted toolkit.
//
// Exit codes: 0 success, 1 failed checks or unexpected errors, 2 usage or
// parse errors, 3 resource-cap overruns, 4 validation failures.

#include <algorithm>
#include <cctype>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dars/classical_rs.hpp"
#include "dars/dars_map.hpp"
#include "dars/enumerate.hpp"
#include "dars/errors.hpp"
#include "dars/growth_region.hpp"
#include "dars/oracles.hpp"
#include "dars/render.hpp"
#include "dars/skew_tableau.hpp"
#include "dars/text_io.hpp"

namespace {

using nlohmann::ordered_json;

// Display form of a condition code: "2b" -> "(2)(b)", "1" -> "(1)".
std::string display_code(const std::string& code) {
    if (code.empty()) return "";
    if (code.size() >= 2 && std::isalpha(static_cast<unsigned char>(code[1])))
        return "(" + code.substr(0, 1) + ")(" + code.substr(1) + ")";
    return "(" + code + ")";
}

ordered_json report_to_json(const dars::ValidationReport& report) {
    ordered_json conditions = ordered_json::array();
    for (const dars::ConditionResult& c : report.conditions)
        conditions.push_back(
            {{"condition", display_code(c.code)}, {"pass", c.pass}, {"details", c.details}});
    ordered_json j;
    j["valid"] = report.valid;
    j["conditions"] = std::move(conditions);
    j["first_failure"] = report.valid ? ordered_json(nullptr)
                                      : ordered_json(display_code(report.first_failure()));
    return j;
}

std::pair<int, int> parse_range(const std::string& text, const char* what) {
    const auto pos = text.find(':');
    if (pos == std::string::npos)
        throw dars::ParseError(std::string(what) + " expects the form lo:hi, got \"" + text +
                               "\"");
    try {
        const int lo = std::stoi(text.substr(0, pos));
        const int hi = std::stoi(text.substr(pos + 1));
        if (lo > hi)
            throw dars::ParseError(std::string(what) + " range is empty: \"" + text + "\"");
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw dars::ParseError(std::string(what) + " expects integers lo:hi, got \"" + text +
                               "\"");
    }
}

// Shared enumeration controls for `verify` and `enumerate`.
struct EnumerationChoice {
    int n = 0;
    std::string entries;       // "lo:hi"; empty means enumerate by length
    int max_length = 4;
    std::vector<int> indices;  // empty means {-1, 0, 1}
    bool entries_given = false;
    bool length_given = false;
};

std::vector<dars::AffinePermutation> enumerate_elements(const EnumerationChoice& choice) {
    if (choice.entries_given && choice.length_given)
        throw dars::ParseError("--entries and --max-length are mutually exclusive");
    if (choice.entries_given) {
        const auto [lo, hi] = parse_range(choice.entries, "--entries");
        return dars::enumerate_window_box(choice.n, lo, hi);
    }
    std::vector<int> indices = choice.indices;
    if (indices.empty()) indices = {-1, 0, 1};
    std::vector<dars::AffinePermutation> out;
    for (const int index : indices) {
        std::vector<dars::AffinePermutation> ball =
            dars::enumerate_by_length(choice.n, index, choice.max_length);
        out.insert(out.end(), ball.begin(), ball.end());
    }
    return out;
}

int run_compute(const std::string& window_text, bool embed_check,
                const dars::GrowthLimits& limits) {
    const dars::AffinePermutation w = dars::parse_window(window_text);
    const dars::DarsTuple t = dars::forward(w, limits);
    ordered_json j = ordered_json::parse(dars::tuple_to_json(t));
    int code = 0;
    if (embed_check) {
        std::vector<int> sorted = w.window();
        std::sort(sorted.begin(), sorted.end());
        for (int i = 0; i < w.n(); ++i)
            if (sorted[i] != i + 1)
                throw dars::ParseError(
                    "--embed-check needs a window whose entries permute 1..n");
        const dars::FinitePermutation fp(w.window());
        const dars::RsPair classical = dars::rs_insertion(fp);
        const dars::Tabloid cp = dars::row_content_tabloid(classical.p);
        const dars::Tabloid cq = dars::row_content_tabloid(classical.q);
        const bool match = t.p == cp && t.q == cq && t.lambda.empty() && t.n0 == 2;
        j["embed_check"] = {{"match", match},
                            {"classical_p", cp.to_string()},
                            {"classical_q", cq.to_string()}};
        if (!match) code = 1;
    }
    std::cout << j.dump() << '\n';
    return code;
}

dars::DarsTuple tuple_from_parts(const std::string& p_text, const std::string& q_text,
                                 const std::string& lambda_text, std::optional<int> n0) {
    dars::DarsTuple t;
    t.p = dars::parse_tabloid(p_text);
    t.q = dars::parse_tabloid(q_text);
    t.lambda = dars::parse_partition(lambda_text);
    const int n = t.p.n();
    t.n0 = n0.value_or(n > 0 ? 2 + (t.lambda.total() + n - 1) / n : 2);
    return t;
}

int run_invert(const std::string& p_text, const std::string& q_text,
               const std::string& lambda_text, int n0, const dars::GrowthLimits& limits) {
    const dars::DarsTuple t = tuple_from_parts(p_text, q_text, lambda_text, n0);
    const dars::ValidationReport report = dars::validate(t);
    if (!report.valid) {
        std::cout << report_to_json(report).dump() << '\n';
        std::cerr << "tuple fails validation condition " << display_code(report.first_failure())
                  << '\n';
        return 4;
    }
    const dars::AffinePermutation w = dars::inverse(t, limits);
    ordered_json j;
    j["window"] = w.to_string();
    j["n"] = w.n();
    j["index"] = w.index();
    std::cout << j.dump() << '\n';
    return 0;
}

int run_validate(const std::string& p_text, const std::string& q_text,
                 const std::string& lambda_text, std::optional<int> n0) {
    const dars::DarsTuple t = tuple_from_parts(p_text, q_text, lambda_text, n0);
    const dars::ValidationReport report = dars::validate(t);
    std::cout << report_to_json(report).dump() << '\n';
    return report.valid ? 0 : 4;
}

int run_verify(const EnumerationChoice& choice, const std::string& suite, bool failures_only,
               const dars::GrowthLimits& limits) {
    const std::vector<dars::AffinePermutation> elements = enumerate_elements(choice);
    std::cerr << "verifying " << elements.size() << " elements of affine S_" << choice.n
              << " (suite: " << suite << ")\n";
    dars::SuiteReport total;
    if (suite == "roundtrip" || suite == "all")
        total.merge(dars::roundtrip_suite(elements, limits));
    if (suite == "duality" || suite == "all") total.merge(dars::duality_suite(elements));
    if (suite == "invariants" || suite == "all")
        total.merge(dars::invariant_suite(elements, limits));
    for (const dars::CheckRecord& r : total.records) {
        if (failures_only && r.pass) continue;
        const ordered_json line = {
            {"suite", r.suite}, {"input", r.input}, {"pass", r.pass}, {"details", r.details}};
        std::cout << line.dump() << '\n';
    }
    const ordered_json summary = {{"checks", total.passed + total.failed},
                                  {"passed", total.passed},
                                  {"failed", total.failed},
                                  {"all_pass", total.all_pass()}};
    std::cout << summary.dump() << '\n';
    return total.all_pass() ? 0 : 1;
}

int run_enumerate(const EnumerationChoice& choice, bool count_only) {
    const std::vector<dars::AffinePermutation> elements = enumerate_elements(choice);
    if (count_only) {
        std::cout << elements.size() << '\n';
        return 0;
    }
    for (const dars::AffinePermutation& w : elements) std::cout << w.to_string() << '\n';
    return 0;
}

int run_render(const std::string& window_text, const std::string& format,
               const std::string& windows_range, int depth, bool no_labels, bool no_colors,
               bool partitions, const dars::GrowthLimits& limits) {
    const dars::AffinePermutation w = dars::parse_window(window_text);
    dars::RenderOptions opts;
    if (format == "svg")
        opts.format = dars::RenderOptions::Format::Svg;
    else if (format == "json")
        opts.format = dars::RenderOptions::Format::Json;
    else
        opts.format = dars::RenderOptions::Format::Ascii;
    if (!windows_range.empty()) {
        const auto [lo, hi] = parse_range(windows_range, "--windows");
        opts.first_window = lo;
        opts.last_window = hi;
    }
    opts.show_labels = !no_labels;
    opts.show_colors = !no_colors;
    opts.show_partitions = partitions;
    dars::GrowthRegion region =
        depth > 0 ? dars::GrowthRegion::build(w, depth)
                  : std::move(dars::first_stable_window(w, limits).region);
    std::cout << dars::render_region(region, opts, limits);
    return 0;
}

int run_evac(const std::string& tabloid_text, int max_lambda) {
    const dars::Tabloid t = dars::parse_tabloid(tabloid_text);
    dars::OracleLimits limits;
    if (max_lambda > 0) limits.max_lambda_total = max_lambda;
    const dars::Tabloid image = dars::evacuate_tabloid(t, limits);
    const ordered_json j = {{"input", t.to_string()}, {"evacuation", image.to_string()}};
    std::cout << j.dump() << '\n';
    return 0;
}

int run_classical(const std::string& perm_text) {
    const dars::FinitePermutation w = dars::parse_finite_permutation(perm_text);
    const dars::RsPair pair = dars::rs_insertion(w);
    const dars::DualRsResult dual = dars::dual_rs(w);
    ordered_json j;
    j["permutation"] = w.to_string();
    j["p"] = pair.p.to_string();
    j["q"] = pair.q.to_string();
    j["shape"] = pair.p.shape().parts();
    j["dual_west"] = dual.west.to_string();
    j["dual_south"] = dual.south.to_string();
    j["evacuation_of_dual_south"] = dars::evacuation(dual.south).to_string();
    std::cout << j.dump() << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dual affine Robinson-Schensted correspondence toolkit"};
    app.require_subcommand(1);
    int max_windows = dars::GrowthLimits{}.max_windows;
    app.add_option("--max-windows", max_windows, "growth-region window cap")
        ->check(CLI::PositiveNumber);

    auto* compute = app.add_subcommand("compute", "map a window to its (P, Q, lambda, N0) tuple");
    std::string compute_window;
    bool embed_check = false;
    compute->add_option("-w,--window", compute_window, "window, e.g. \"[10,3,-3,12]\"")
        ->required();
    compute->add_flag("--embed-check", embed_check,
                      "window permutes 1..n: also compare against classical row insertion");

    auto* invert = app.add_subcommand("invert", "map a tuple back to its window");
    std::string inv_p, inv_q, inv_lambda;
    int inv_n0 = 0;
    invert->add_option("-p,--p", inv_p, "first tabloid, e.g. \"1,3/2/4\"")->required();
    invert->add_option("-q,--q", inv_q, "second tabloid")->required();
    invert->add_option("-l,--lambda", inv_lambda, "inner shape, e.g. \"6,6,5\" (default empty)");
    invert->add_option("--n0", inv_n0, "stable-window index of the tuple")->required();

    auto* validate = app.add_subcommand("validate", "check a tuple against the image conditions");
    std::string val_p, val_q, val_lambda;
    std::optional<int> val_n0;
    validate->add_option("-p,--p", val_p, "first tabloid")->required();
    validate->add_option("-q,--q", val_q, "second tabloid")->required();
    validate->add_option("-l,--lambda", val_lambda, "inner shape (default empty)");
    validate->add_option("--n0", val_n0, "stable-window index (optional)");

    auto* verify = app.add_subcommand("verify", "run verification suites over enumerated windows");
    EnumerationChoice verify_choice;
    std::string verify_suite = "all";
    bool failures_only = false;
    verify->add_option("-n,--n", verify_choice.n, "period n (at least 2)")
        ->required()
        ->check(CLI::Range(2, 12));
    verify->add_option("--suite", verify_suite, "roundtrip, duality, invariants, or all")
        ->check(CLI::IsMember({"roundtrip", "duality", "invariants", "all"}));
    auto* verify_entries =
        verify->add_option("--entries", verify_choice.entries, "window-entry box lo:hi");
    auto* verify_length = verify->add_option("--max-length", verify_choice.max_length,
                                             "Coxeter-length ball radius (default 4)");
    verify->add_option("--index", verify_choice.indices,
                       "indices for the length ball (default -1 0 1)");
    verify->add_flag("--failures-only", failures_only, "print only failing check records");

    auto* enumerate = app.add_subcommand("enumerate", "list enumerated windows");
    EnumerationChoice enum_choice;
    bool count_only = false;
    enumerate->add_option("-n,--n", enum_choice.n, "period n")->required()->check(
        CLI::Range(2, 12));
    auto* enum_entries =
        enumerate->add_option("--entries", enum_choice.entries, "window-entry box lo:hi");
    auto* enum_length = enumerate->add_option("--max-length", enum_choice.max_length,
                                              "Coxeter-length ball radius (default 4)");
    enumerate->add_option("--index", enum_choice.indices,
                          "indices for the length ball (default -1 0 1)");
    enumerate->add_flag("--count", count_only, "print only the number of windows");

    auto* render = app.add_subcommand("render", "draw the growth diagram of a window");
    std::string render_window, render_format = "ascii", render_windows;
    int render_depth = 0;
    bool no_labels = false, no_colors = false, render_partitions = false;
    render->add_option("-w,--window", render_window, "window to draw")->required();
    render->add_option("-f,--format", render_format, "ascii, svg, or json")
        ->check(CLI::IsMember({"ascii", "svg", "json"}));
    render->add_option("--windows", render_windows, "window range a:b (default whole region)");
    render->add_option("--depth", render_depth,
                       "build this many windows (default: first stable window + 2)");
    render->add_flag("--no-labels", no_labels, "omit edge labels");
    render->add_flag("--no-colors", no_colors, "omit shadow-line colours");
    render->add_flag("--partitions", render_partitions, "annotate window-corner shapes");

    auto* evac = app.add_subcommand("evac", "affine evacuation of a tabloid");
    std::string evac_tabloid;
    int evac_max_lambda = 0;
    evac->add_option("-t,--tabloid", evac_tabloid, "tabloid, e.g. \"1,3/2/4\"")->required();
    evac->add_option("--max-lambda", evac_max_lambda, "witness-search cap on |lambda|");

    auto* classical = app.add_subcommand("classical", "Robinson-Schensted data of a permutation");
    std::string classical_perm;
    classical->add_option("-p,--perm", classical_perm, "one-line permutation, e.g. 365214")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const dars::GrowthLimits limits{max_windows};
        if (compute->parsed()) return run_compute(compute_window, embed_check, limits);
        if (invert->parsed()) return run_invert(inv_p, inv_q, inv_lambda, inv_n0, limits);
        if (validate->parsed()) return run_validate(val_p, val_q, val_lambda, val_n0);
        if (verify->parsed()) {
            verify_choice.entries_given = verify_entries->count() > 0;
            verify_choice.length_given = verify_length->count() > 0;
            return run_verify(verify_choice, verify_suite, failures_only, limits);
        }
        if (enumerate->parsed()) {
            enum_choice.entries_given = enum_entries->count() > 0;
            enum_choice.length_given = enum_length->count() > 0;
            return run_enumerate(enum_choice, count_only);
        }
        if (render->parsed())
            return run_render(render_window, render_format, render_windows, render_depth,
                              no_labels, no_colors, render_partitions, limits);
        if (evac->parsed()) return run_evac(evac_tabloid, evac_max_lambda);
        if (classical->parsed()) return run_classical(classical_perm);
        std::cerr << "no subcommand selected\n";
        return 2;
    } catch (const dars::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const dars::ResourceLimitError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const dars::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
