#include "dars/text_io.hpp"

#include <charconv>
#include <string>
#include <vector>

#include <json.hpp>

#include "dars/errors.hpp"

namespace dars {

namespace {

std::string trimmed(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return "";
    const auto last = text.find_last_not_of(" \t\r\n");
    return text.substr(first, last - first + 1);
}

int parse_int(const std::string& token) {
    const std::string t = trimmed(token);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc{} || ptr != t.data() + t.size())
        throw ParseError("not an integer: \"" + token + "\"");
    return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string::size_type start = 0;
    for (;;) {
        const auto pos = text.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(text.substr(start));
            return parts;
        }
        parts.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> values;
    for (const std::string& token : split(text, ',')) values.push_back(parse_int(token));
    return values;
}

}  // namespace

Partition parse_partition(const std::string& text) {
    const std::string t = trimmed(text);
    if (t.empty()) return Partition{};
    try {
        return Partition(parse_int_list(t));
    } catch (const std::invalid_argument& e) {
        throw ParseError("invalid partition \"" + text + "\": " + e.what());
    }
}

Tabloid parse_tabloid(const std::string& text) {
    const std::string t = trimmed(text);
    if (t.empty()) throw ParseError("empty tabloid text");
    std::vector<std::vector<int>> rows;
    for (const std::string& row : split(t, '/')) rows.push_back(parse_int_list(row));
    try {
        return Tabloid(std::move(rows));
    } catch (const std::invalid_argument& e) {
        throw ParseError("invalid tabloid \"" + text + "\": " + e.what());
    }
}

AffinePermutation parse_window(const std::string& text) {
    std::string t = trimmed(text);
    if (t.size() >= 2 && t.front() == '[' && t.back() == ']') t = t.substr(1, t.size() - 2);
    if (trimmed(t).empty()) throw ParseError("empty window text");
    const std::vector<int> entries = parse_int_list(t);
    try {
        return AffinePermutation(static_cast<int>(entries.size()), entries);
    } catch (const std::invalid_argument& e) {
        throw ParseError("invalid window \"" + text + "\": " + e.what());
    }
}

FinitePermutation parse_finite_permutation(const std::string& text) {
    const std::string t = trimmed(text);
    if (t.empty()) throw ParseError("empty permutation text");
    try {
        if (t.find(',') == std::string::npos &&
            t.find_first_not_of("0123456789") == std::string::npos) {
            // A bare digit string such as "365214" lists one-digit values.
            std::vector<int> entries;
            for (const char ch : t) entries.push_back(ch - '0');
            return FinitePermutation(std::move(entries));
        }
        return FinitePermutation(parse_int_list(t));
    } catch (const std::invalid_argument& e) {
        throw ParseError("invalid permutation \"" + text + "\": " + e.what());
    }
}

std::string window_to_string(const AffinePermutation& w) { return w.to_string(); }

std::string tuple_to_json(const DarsTuple& t) {
    nlohmann::ordered_json j;
    j["p"] = t.p.to_string();
    j["q"] = t.q.to_string();
    j["lambda"] = t.lambda.parts();
    j["n0"] = t.n0;
    j["n"] = t.n();
    j["index"] = t.index();
    return j.dump();
}

DarsTuple tuple_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid tuple JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("p") || !j.contains("q") || !j.contains("lambda") ||
        !j.contains("n0"))
        throw ParseError("tuple JSON needs the keys p, q, lambda and n0");
    DarsTuple t;
    try {
        t.p = parse_tabloid(j.at("p").get<std::string>());
        t.q = parse_tabloid(j.at("q").get<std::string>());
        t.lambda = Partition(j.at("lambda").get<std::vector<int>>());
        t.n0 = j.at("n0").get<int>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid tuple JSON: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("invalid tuple JSON: ") + e.what());
    }
    if (j.contains("n") && j.at("n").get<int>() != t.n())
        throw ParseError("tuple JSON key n disagrees with the tabloids");
    if (j.contains("index") && j.at("index").get<int>() != t.index())
        throw ParseError("tuple JSON key index disagrees with n0 and lambda");
    return t;
}

}  // namespace dars
