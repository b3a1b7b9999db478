#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace dars {

// Textual input (windows, tabloids, partitions, CLI payloads) that cannot be
// parsed.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A computation hit a configured resource bound (window caps, enumeration
// caps, witness-search bounds) before finishing.
struct ResourceLimitError : std::runtime_error {
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

// A candidate tuple failed one of the image-membership checks; `condition`
// names the first violated check ("1", "2a", "2b", "2c", "3", "4").
struct ValidationError : std::runtime_error {
    std::string condition;
    ValidationError(std::string cond, const std::string& what)
        : std::runtime_error(what), condition(std::move(cond)) {}
};

}  // namespace dars
