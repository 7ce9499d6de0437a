#pragma once
// Minimal TOML-style config reader: [section] headers, key = value pairs,
// # comments, scalar values (integer, float, bool, quoted string) and flat
// arrays of scalars.  Keys are flattened to "section.key".

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "flexopt/core/task.hpp"

namespace flexopt::harness {

struct TomlValue {
    std::variant<std::int64_t, double, bool, std::string, std::vector<std::string>,
                 std::vector<std::int64_t>>
        value;

    bool is_int() const { return std::holds_alternative<std::int64_t>(value); }
    bool is_real() const { return is_int() || std::holds_alternative<double>(value); }
    bool is_bool() const { return std::holds_alternative<bool>(value); }
    bool is_string() const { return std::holds_alternative<std::string>(value); }
    bool is_string_array() const { return std::holds_alternative<std::vector<std::string>>(value); }
    bool is_int_array() const { return std::holds_alternative<std::vector<std::int64_t>>(value); }

    std::int64_t as_int() const;
    double as_real() const;
    bool as_bool() const;
    const std::string& as_string() const;
    const std::vector<std::string>& as_string_array() const;
    const std::vector<std::int64_t>& as_int_array() const;

    std::string repr() const;   // canonical text form
};

using TomlDoc = std::map<std::string, TomlValue>;

// Parse a document; errors carry 1-based line numbers.
TomlDoc parse_toml(std::string_view text);

TomlDoc parse_toml_file(const std::string& path);

// Parse a bare scalar or array, as written on the right of '='.
TomlValue parse_toml_value(std::string_view text);

} // namespace flexopt::harness
