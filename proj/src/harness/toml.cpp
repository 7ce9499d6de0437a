#include "flexopt/harness/toml.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace flexopt::harness {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

// Strip a trailing comment, respecting quoted strings.
std::string_view strip_comment(std::string_view line) {
    bool in_quote = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '"') in_quote = !in_quote;
        if (line[i] == '#' && !in_quote) return line.substr(0, i);
    }
    return line;
}

TomlValue parse_scalar(std::string_view text) {
    text = trim(text);
    if (text.empty()) throw ConfigError("empty value");
    if (text == "true") return TomlValue{true};
    if (text == "false") return TomlValue{false};
    if (text.front() == '"') {
        if (text.size() < 2 || text.back() != '"') throw ConfigError("unterminated string");
        return TomlValue{std::string(text.substr(1, text.size() - 2))};
    }
    const bool looks_float = text.find_first_of(".eE") != std::string_view::npos &&
                             text.find_first_not_of("+-0123456789.eE") == std::string_view::npos;
    if (!looks_float) {
        std::int64_t i = 0;
        auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), i);
        if (ec == std::errc{} && p == text.data() + text.size()) return TomlValue{i};
    }
    {
        double d = 0.0;
        auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), d);
        if (ec == std::errc{} && p == text.data() + text.size()) return TomlValue{d};
    }
    throw ConfigError("cannot parse value '" + std::string(text) + "'");
}

std::vector<std::string_view> split_array_items(std::string_view inner) {
    std::vector<std::string_view> items;
    bool in_quote = false;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= inner.size(); ++i) {
        if (i < inner.size() && inner[i] == '"') in_quote = !in_quote;
        if (i == inner.size() || (inner[i] == ',' && !in_quote)) {
            const std::string_view item = trim(inner.substr(start, i - start));
            if (!item.empty()) items.push_back(item);
            start = i + 1;
        }
    }
    return items;
}

} // namespace

std::int64_t TomlValue::as_int() const {
    if (!is_int()) throw ConfigError("expected an integer value");
    return std::get<std::int64_t>(value);
}

double TomlValue::as_real() const {
    if (is_int()) return static_cast<double>(std::get<std::int64_t>(value));
    if (!std::holds_alternative<double>(value)) throw ConfigError("expected a numeric value");
    return std::get<double>(value);
}

bool TomlValue::as_bool() const {
    if (!is_bool()) throw ConfigError("expected a boolean value");
    return std::get<bool>(value);
}

const std::string& TomlValue::as_string() const {
    if (!is_string()) throw ConfigError("expected a string value");
    return std::get<std::string>(value);
}

const std::vector<std::string>& TomlValue::as_string_array() const {
    if (!is_string_array()) throw ConfigError("expected an array of strings");
    return std::get<std::vector<std::string>>(value);
}

const std::vector<std::int64_t>& TomlValue::as_int_array() const {
    if (!is_int_array()) throw ConfigError("expected an array of integers");
    return std::get<std::vector<std::int64_t>>(value);
}

std::string TomlValue::repr() const {
    std::ostringstream os;
    if (is_int()) {
        os << std::get<std::int64_t>(value);
    } else if (std::holds_alternative<double>(value)) {
        os.precision(17);
        os << std::get<double>(value);
    } else if (is_bool()) {
        os << (std::get<bool>(value) ? "true" : "false");
    } else if (is_string()) {
        os << '"' << std::get<std::string>(value) << '"';
    } else if (is_string_array()) {
        os << '[';
        const auto& items = std::get<std::vector<std::string>>(value);
        for (std::size_t i = 0; i < items.size(); ++i) os << (i ? "," : "") << '"' << items[i] << '"';
        os << ']';
    } else {
        os << '[';
        const auto& items = std::get<std::vector<std::int64_t>>(value);
        for (std::size_t i = 0; i < items.size(); ++i) os << (i ? "," : "") << items[i];
        os << ']';
    }
    return os.str();
}

TomlValue parse_toml_value(std::string_view text) {
    text = trim(text);
    if (text.empty()) throw ConfigError("empty value");
    if (text.front() == '[') {
        if (text.back() != ']') throw ConfigError("unterminated array");
        const auto items = split_array_items(text.substr(1, text.size() - 2));
        std::vector<std::string> strings;
        std::vector<std::int64_t> ints;
        bool any_string = false, any_int = false;
        for (const auto item : items) {
            TomlValue v = parse_scalar(item);
            if (v.is_string()) {
                any_string = true;
                strings.push_back(v.as_string());
            } else if (v.is_int()) {
                any_int = true;
                ints.push_back(v.as_int());
            } else {
                throw ConfigError("arrays may contain only strings or integers");
            }
        }
        if (any_string && any_int) throw ConfigError("arrays must be homogeneous");
        if (any_string) return TomlValue{strings};
        return TomlValue{ints};
    }
    return parse_scalar(text);
}

TomlDoc parse_toml(std::string_view text) {
    TomlDoc doc;
    std::string section;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;
        line = trim(strip_comment(line));
        if (line.empty()) continue;
        try {
            if (line.front() == '[') {
                if (line.back() != ']' || line.size() < 3) throw ConfigError("malformed section header");
                section = std::string(trim(line.substr(1, line.size() - 2)));
                continue;
            }
            const std::size_t eq = line.find('=');
            if (eq == std::string_view::npos) throw ConfigError("expected key = value");
            const std::string_view key = trim(line.substr(0, eq));
            if (key.empty()) throw ConfigError("empty key");
            const std::string full_key = section.empty() ? std::string(key) : section + "." + std::string(key);
            if (doc.count(full_key)) throw ConfigError("duplicate key '" + full_key + "'");
            doc.emplace(full_key, parse_toml_value(line.substr(eq + 1)));
        } catch (const ConfigError& e) {
            throw ConfigError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return doc;
}

TomlDoc parse_toml_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_toml(buf.str());
    } catch (const ConfigError& e) {
        throw ConfigError(path + ": " + e.what());
    }
}

} // namespace flexopt::harness
