#pragma once

#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>

#include "nctorus/errors.hpp"

namespace nctorus::cli {

/// Numeric defaults shared by the CLI subcommands. Loaded from a
/// key = value file (nctorus.toml in the working directory or --config);
/// unknown keys are rejected rather than ignored.
struct Config {
    double tol = 1e-9;
    std::int64_t phase_grid_cap = 4096;
    std::int64_t q_max = 20;
    std::uint64_t seed = 0;
    std::string output_dir = ".";

    void validate() const {
        if (!(tol > 0.0)) throw ParseError("config: tol must be positive");
        if (phase_grid_cap < 16) throw ParseError("config: phase_grid_cap must be at least 16");
        if (q_max < 1) throw ParseError("config: q_max must be positive");
    }
};

namespace detail {

inline std::string strip(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && (s[a] == ' ' || s[a] == '\t')) ++a;
    while (b > a && (s[b - 1] == ' ' || s[b - 1] == '\t' || s[b - 1] == '\r')) --b;
    return s.substr(a, b - a);
}

inline std::string unquote(const std::string& s) {
    if (s.size() >= 2 && ((s.front() == '"' && s.back() == '"') ||
                          (s.front() == '\'' && s.back() == '\'')))
        return s.substr(1, s.size() - 2);
    return s;
}

template <typename T>
T parse_integer(const std::string& text, const std::string& key) {
    T value{};
    const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size())
        throw ParseError("config: invalid integer for '" + key + "': " + text);
    return value;
}

}  // namespace detail

inline Config parse_config(std::istream& in) {
    Config cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string stripped = detail::strip(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        const std::size_t eq = stripped.find('=');
        if (eq == std::string::npos)
            throw ParseError("config line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = detail::strip(stripped.substr(0, eq));
        const std::string value = detail::unquote(detail::strip(stripped.substr(eq + 1)));
        if (key == "tol") {
            try {
                cfg.tol = std::stod(value);
            } catch (const std::exception&) {
                throw ParseError("config: invalid number for 'tol': " + value);
            }
        } else if (key == "phase_grid_cap") {
            cfg.phase_grid_cap = detail::parse_integer<std::int64_t>(value, key);
        } else if (key == "q_max") {
            cfg.q_max = detail::parse_integer<std::int64_t>(value, key);
        } else if (key == "seed") {
            cfg.seed = detail::parse_integer<std::uint64_t>(value, key);
        } else if (key == "output_dir") {
            cfg.output_dir = value;
        } else {
            throw ParseError("config line " + std::to_string(lineno) + ": unknown key '" + key +
                             "'");
        }
    }
    cfg.validate();
    return cfg;
}

inline Config parse_config_string(const std::string& text) {
    std::istringstream in(text);
    return parse_config(in);
}

inline Config load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("config: cannot open '" + path + "'");
    return parse_config(in);
}

}  // namespace nctorus::cli
