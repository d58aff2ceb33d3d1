#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dnc/verify.hpp"

namespace dnc::cli {

/// Values collected from flags; unset fields fall back to the config file,
/// then to the defaults.
struct Overrides {
    std::optional<int> n;
    std::optional<int> l;
    std::vector<std::string> phi;
    std::optional<std::int64_t> K;
    std::optional<std::int64_t> band;
    std::optional<std::string> mode;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> cases;
};

/// Reads the optional JSON config file and applies the overrides. Throws
/// ConfigError with the offending field path.
SuiteConfig load_config(const std::string& path, const Overrides& flags);

/// "p/q", an integer, or a decimal. Decimals are converted exactly in exact mode.
struct AngleText {
    mpq_class exact;
    double numeric = 0;
    bool decimal = false;
};
AngleText parse_angle(const std::string& text, const std::string& field);

} // namespace dnc::cli

namespace dnc::cli {

/// The "suite" field of the config file (a name or a list), empty if absent.
std::vector<std::string> configured_suites(const std::string& path);

} // namespace dnc::cli
