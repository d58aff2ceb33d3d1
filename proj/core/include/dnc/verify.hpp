#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dnc/algebra.hpp"

namespace dnc {

struct SuiteConfig {
    Signature sig{2, 1, AngleAssignment(2).with(1, 2, mpq_class(1, 4))};
    std::int64_t K = 8;
    std::int64_t band = 2;
    std::uint64_t seed = 1;
    /// Number of random cases; 0 selects the suite's default.
    std::size_t cases = 0;
};

struct Failure {
    std::string inputs;
    std::string residual;
};

struct Report {
    std::string suite;
    std::size_t cases = 0;
    std::size_t failure_count = 0;
    /// The first few failures, in the order found.
    std::vector<Failure> failures;
    double wall_ms = 0;
    AngleMode mode = AngleMode::exact;

    bool pass() const noexcept { return failure_count == 0; }
    void fail(std::string inputs, std::string residual);
};

/// confluence, relations, injectivity, norm, stinespring, deformation,
/// intertwiner, embedding, choice, ktheory-table, theta.
const std::vector<std::string>& suite_names();

/// Runs one suite against cfg. Throws ConfigError for an unknown name.
Report run_suite(const SuiteConfig& cfg, std::string_view name);

} // namespace dnc
