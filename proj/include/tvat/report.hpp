#pragma once

#include "tvat/oracles.hpp"
#include "tvat/verify.hpp"

#include <string>
#include <vector>

namespace tvat {

inline constexpr const char* kVersion = "0.1.0";

/// Echo of the invocation, embedded in JSON output.
struct RunConfig {
    std::string command;
    std::string suite;
    std::string model;
    long n = -1;
    long k = -1;
    bool has_k = false;  ///< k = 0 is meaningful, so presence is tracked
    long n_max = -1;     ///< -1 means per-suite defaults
    bool strict_conjecture = false;
};

std::string checks_to_json(const RunConfig& cfg,
                           const std::vector<CheckResult>& results);
std::string checks_to_csv(const std::vector<CheckResult>& results);
std::string checks_to_text(const std::vector<CheckResult>& results);

/// One row of numeric output (a sequence value, a coefficient list, ...).
struct ValueRecord {
    std::string kind;   ///< e.g. "table", "refined", "oracle"
    std::string model;  ///< "20v", "dt", "6v"
    long n = -1;
    long k = -1;
    std::vector<std::string> values;
    std::string extra;
    double ms = 0.0;
};

std::string values_to_json(const RunConfig& cfg,
                           const std::vector<ValueRecord>& records);
std::string values_to_csv(const std::vector<ValueRecord>& records);
std::string values_to_text(const std::vector<ValueRecord>& records);

std::string boundary_to_json(const BoundarySpec& spec);
/// Throws config_error on malformed input.
BoundarySpec boundary_from_json(const std::string& text);

}  // namespace tvat
