#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "padhaus/scenario.hpp"
#include "padhaus/verify.hpp"

namespace padhaus {

struct SchemaIssue {
    std::string field;   // JSON pointer-ish path of the offending field
    std::string message;
};

enum class ReportFormat { Csv, Json };

struct RunConfig {
    std::vector<Scenario> scenarios;
    std::string out_path; // empty writes to stdout
    ReportFormat format = ReportFormat::Csv;
    std::uint64_t seed = 0;
    Window window{-40, 40};
    int parallelism = 1;
    bool record_timing = false;
};

struct ParseOutcome {
    std::optional<RunConfig> config;
    std::vector<SchemaIssue> issues;
    bool ok() const { return config.has_value() && issues.empty(); }
};

// JSON config -> validated RunConfig, or a list of schema issues naming the
// offending fields (unknown keys, wrong types, violated hypotheses).
ParseOutcome parse_config(const std::string& text);

// Inverse of parse_config up to equivalence.
std::string serialize_config(const RunConfig& config);

// Stable-column CSV or a JSON array; numbers carry 15 significant digits.
std::string emit_report(std::span<const VerificationReport> reports, ReportFormat format,
                        std::uint64_t seed);

// Descriptor parsers shared with the command line tool. Each takes a JSON
// snippet and throws SchemaParseError on malformed input.
struct SchemaParseError : Error {
    using Error::Error;
};

RadialProfile parse_profile_json(const std::string& text, int p);
AngularFactor parse_angular_json(const std::string& text);
SeparableFunction parse_function_json(const std::string& text, int p);
PhiKernel parse_phi_json(const std::string& text);

} // namespace padhaus
