#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "padhaus/scenario.hpp"
#include "padhaus/spaces.hpp"

namespace padhaus {

/**
 * Outcome of one scenario. For identity (sharpness) checks lhs/rhs are the
 * two sides and metric their relative difference; for randomized
 * sufficiency batches lhs is the largest fitted constant, rhs the
 * stability bound (ten times the median), and metric their ratio.
 * status is one of "pass", "fail", "diverges", "error".
 */
struct VerificationReport {
    std::string scenario_id;
    std::string theorem;
    double lhs = 0.0;
    double rhs = 0.0;
    double metric = 0.0;
    std::string status = "error";
    std::string detail;
    std::uint64_t seed = 0;
    double wall_ms = 0.0;
};

struct RunOptions {
    std::uint64_t seed = 0;
    int parallelism = 1;
    Window window{-40, 40};
    // Timing is zeroed by default so identical runs serialize identically.
    bool record_timing = false;
};

// Exact extremal-function identities (T31, T33, T35, T41ii).
VerificationReport verify_sharpness(const Scenario& s, const RunOptions& opts = {});

// Norm inequalities over randomized admissible inputs. T31 asserts the
// explicit constant; the others fit the implied constant and check its
// stability across the batch.
VerificationReport verify_sufficiency(const Scenario& s, const RunOptions& opts = {});

// Runs every scenario (possibly in parallel), never aborting the batch;
// report order matches input order.
std::vector<VerificationReport> run_grid(std::span<const Scenario> scenarios,
                                         const RunOptions& opts = {});

} // namespace padhaus
