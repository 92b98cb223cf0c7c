#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "padhaus/functions.hpp"
#include "padhaus/operators.hpp"

namespace padhaus {

enum class TheoremId { T31, T32, T33, T34i, T34ii, T35, T41i, T41ii, T42, T43, Cor44 };

const char* theorem_name(TheoremId id);
std::optional<TheoremId> theorem_from_name(const std::string& name);

enum class ScenarioMode { Sharpness, Sufficiency };

/**
 * One verification scenario: the prime, dimension and factor count, the
 * per-factor and aggregate exponents the target theorem reads, the kernel
 * and angular data, and the randomized-batch controls. Aggregates tied to
 * the per-factor data by an exact relation may be left unset; derive()
 * fills them.
 */
struct Scenario {
    std::string id;
    TheoremId theorem = TheoremId::T31;
    ScenarioMode mode = ScenarioMode::Sharpness;

    int p = 2;
    int n = 1;
    int m = 1;

    std::vector<double> q_i, alpha_i, lambda_i, beta_i, ell_i, r_i;
    std::vector<double> q_star_i, r_star_i; // starred factor exponents

    double q = 0.0, alpha = 0.0, beta = 0.0, ell = 0.0, lambda = 0.0;
    double q_star = 0.0;
    double lambda_star = 0.0, beta_star = 0.0;
    double zeta = 1.0, delta = 0.0;
    double weight_alpha = 0.0; // exponent of the single Muckenhoupt weight

    PhiKernel phi;
    AngularFactor omega = AngularFactor::constant(1.0);

    int draws = 200;          // randomized sufficiency batch size
    int profile_span = 5;     // random windows live in [-span, span]
    int max_window_len = 21;
    int max_angular_level = 2;

    // Fill aggregates that are determined by exact relations.
    Scenario derived() const;
};

// Violated equality relations for the scenario's theorem (empty iff all
// hold to 1e-12).
std::vector<std::string> check_homogeneity(const Scenario& s);

// Violated range hypotheses (parameter domains, weight classes, case signs).
std::vector<std::string> check_hypotheses(const Scenario& s);

// Both checks; used by the config layer.
std::vector<std::string> validate_scenario(const Scenario& s);

} // namespace padhaus
