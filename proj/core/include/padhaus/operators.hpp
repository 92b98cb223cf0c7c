#pragma once

#include <map>
#include <span>
#include <vector>

#include "padhaus/functions.hpp"
#include "padhaus/log_scalar.hpp"
#include "padhaus/spaces.hpp"

namespace padhaus {

/**
 * Nonnegative kernel on the scale lattice: gamma -> Phi(p^gamma).
 *
 *  FiniteSupport        explicit values on finitely many gamma
 *  TwoSidedPowerDecay   Phi(p^gamma) = scale * p^{-decay*|gamma|}, decay > 0
 */
struct PhiKernel {
    enum class Kind { FiniteSupport, TwoSidedPowerDecay };

    Kind kind = Kind::FiniteSupport;
    std::map<int, double> support; // FiniteSupport
    double scale = 1.0;            // TwoSidedPowerDecay
    double decay = 1.0;

    static PhiKernel dirac(int gamma, double value = 1.0);
    static PhiKernel finite(std::map<int, double> values);
    static PhiKernel power_decay(double scale, double decay);

    bool is_zero() const;
    double value_at(int gamma, double p) const; // Phi(p^gamma)
};

struct ApplyOptions {
    Window grid{-40, 40}; // output window when no symbolic form exists
};

/**
 * The scale-sum operator
 *   h(k) = sum_gamma Phi(p^gamma)/p^gamma * [ int_{S_0} Omega prod a_i ] *
 *          prod g_i(k - gamma).
 * The output is always radial. Pure power-law inputs give a symbolic
 * power-law output; truncated power laws under a finite kernel give an
 * exact window-plus-power-tail; otherwise the output is an exact grid when
 * supports are finite and a truncated grid (flagged) when they are not.
 */
RadialProfile apply_hausdorff(int p, int n, const PhiKernel& phi, const AngularFactor& omega,
                              std::span<const SeparableFunction> fs, ApplyOptions opts = {});

/**
 * Commutator variant with radial symbols b_i:
 *   h(k) = sum_gamma Phi(p^gamma)/p^gamma * [ int Omega prod a_i ] *
 *          prod (b_i(k) - b_i(k-gamma)) * prod g_i(k - gamma).
 */
RadialProfile apply_commutator(int p, int n, const PhiKernel& phi, const AngularFactor& omega,
                               std::span<const SeparableFunction> bs,
                               std::span<const SeparableFunction> fs, ApplyOptions opts = {});

enum class ConstantKind { C1, C2, C3, C41, C42, C5, C6, C6Star, C7, C8, C9, StructuralK, HerzA };

/**
 * Parameters feeding the closed-form constants. Only the fields a given
 * kind reads need to be set; the per-factor vectors must have length m.
 */
struct ConstantParams {
    int p = 2;
    int n = 1;
    int m = 1;
    PhiKernel phi;
    double q = 1.0, alpha = 0.0, lambda = 0.0, beta = 0.0, ell = 1.0;
    double zeta = 1.0, delta = 2.0;
    double lambda_star = 0.0, beta_star = 0.0;
    std::vector<double> q_i, alpha_i, lambda_i, ell_i;
    int r = 1; // HerzA
};

// The constant, or an infinite LogScalar when the defining sum diverges.
// Divergence is a result here, not an error.
LogScalar theorem_constant(ConstantKind kind, const ConstantParams& params);

// Signed inner sum behind C6*: sum_gamma Phi(p^gamma) gamma^m p^{-gamma u}.
LogScalar commutator_moment_sum(int p, const PhiKernel& phi, double u, int m);

} // namespace padhaus
