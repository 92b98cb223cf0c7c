#pragma once

#include <vector>

#include "padhaus/functions.hpp"
#include "padhaus/geometry.hpp"
#include "padhaus/spaces.hpp"

namespace padhaus {

/**
 * Membership of the power weight |x|_p^alpha in the Muckenhoupt class A_ell:
 *   ell == 1:  -n < alpha <= 0
 *   ell  > 1:  -n < alpha < n(ell-1)
 * The reverse Hoelder index is -n/alpha for alpha in (-n, 0), +infinity for
 * alpha >= 0, and undefined below -n (the weight is not locally integrable).
 */
struct WeightClassification {
    double alpha = 0.0;
    double ell = 1.0;
    bool member = false;
    bool locally_integrable = true;
    double reverse_holder_index = 0.0; // +inf when the weight is in every RH_r
};

WeightClassification classify_power_weight(int p, int n, double alpha, double ell);

// sup over centered balls of (|B|^{-1} int_B w)(|B|^{-1} int_B w^{-1/(ell-1)})^{ell-1},
// evaluated with sphere sums truncated at window.lo. For member weights the
// per-ball product is ball-independent; that is asserted.
LogScalar muckenhoupt_characteristic(int p, int n, double alpha, double ell, Window win = {});

// One sampled pair E subset B with the measured ratios and the two fitted
// bounds of the sandwich inequality.
struct SandwichSample {
    Region subset;
    int ball_scale;
    double measure_ratio;      // |E|/|B|
    double weight_ratio;       // w(E)/w(B)
};

struct SandwichReport {
    double c_lower = 0.0; // min of weight_ratio / measure_ratio^ell
    double c_upper = 0.0; // max of weight_ratio / measure_ratio^{(r-1)/r}
    bool pass = false;
    std::vector<SandwichSample> samples;
};

// Checks C1 (|E|/|B|)^ell <= w(E)/w(B) <= C2 (|E|/|B|)^{(r-1)/r} over
// sub-balls and spheres of centered balls.
SandwichReport check_sandwich(int p, int n, double alpha, double ell, double r,
                              int ball_lo = -10, int ball_hi = 10, int max_depth = 5);

struct MeanBoundSample {
    int ball_scale;
    double lhs; // |B|^{-1} int_B |f|
    double rhs; // (w(B)^{-1} int_B |f|^ell w)^{1/ell}
};

struct MeanBoundReport {
    double c_fit = 0.0; // max lhs/rhs over the samples
    bool pass = false;
    std::vector<MeanBoundSample> samples;
};

// Checks |B|^{-1} int_B |f| <= C (w(B)^{-1} int_B |f|^ell w)^{1/ell} over a
// range of centered balls.
MeanBoundReport check_mean_bound(int p, int n, const SeparableFunction& f, double alpha,
                                 double ell, int ball_lo = -5, int ball_hi = 5);

} // namespace padhaus
