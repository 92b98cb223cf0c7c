#pragma once

#include <optional>
#include <vector>

#include "padhaus/geometry.hpp"
#include "padhaus/log_scalar.hpp"

namespace padhaus {

/**
 * Radial profile g over the scale index: g(p^k) is the value on the sphere
 * of radius p^k.
 *
 *  FiniteWindow          explicit values on [lo, hi], zero outside
 *  PowerLaw              g(p^k) = p^{k*exponent}
 *  PowerLawTruncatedBelow  same, but zero for k < cutoff
 *  LogScale              g(p^k) = k (commutator symbols; not L^q-normable)
 *  WindowWithPowerTail   explicit on [lo, hi], values.back()*p^{(k-hi)*exponent}
 *                        above, zero below (operator outputs on truncated
 *                        power-law inputs)
 *
 * `amplitude` scales the whole profile. `window_truncated` marks grid
 * evaluations whose true support extends past the window; norms of such
 * profiles are reported window-limited.
 */
struct RadialProfile {
    enum class Kind { FiniteWindow, PowerLaw, PowerLawTruncatedBelow, LogScale, WindowWithPowerTail };

    Kind kind = Kind::FiniteWindow;
    LogScalar amplitude = LogScalar::one();
    int lo = 0, hi = 0;
    std::vector<LogScalar> values;
    double exponent = 0.0;
    int cutoff = 0;
    bool window_truncated = false;

    static RadialProfile finite_window(int lo, int hi, std::vector<LogScalar> values);
    static RadialProfile power_law(double s);
    static RadialProfile power_law_truncated(double s, int cutoff);
    static RadialProfile log_scale();
    static RadialProfile window_with_power_tail(int lo, int hi, std::vector<LogScalar> values,
                                                double tail_exponent);
    static RadialProfile constant(double value, double p);

    RadialProfile scaled(const LogScalar& factor) const;
    RadialProfile shifted(int delta) const;

    bool is_zero() const;
    // Support bounds; nullopt = unbounded on that side.
    std::optional<int> support_lo() const;
    std::optional<int> support_hi() const;
};

// g(p^k), amplitude included. The base enters only through real-valued
// profile kinds (log scale).
LogScalar evaluate_profile(const RadialProfile& f, int k, double p);

/**
 * Locally constant factor on the unit sphere: one signed value per coset of
 * p^level Z_p^n, in the enumeration order of unit_sphere_cosets. Level 0 is
 * the constant factor.
 */
class AngularFactor {
public:
    AngularFactor() : level_(0), constant_(1.0) {}

    static AngularFactor constant(double value);
    static AngularFactor at_level(int level, std::vector<double> values);

    int level() const { return level_; }
    bool is_constant() const { return level_ == 0; }
    double constant_value() const { return constant_; }
    const std::vector<double>& values() const { return values_; }

    // Value on a coset (at a level at least as fine as this factor's).
    double value_on(const CosetTable& table, const UnitSphereCoset& coset) const;

    // Same factor expressed at a finer level (values copied to children).
    AngularFactor refined(int p, int n, int finer_level) const;

private:
    int level_;
    double constant_;
    std::vector<double> values_;
};

struct SeparableFunction {
    RadialProfile radial;
    AngularFactor angular;
};

// Integral of the factor over S_0 (signed).
LogScalar angular_integral(int p, int n, const AngularFactor& a);

// L^r(S_0) norm of the factor; r may be infinity (sup norm).
LogScalar angular_norm(int p, int n, const AngularFactor& a, double r);

// ||f chi_k||_{L^q_w}: |g(p^k)| p^{k(alpha+n)/q} (sum |a_c|^q p^{-jn})^{1/q}.
LogScalar sphere_norm(int p, int n, const SeparableFunction& f, int k, double q, PowerWeight w);

// Extremal families used by the sharpness checks. All have angular factor 1.
SeparableFunction make_central_morrey_extremal(int n, double alpha, double lambda, double q);
SeparableFunction make_herz_extremal(int p, int n, int r, double beta, double q, double alpha);
SeparableFunction make_morrey_herz_extremal(int n, double beta, double q, double alpha, double lambda);
SeparableFunction make_log_symbol();

} // namespace padhaus
