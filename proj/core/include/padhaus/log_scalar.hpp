#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "padhaus/errors.hpp"

namespace padhaus {

/**
 * Signed magnitude carried as a base-p exponent: value = sign * p^exponent.
 *
 * Every quantity in this library is a (possibly huge or tiny) power of the
 * prime p times an O(1) factor, so the exponent is the natural coordinate.
 * The base itself is contextual: a LogScalar does not remember p, and
 * operations that need it (conversion, mixed-term addition, tail sums) take
 * it as an argument. The exponent is kept in extended precision so that
 * round trips through real values stay well below 1e-14 relative error even
 * at exponent magnitudes of a few hundred.
 *
 * sign == 0 means exactly zero; the exponent is then normalized to 0.
 * An infinite exponent with sign +1 is used as a first-class "diverges"
 * value by the theorem-constant evaluators.
 */
class LogScalar {
public:
    LogScalar() : sign_(0), expo_(0.0L) {}

    static LogScalar zero() { return LogScalar(); }
    static LogScalar one() { return make(+1, 0.0L); }
    static LogScalar pow_of(long double exponent) { return make(+1, exponent); }
    static LogScalar make(int sign, long double exponent);
    static LogScalar from_real(double value, double p);
    static LogScalar infinity() { return make(+1, infinite_exponent()); }

    double to_real(double p) const;
    int sign() const { return sign_; }
    bool is_zero() const { return sign_ == 0; }
    bool is_finite() const;
    double exponent() const { return static_cast<double>(expo_); }
    long double exponent_ld() const { return expo_; }

    LogScalar operator-() const { return make(-sign_, expo_); }
    LogScalar abs() const { return make(sign_ == 0 ? 0 : +1, expo_); }

    friend LogScalar operator*(const LogScalar& a, const LogScalar& b);
    friend LogScalar operator/(const LogScalar& a, const LogScalar& b);

    // |x|^t; a negative sign is only accepted for integer t.
    LogScalar pow(double t) const;

    // -1, 0, +1 comparing |a| against |b|.
    static int cmp_abs(const LogScalar& a, const LogScalar& b);

private:
    static long double infinite_exponent();

    int sign_;
    long double expo_;
};

// |a - b| / max(|a|, |b|); zero when both are zero. The workhorse of every
// closed-form vs. oracle comparison in the test suites.
double rel_diff(const LogScalar& a, const LogScalar& b, double p);

// log_p(1 - p^{-e}) for e > 0, in extended precision. All geometric closed
// forms funnel through this.
long double log1m_pow(double p, long double e);

// Signed sum of terms sharing base p, computed by factoring out the largest
// exponent. Residuals below 1e-13 relative to the total mass collapse to an
// exact zero so that analytic cancellations are recognized.
LogScalar log_combine(double p, std::span<const LogScalar> terms);
LogScalar log_combine(double p, std::initializer_list<LogScalar> terms);

// Sum_{theta <= head} p^{theta*c}  =  p^{head*c} / (1 - p^{-c}), c > 0.
LogScalar geometric_tail_sum(double p, double c, int head);

// Sum_{theta <= head} theta * p^{theta*c}, c > 0.
LogScalar linear_geometric_tail_sum(double p, double c, int head);

// Sum_{lo <= theta <= hi} p^{theta*c}, any real c (finite, exact).
LogScalar geometric_range_sum(double p, double c, int lo, int hi);

} // namespace padhaus
