#include "padhaus/log_scalar.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace padhaus {

namespace {

constexpr double kCancelTol = 1e-13;

long double log_base(double p) {
    if (!(p > 1.0))
        throw ParameterOutOfRange("base must exceed 1");
    return std::log(static_cast<long double>(p));
}

} // namespace

long double LogScalar::infinite_exponent() {
    return std::numeric_limits<long double>::infinity();
}

LogScalar LogScalar::make(int sign, long double exponent) {
    LogScalar r;
    if (sign == 0) {
        r.sign_ = 0;
        r.expo_ = 0.0L;
        return r;
    }
    if (std::isnan(static_cast<double>(exponent)))
        throw Error("LogScalar exponent is NaN");
    r.sign_ = sign > 0 ? +1 : -1;
    r.expo_ = exponent;
    return r;
}

LogScalar LogScalar::from_real(double value, double p) {
    if (value == 0.0)
        return zero();
    if (std::isnan(value))
        throw Error("LogScalar value is NaN");
    if (std::isinf(value))
        return make(value > 0 ? +1 : -1, infinite_exponent());
    const long double e = std::log(std::fabs(static_cast<long double>(value))) / log_base(p);
    return make(value > 0 ? +1 : -1, e);
}

double LogScalar::to_real(double p) const {
    if (sign_ == 0)
        return 0.0;
    const long double v = std::exp(expo_ * log_base(p));
    return static_cast<double>(sign_) * static_cast<double>(v);
}

bool LogScalar::is_finite() const {
    return sign_ == 0 || std::isfinite(static_cast<double>(expo_));
}

LogScalar operator*(const LogScalar& a, const LogScalar& b) {
    if (a.sign_ == 0 || b.sign_ == 0)
        return LogScalar::zero();
    return LogScalar::make(a.sign_ * b.sign_, a.expo_ + b.expo_);
}

LogScalar operator/(const LogScalar& a, const LogScalar& b) {
    if (b.sign_ == 0)
        throw Error("LogScalar division by zero");
    if (a.sign_ == 0)
        return LogScalar::zero();
    return LogScalar::make(a.sign_ * b.sign_, a.expo_ - b.expo_);
}

LogScalar LogScalar::pow(double t) const {
    if (sign_ == 0) {
        if (t <= 0)
            throw ParameterOutOfRange("0 raised to a nonpositive power");
        return zero();
    }
    if (sign_ < 0) {
        if (t != std::nearbyint(t))
            throw ParameterOutOfRange("negative value raised to a non-integer power");
        const long long k = static_cast<long long>(std::nearbyint(t));
        return make((k % 2 == 0) ? +1 : -1, expo_ * static_cast<long double>(t));
    }
    return make(+1, expo_ * static_cast<long double>(t));
}

int LogScalar::cmp_abs(const LogScalar& a, const LogScalar& b) {
    if (a.sign_ == 0 && b.sign_ == 0)
        return 0;
    if (a.sign_ == 0)
        return -1;
    if (b.sign_ == 0)
        return +1;
    if (a.expo_ < b.expo_)
        return -1;
    if (a.expo_ > b.expo_)
        return +1;
    return 0;
}

double rel_diff(const LogScalar& a, const LogScalar& b, double p) {
    if (a.is_zero() && b.is_zero())
        return 0.0;
    if (!a.is_finite() || !b.is_finite()) {
        const bool same = !a.is_finite() && !b.is_finite() && a.sign() == b.sign();
        return same ? 0.0 : std::numeric_limits<double>::infinity();
    }
    const long double lnp = log_base(p);
    const long double m = std::max(a.is_zero() ? -1e30L : a.exponent_ld(),
                                   b.is_zero() ? -1e30L : b.exponent_ld());
    const long double va = a.is_zero() ? 0.0L
                                       : static_cast<long double>(a.sign()) *
                                             std::exp((a.exponent_ld() - m) * lnp);
    const long double vb = b.is_zero() ? 0.0L
                                       : static_cast<long double>(b.sign()) *
                                             std::exp((b.exponent_ld() - m) * lnp);
    const long double denom = std::max(std::fabs(va), std::fabs(vb));
    return static_cast<double>(std::fabs(va - vb) / denom);
}

long double log1m_pow(double p, long double e) {
    if (!(e > 0.0L))
        throw NonconvergentSum("log1m_pow requires a positive exponent");
    // 1 - p^{-e}, evaluated as -expm1(-e ln p) to keep precision for small e.
    const long double lnp = log_base(p);
    const long double u = -std::expm1(-e * lnp);
    return std::log(u) / lnp;
}

LogScalar log_combine(double p, std::span<const LogScalar> terms) {
    const long double lnp = log_base(p);
    long double max_expo = 0.0L;
    bool any = false;
    for (const auto& t : terms) {
        if (t.is_zero())
            continue;
        if (!t.is_finite())
            throw Error("log_combine over a divergent term");
        if (!any || t.exponent_ld() > max_expo) {
            max_expo = t.exponent_ld();
            any = true;
        }
    }
    if (!any)
        return LogScalar::zero();

    long double sum = 0.0L;
    long double mass = 0.0L;
    for (const auto& t : terms) {
        if (t.is_zero())
            continue;
        const long double scaled = std::exp((t.exponent_ld() - max_expo) * lnp);
        sum += static_cast<long double>(t.sign()) * scaled;
        mass += scaled;
    }
    if (std::fabs(sum) <= static_cast<long double>(kCancelTol) * mass)
        return LogScalar::zero();
    return LogScalar::make(sum > 0 ? +1 : -1, max_expo + std::log(std::fabs(sum)) / lnp);
}

LogScalar log_combine(double p, std::initializer_list<LogScalar> terms) {
    return log_combine(p, std::span<const LogScalar>(terms.begin(), terms.size()));
}

LogScalar geometric_tail_sum(double p, double c, int head) {
    if (!(c > 0.0))
        throw NonconvergentSum("geometric tail sum requires c > 0");
    const long double e = static_cast<long double>(head) * static_cast<long double>(c) -
                          log1m_pow(p, static_cast<long double>(c));
    return LogScalar::make(+1, e);
}

LogScalar linear_geometric_tail_sum(double p, double c, int head) {
    if (!(c > 0.0))
        throw NonconvergentSum("linear geometric tail sum requires c > 0");
    // Sum_{theta<=R} theta p^{theta c} = p^{Rc} (R(1-x) - x) / (1-x)^2, x = p^{-c}.
    const long double lnp = log_base(p);
    const long double x = std::exp(-static_cast<long double>(c) * lnp);
    const long double numer = static_cast<long double>(head) * (1.0L - x) - x;
    if (numer == 0.0L)
        return LogScalar::zero();
    const long double e = static_cast<long double>(head) * static_cast<long double>(c) +
                          std::log(std::fabs(numer)) / lnp -
                          2.0L * log1m_pow(p, static_cast<long double>(c));
    return LogScalar::make(numer > 0 ? +1 : -1, e);
}

LogScalar geometric_range_sum(double p, double c, int lo, int hi) {
    if (lo > hi)
        return LogScalar::zero();
    const long double lnp = log_base(p);
    const long double lc = static_cast<long double>(c);
    const int count = hi - lo + 1;
    if (c == 0.0)
        return LogScalar::from_real(static_cast<double>(count), p);
    // Factor out the largest term so the bracket stays O(count).
    const long double top = lc > 0 ? static_cast<long double>(hi) * lc
                                   : static_cast<long double>(lo) * lc;
    const long double step = -std::fabs(lc);
    long double bracket = 0.0L;
    for (int j = 0; j < count; ++j)
        bracket += std::exp(static_cast<long double>(j) * step * lnp);
    return LogScalar::make(+1, top + std::log(bracket) / lnp);
}

} // namespace padhaus
