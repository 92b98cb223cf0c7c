#include "padhaus/functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace padhaus {

RadialProfile RadialProfile::finite_window(int lo, int hi, std::vector<LogScalar> values) {
    if (lo > hi || values.size() != static_cast<std::size_t>(hi - lo + 1))
        throw ParameterOutOfRange("finite window bounds do not match the value count");
    RadialProfile f;
    f.kind = Kind::FiniteWindow;
    f.lo = lo;
    f.hi = hi;
    f.values = std::move(values);
    return f;
}

RadialProfile RadialProfile::power_law(double s) {
    if (!std::isfinite(s))
        throw ParameterOutOfRange("power-law exponent must be finite");
    RadialProfile f;
    f.kind = Kind::PowerLaw;
    f.exponent = s;
    return f;
}

RadialProfile RadialProfile::power_law_truncated(double s, int cutoff) {
    RadialProfile f = power_law(s);
    f.kind = Kind::PowerLawTruncatedBelow;
    f.cutoff = cutoff;
    return f;
}

RadialProfile RadialProfile::log_scale() {
    RadialProfile f;
    f.kind = Kind::LogScale;
    return f;
}

RadialProfile RadialProfile::window_with_power_tail(int lo, int hi, std::vector<LogScalar> values,
                                                    double tail_exponent) {
    RadialProfile f = finite_window(lo, hi, std::move(values));
    f.kind = Kind::WindowWithPowerTail;
    f.exponent = tail_exponent;
    return f;
}

RadialProfile RadialProfile::constant(double value, double p) {
    RadialProfile f = power_law(0.0);
    f.amplitude = LogScalar::from_real(value, p);
    return f;
}

RadialProfile RadialProfile::scaled(const LogScalar& factor) const {
    RadialProfile f = *this;
    f.amplitude = f.amplitude * factor;
    return f;
}

RadialProfile RadialProfile::shifted(int delta) const {
    RadialProfile f = *this;
    switch (kind) {
    case Kind::FiniteWindow:
    case Kind::WindowWithPowerTail:
        f.lo += delta;
        f.hi += delta;
        return f;
    case Kind::PowerLaw:
        f.amplitude = f.amplitude * LogScalar::pow_of(-static_cast<long double>(delta) * exponent);
        return f;
    case Kind::PowerLawTruncatedBelow:
        f.cutoff += delta;
        f.amplitude = f.amplitude * LogScalar::pow_of(-static_cast<long double>(delta) * exponent);
        return f;
    case Kind::LogScale:
        throw ParameterOutOfRange("log-scale profiles cannot be shifted");
    }
    throw Error("unreachable");
}

bool RadialProfile::is_zero() const {
    if (amplitude.is_zero())
        return true;
    if (kind == Kind::FiniteWindow || kind == Kind::WindowWithPowerTail)
        return std::all_of(values.begin(), values.end(),
                           [](const LogScalar& v) { return v.is_zero(); });
    return false;
}

std::optional<int> RadialProfile::support_lo() const {
    switch (kind) {
    case Kind::FiniteWindow:
    case Kind::WindowWithPowerTail:
        return lo;
    case Kind::PowerLawTruncatedBelow:
        return cutoff;
    default:
        return std::nullopt;
    }
}

std::optional<int> RadialProfile::support_hi() const {
    if (kind == Kind::FiniteWindow)
        return hi;
    return std::nullopt;
}

LogScalar evaluate_profile(const RadialProfile& f, int k, double p) {
    switch (f.kind) {
    case RadialProfile::Kind::FiniteWindow:
        if (k < f.lo || k > f.hi)
            return LogScalar::zero();
        return f.amplitude * f.values[static_cast<std::size_t>(k - f.lo)];
    case RadialProfile::Kind::PowerLaw:
        return f.amplitude * LogScalar::pow_of(static_cast<long double>(k) * f.exponent);
    case RadialProfile::Kind::PowerLawTruncatedBelow:
        if (k < f.cutoff)
            return LogScalar::zero();
        return f.amplitude * LogScalar::pow_of(static_cast<long double>(k) * f.exponent);
    case RadialProfile::Kind::LogScale:
        return f.amplitude * LogScalar::from_real(static_cast<double>(k), p);
    case RadialProfile::Kind::WindowWithPowerTail:
        if (k < f.lo)
            return LogScalar::zero();
        if (k <= f.hi)
            return f.amplitude * f.values[static_cast<std::size_t>(k - f.lo)];
        return f.amplitude * f.values.back() *
               LogScalar::pow_of(static_cast<long double>(k - f.hi) * f.exponent);
    }
    throw Error("unreachable");
}

AngularFactor AngularFactor::constant(double value) {
    AngularFactor a;
    a.level_ = 0;
    a.constant_ = value;
    return a;
}

AngularFactor AngularFactor::at_level(int level, std::vector<double> values) {
    if (level < 1)
        throw ParameterOutOfRange("angular level must be >= 1");
    AngularFactor a;
    a.level_ = level;
    a.values_ = std::move(values);
    return a;
}

double AngularFactor::value_on(const CosetTable& table, const UnitSphereCoset& coset) const {
    if (level_ == 0)
        return constant_;
    if (table.level() != level_)
        throw DimensionMismatch("coset table level does not match the factor level");
    if (values_.size() != table.size())
        throw DimensionMismatch("angular value count does not match the coset count");
    return values_[coset.level == level_ ? table.index_of(coset.digits)
                                         : table.ancestor_index(coset)];
}

AngularFactor AngularFactor::refined(int p, int n, int finer_level) const {
    if (finer_level < std::max(level_, 1))
        throw ParameterOutOfRange("refinement level must not be coarser");
    const auto fine = unit_sphere_cosets(p, n, finer_level);
    std::vector<double> vals(fine.size());
    if (level_ == 0) {
        std::fill(vals.begin(), vals.end(), constant_);
    } else {
        CosetTable coarse(p, n, level_);
        for (std::size_t i = 0; i < fine.size(); ++i)
            vals[i] = values_[coarse.ancestor_index(fine[i])];
    }
    return at_level(finer_level, std::move(vals));
}

namespace {

void check_values(int p, int n, const AngularFactor& a) {
    if (a.is_constant())
        return;
    const double expected = std::pow(p, static_cast<double>(a.level()) * n) -
                            std::pow(p, static_cast<double>(a.level() - 1) * n);
    if (a.values().size() != static_cast<std::size_t>(expected))
        throw DimensionMismatch("angular value count does not match the coset count");
}

} // namespace

LogScalar angular_integral(int p, int n, const AngularFactor& a) {
    if (a.is_constant())
        return LogScalar::from_real(a.constant_value(), p) * LogScalar::make(+1, log1m_pow(p, n));
    check_values(p, n, a);
    double sum = 0.0, mass = 0.0;
    for (double v : a.values()) {
        sum += v;
        mass += std::fabs(v);
    }
    if (mass == 0.0 || std::fabs(sum) <= 1e-13 * mass)
        return LogScalar::zero();
    return LogScalar::from_real(sum, p) *
           LogScalar::pow_of(-static_cast<long double>(a.level()) * n);
}

LogScalar angular_norm(int p, int n, const AngularFactor& a, double r) {
    if (!(r >= 1.0))
        throw ParameterOutOfRange("angular norm exponent must be >= 1");
    const bool sup = std::isinf(r);
    if (a.is_constant()) {
        const LogScalar c = LogScalar::from_real(std::fabs(a.constant_value()), p);
        if (sup)
            return c;
        return c * LogScalar::make(+1, log1m_pow(p, n) / static_cast<long double>(r));
    }
    check_values(p, n, a);
    if (sup) {
        double m = 0.0;
        for (double v : a.values())
            m = std::max(m, std::fabs(v));
        return LogScalar::from_real(m, p);
    }
    double sum = 0.0;
    for (double v : a.values())
        sum += std::pow(std::fabs(v), r);
    if (sum == 0.0)
        return LogScalar::zero();
    return (LogScalar::from_real(sum, p) * LogScalar::pow_of(-static_cast<long double>(a.level()) * n))
        .pow(1.0 / r);
}

LogScalar sphere_norm(int p, int n, const SeparableFunction& f, int k, double q, PowerWeight w) {
    if (!(q >= 1.0))
        throw ParameterOutOfRange("sphere norm exponent must be >= 1");
    const LogScalar g = evaluate_profile(f.radial, k, p).abs();
    if (g.is_zero())
        return LogScalar::zero();
    const LogScalar shell = LogScalar::pow_of(static_cast<long double>(k) *
                                              (static_cast<long double>(w.alpha) + n) /
                                              static_cast<long double>(q));
    return g * shell * angular_norm(p, n, f.angular, q);
}

SeparableFunction make_central_morrey_extremal(int n, double alpha, double lambda, double q) {
    if (!(q >= 1.0) || !(lambda > -1.0 / q) || !(lambda < 0.0))
        throw ParameterOutOfRange("central Morrey extremal needs lambda in (-1/q, 0)");
    if (!(alpha > -n))
        throw ParameterOutOfRange("central Morrey extremal needs alpha > -n");
    return {RadialProfile::power_law((n + alpha) * lambda), AngularFactor::constant(1.0)};
}

SeparableFunction make_herz_extremal(int p, int n, int r, double beta, double q, double alpha) {
    if (r < 1)
        throw ParameterOutOfRange("Herz extremal needs r >= 1");
    if (!(q >= 1.0) || !(alpha > -n))
        throw ParameterOutOfRange("Herz extremal needs q >= 1 and alpha > -n");
    const double s = -beta - (n + alpha) / q - std::pow(p, -static_cast<double>(r));
    return {RadialProfile::power_law_truncated(s, 0), AngularFactor::constant(1.0)};
}

SeparableFunction make_morrey_herz_extremal(int n, double beta, double q, double alpha,
                                            double lambda) {
    if (!(lambda > 0.0))
        throw ParameterOutOfRange("Morrey-Herz extremal needs lambda > 0");
    if (!(q >= 1.0) || !(alpha > -n))
        throw ParameterOutOfRange("Morrey-Herz extremal needs q >= 1 and alpha > -n");
    return {RadialProfile::power_law(-beta - (n + alpha) / q + lambda),
            AngularFactor::constant(1.0)};
}

SeparableFunction make_log_symbol() {
    return {RadialProfile::log_scale(), AngularFactor::constant(1.0)};
}

} // namespace padhaus
