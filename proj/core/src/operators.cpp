#include "padhaus/operators.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>

namespace padhaus {

PhiKernel PhiKernel::dirac(int gamma, double value) {
    return finite({{gamma, value}});
}

PhiKernel PhiKernel::finite(std::map<int, double> values) {
    for (auto& [g, v] : values)
        if (v < 0.0)
            throw ParameterOutOfRange("kernel values must be nonnegative");
    PhiKernel k;
    k.kind = Kind::FiniteSupport;
    k.support = std::move(values);
    return k;
}

PhiKernel PhiKernel::power_decay(double scale, double decay) {
    if (scale < 0.0 || !(decay > 0.0))
        throw ParameterOutOfRange("power-decay kernel needs scale >= 0 and decay > 0");
    PhiKernel k;
    k.kind = Kind::TwoSidedPowerDecay;
    k.scale = scale;
    k.decay = decay;
    return k;
}

bool PhiKernel::is_zero() const {
    if (kind == Kind::TwoSidedPowerDecay)
        return scale == 0.0;
    return std::all_of(support.begin(), support.end(),
                       [](const auto& kv) { return kv.second == 0.0; });
}

double PhiKernel::value_at(int gamma, double p) const {
    if (kind == Kind::TwoSidedPowerDecay)
        return scale * std::pow(p, -decay * std::abs(gamma));
    const auto it = support.find(gamma);
    return it == support.end() ? 0.0 : it->second;
}

namespace {

// Sum_{g>=1} g^m x^g for 0 < x < 1, via the polynomial recursion
// P_0 = 1, P_j = x (P'_{j-1}(1-x) + j P_{j-1}), Sum_{g>=0} g^j x^g = P_j/(1-x)^{j+1}.
double power_series_sum(int m, double x) {
    if (!(x > 0.0 && x < 1.0))
        throw ParameterOutOfRange("series argument outside (0,1)");
    if (m == 0)
        return x / (1.0 - x);
    std::vector<double> poly{1.0};
    for (int j = 1; j <= m; ++j) {
        std::vector<double> next(poly.size() + 1, 0.0);
        // x * P'(x):             coeff i+1 gets (i+1)*poly[i+1] shifted by x
        // with the (1-x) factor: x P' - x^2 P'
        for (std::size_t i = 1; i < poly.size(); ++i) {
            next[i] += static_cast<double>(i) * poly[i];
            if (i + 1 < next.size())
                next[i + 1] -= static_cast<double>(i) * poly[i];
        }
        for (std::size_t i = 0; i < poly.size(); ++i)
            next[i + 1] += static_cast<double>(j) * poly[i];
        poly = std::move(next);
    }
    double num = 0.0;
    for (std::size_t i = poly.size(); i-- > 0;)
        num = num * x + poly[i];
    return num / std::pow(1.0 - x, m + 1);
}

// 2 + p^{e}, kept in the log domain.
LogScalar two_plus_pow(double p, long double e) {
    return log_combine(p, {LogScalar::from_real(2.0, p), LogScalar::pow_of(e)});
}

/**
 * sum_{gamma>=0} Phi(p^gamma) gamma^mg prod_i (2+p^{gamma c_i}) p^{-gamma u_pos}
 * + sum_{gamma<0} Phi(p^gamma) gamma^mg prod_i (2+p^{-gamma c_i}) p^{-gamma u_neg}.
 *
 * Finite kernels give exact finite sums. Power-decay kernels expand the
 * (2 + p^{|gamma| c}) product over subsets into pure geometric pieces;
 * divergence of any piece yields an infinite LogScalar.
 */
LogScalar phi_weighted_sum(int p, const PhiKernel& phi, double u_pos, double u_neg,
                           std::span<const double> two_plus, int gamma_power) {
    if (phi.is_zero())
        return LogScalar::zero();
    if (phi.kind == PhiKernel::Kind::FiniteSupport) {
        std::vector<LogScalar> terms;
        for (const auto& [g, v] : phi.support) {
            if (v == 0.0)
                continue;
            LogScalar t = LogScalar::from_real(v, p) *
                          LogScalar::pow_of(-static_cast<long double>(g) *
                                            (g >= 0 ? u_pos : u_neg));
            if (gamma_power > 0) {
                if (g == 0)
                    continue;
                t = t * LogScalar::from_real(std::pow(static_cast<double>(g), gamma_power), p);
            }
            for (double c : two_plus)
                t = t * two_plus_pow(p, static_cast<long double>(std::abs(g)) * c);
            terms.push_back(t);
        }
        return log_combine(p, terms);
    }

    // Power-decay kernel: subset expansion.
    const double a = phi.decay;
    const std::size_t m = two_plus.size();
    double total = 0.0;
    for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
        double c_t = 0.0;
        int picked = 0;
        for (std::size_t i = 0; i < m; ++i)
            if (mask & (std::size_t{1} << i)) {
                c_t += two_plus[i];
                ++picked;
            }
        const double coef = std::pow(2.0, static_cast<double>(m - picked));
        const double e_pos = a + u_pos - c_t;
        const double e_neg = a - u_neg - c_t;
        if (!(e_pos > 0.0) || !(e_neg > 0.0))
            return LogScalar::infinity();
        const double x = std::pow(p, -e_pos);
        const double y = std::pow(p, -e_neg);
        double side_pos, side_neg;
        if (gamma_power == 0) {
            side_pos = 1.0 + power_series_sum(0, x); // gamma = 0 included
            side_neg = power_series_sum(0, y);
        } else {
            side_pos = power_series_sum(gamma_power, x);
            side_neg = (gamma_power % 2 == 0 ? 1.0 : -1.0) * power_series_sum(gamma_power, y);
        }
        total += coef * (side_pos + side_neg);
    }
    return LogScalar::from_real(phi.scale * total, p);
}

LogScalar phi_sum(int p, const PhiKernel& phi, double u) {
    return phi_weighted_sum(p, phi, u, u, {}, 0);
}

} // namespace

LogScalar commutator_moment_sum(int p, const PhiKernel& phi, double u, int m) {
    if (m < 1)
        throw ParameterOutOfRange("commutator moment needs m >= 1");
    return phi_weighted_sum(p, phi, u, u, {}, m);
}

namespace {

struct AngularContext {
    std::map<int, std::unique_ptr<CosetTable>> tables;

    const CosetTable& table(int p, int n, int level) {
        auto& slot = tables[level];
        if (!slot)
            slot = std::make_unique<CosetTable>(p, n, level);
        return *slot;
    }
};

// int_{S_0} Omega(y) prod_i a_i(y) dy, all factors at their own levels.
LogScalar combined_angular_integral(int p, int n, const AngularFactor& omega,
                                    std::span<const SeparableFunction> fs) {
    int level = omega.level();
    double const_part = omega.is_constant() ? omega.constant_value() : 1.0;
    for (const auto& f : fs) {
        level = std::max(level, f.angular.level());
        if (f.angular.is_constant())
            const_part *= f.angular.constant_value();
    }
    if (level == 0)
        return LogScalar::from_real(const_part, p) * LogScalar::make(+1, log1m_pow(p, n));

    AngularContext ctx;
    const CosetTable& fine = ctx.table(p, n, level);
    double sum = 0.0, mass = 0.0;
    for (const auto& coset : fine.cosets()) {
        double v = omega.is_constant() ? omega.constant_value()
                                       : omega.value_on(ctx.table(p, n, omega.level()), coset);
        for (const auto& f : fs)
            v *= f.angular.is_constant()
                     ? f.angular.constant_value()
                     : f.angular.value_on(ctx.table(p, n, f.angular.level()), coset);
        sum += v;
        mass += std::fabs(v);
    }
    if (mass == 0.0 || std::fabs(sum) <= 1e-13 * mass)
        return LogScalar::zero();
    return LogScalar::from_real(sum, p) * LogScalar::pow_of(-static_cast<long double>(level) * n);
}

LogScalar product_profile_eval(int p, std::span<const SeparableFunction> fs, int t) {
    LogScalar prod = LogScalar::one();
    for (const auto& f : fs) {
        prod = prod * evaluate_profile(f.radial, t, p);
        if (prod.is_zero())
            return prod;
    }
    return prod;
}

struct SupportBounds {
    std::optional<int> lo, hi;
};

SupportBounds product_support(std::span<const SeparableFunction> fs) {
    SupportBounds b;
    for (const auto& f : fs) {
        if (auto l = f.radial.support_lo())
            b.lo = b.lo ? std::max(*b.lo, *l) : *l;
        if (auto h = f.radial.support_hi())
            b.hi = b.hi ? std::min(*b.hi, *h) : *h;
    }
    return b;
}

RadialProfile zero_profile() {
    return RadialProfile::finite_window(0, 0, {LogScalar::zero()});
}

// Effective gamma range for a grid evaluation: exact for finite kernels,
// decay-truncated for power-decay kernels.
std::pair<int, int> kernel_range(const PhiKernel& phi) {
    if (phi.kind == PhiKernel::Kind::FiniteSupport) {
        if (phi.support.empty())
            return {0, -1};
        return {phi.support.begin()->first, phi.support.rbegin()->first};
    }
    return {-400, 400};
}

bool all_power_law(std::span<const SeparableFunction> fs) {
    return std::all_of(fs.begin(), fs.end(), [](const SeparableFunction& f) {
        return f.radial.kind == RadialProfile::Kind::PowerLaw;
    });
}

void validate_inputs(std::span<const SeparableFunction> fs) {
    if (fs.empty())
        throw DimensionMismatch("the operator needs at least one input function");
}

} // namespace

RadialProfile apply_hausdorff(int p, int n, const PhiKernel& phi, const AngularFactor& omega,
                              std::span<const SeparableFunction> fs, ApplyOptions opts) {
    validate_inputs(fs);
    const LogScalar angular = combined_angular_integral(p, n, omega, fs);
    if (angular.is_zero() || phi.is_zero())
        return zero_profile();

    // Pure power laws: the output is the same power law, scaled by the
    // kernel sum at the composite exponent.
    if (all_power_law(fs)) {
        double s_total = 0.0;
        LogScalar amp = LogScalar::one();
        for (const auto& f : fs) {
            s_total += f.radial.exponent;
            amp = amp * f.radial.amplitude;
        }
        if (amp.is_zero())
            return zero_profile();
        const LogScalar c = phi_sum(p, phi, 1.0 + s_total);
        if (!c.is_finite())
            throw NonconvergentSum("kernel sum diverges against these power laws");
        return RadialProfile::power_law(s_total).scaled(angular * amp * c);
    }

    // Truncated power laws under a finite kernel: window plus power tail.
    const bool truncated_powers =
        std::all_of(fs.begin(), fs.end(),
                    [](const SeparableFunction& f) {
                        return f.radial.kind == RadialProfile::Kind::PowerLaw ||
                               f.radial.kind == RadialProfile::Kind::PowerLawTruncatedBelow;
                    }) &&
        phi.kind == PhiKernel::Kind::FiniteSupport && !phi.support.empty();
    if (truncated_powers) {
        double s_total = 0.0;
        LogScalar amp = LogScalar::one();
        int cut = std::numeric_limits<int>::min();
        for (const auto& f : fs) {
            s_total += f.radial.exponent;
            amp = amp * f.radial.amplitude;
            if (f.radial.kind == RadialProfile::Kind::PowerLawTruncatedBelow)
                cut = std::max(cut, f.radial.cutoff);
        }
        if (amp.is_zero())
            return zero_profile();
        const auto [glo, ghi] = kernel_range(phi);
        const int lo = glo + cut, hi = ghi + cut;
        std::vector<LogScalar> vals;
        LogScalar partial = LogScalar::zero();
        for (int k = lo; k <= hi; ++k) {
            // accumulate Phi(p^gamma) p^{-gamma(1+S)} over gamma <= k - cut
            const int g = k - cut;
            const auto it = phi.support.find(g);
            if (it != phi.support.end() && it->second != 0.0)
                partial = log_combine(
                    p, {partial, LogScalar::from_real(it->second, p) *
                                     LogScalar::pow_of(-static_cast<long double>(g) *
                                                       (1.0 + s_total))});
            vals.push_back(partial * LogScalar::pow_of(static_cast<long double>(k) * s_total));
        }
        return RadialProfile::window_with_power_tail(lo, hi, std::move(vals), s_total)
            .scaled(angular * amp);
    }

    // Grid evaluation. Exact when both the kernel and the product support
    // are finite; otherwise truncated to the requested window and flagged.
    const SupportBounds supp = product_support(fs);
    if (supp.lo && supp.hi && *supp.lo > *supp.hi)
        return zero_profile(); // the factor supports do not meet
    const auto [glo, ghi] = kernel_range(phi);
    const bool exact = phi.kind == PhiKernel::Kind::FiniteSupport && supp.lo && supp.hi;
    int out_lo, out_hi;
    if (exact) {
        out_lo = glo + *supp.lo;
        out_hi = ghi + *supp.hi;
    } else {
        out_lo = opts.grid.lo;
        out_hi = opts.grid.hi;
    }
    std::vector<LogScalar> vals;
    for (int k = out_lo; k <= out_hi; ++k) {
        int from = glo, to = ghi;
        if (supp.hi)
            from = std::max(from, k - *supp.hi);
        if (supp.lo)
            to = std::min(to, k - *supp.lo);
        std::vector<LogScalar> terms;
        for (int g = from; g <= to; ++g) {
            const double pv = phi.value_at(g, p);
            if (pv == 0.0)
                continue;
            const LogScalar prod = product_profile_eval(p, fs, k - g);
            if (prod.is_zero())
                continue;
            terms.push_back(LogScalar::from_real(pv, p) *
                            LogScalar::pow_of(-static_cast<long double>(g)) * prod);
        }
        vals.push_back(log_combine(p, terms) * angular);
    }
    RadialProfile out = RadialProfile::finite_window(out_lo, out_hi, std::move(vals));
    out.window_truncated = !exact;
    return out;
}

RadialProfile apply_commutator(int p, int n, const PhiKernel& phi, const AngularFactor& omega,
                               std::span<const SeparableFunction> bs,
                               std::span<const SeparableFunction> fs, ApplyOptions opts) {
    validate_inputs(fs);
    if (bs.size() != fs.size())
        throw DimensionMismatch("one symbol is required per input function");
    for (const auto& b : bs)
        if (!b.angular.is_constant())
            throw ParameterOutOfRange("commutator symbols must be radial");

    const LogScalar angular = combined_angular_integral(p, n, omega, fs);
    if (angular.is_zero() || phi.is_zero())
        return zero_profile();

    const bool log_symbols = std::all_of(bs.begin(), bs.end(), [](const SeparableFunction& b) {
        return b.radial.kind == RadialProfile::Kind::LogScale;
    });

    // Log symbols against power laws: the difference factor is gamma per
    // symbol, so the whole operator collapses to a signed moment sum.
    if (log_symbols && all_power_law(fs)) {
        double s_total = 0.0;
        LogScalar amp = LogScalar::one();
        for (const auto& f : fs) {
            s_total += f.radial.exponent;
            amp = amp * f.radial.amplitude;
        }
        for (const auto& b : bs) {
            amp = amp * b.radial.amplitude *
                  LogScalar::from_real(b.angular.constant_value(), p);
        }
        if (amp.is_zero())
            return zero_profile();
        const LogScalar c =
            commutator_moment_sum(p, phi, 1.0 + s_total, static_cast<int>(fs.size()));
        if (!c.is_finite())
            throw NonconvergentSum("kernel moment sum diverges against these power laws");
        return RadialProfile::power_law(s_total).scaled(angular * amp * c);
    }

    const SupportBounds supp = product_support(fs);
    if (supp.lo && supp.hi && *supp.lo > *supp.hi)
        return zero_profile(); // the factor supports do not meet
    const auto [glo, ghi] = kernel_range(phi);
    const bool exact = phi.kind == PhiKernel::Kind::FiniteSupport && supp.lo && supp.hi;
    int out_lo, out_hi;
    if (exact) {
        out_lo = glo + *supp.lo;
        out_hi = ghi + *supp.hi;
    } else {
        out_lo = opts.grid.lo;
        out_hi = opts.grid.hi;
    }
    std::vector<LogScalar> vals;
    for (int k = out_lo; k <= out_hi; ++k) {
        int from = glo, to = ghi;
        if (supp.hi)
            from = std::max(from, k - *supp.hi);
        if (supp.lo)
            to = std::min(to, k - *supp.lo);
        std::vector<LogScalar> terms;
        for (int g = from; g <= to; ++g) {
            const double pv = phi.value_at(g, p);
            if (pv == 0.0)
                continue;
            LogScalar prod = product_profile_eval(p, fs, k - g);
            if (prod.is_zero())
                continue;
            for (const auto& b : bs) {
                const LogScalar diff =
                    log_combine(p, {evaluate_profile(b.radial, k, p),
                                    -evaluate_profile(b.radial, k - g, p)}) *
                    LogScalar::from_real(b.angular.constant_value(), p);
                prod = prod * diff;
                if (prod.is_zero())
                    break;
            }
            if (prod.is_zero())
                continue;
            terms.push_back(LogScalar::from_real(pv, p) *
                            LogScalar::pow_of(-static_cast<long double>(g)) * prod);
        }
        vals.push_back(log_combine(p, terms) * angular);
    }
    RadialProfile out = RadialProfile::finite_window(out_lo, out_hi, std::move(vals));
    out.window_truncated = !exact;
    return out;
}

namespace {

void need_factors(const ConstantParams& c, bool alpha_i, bool lambda_i, bool ell_i, bool q_i) {
    const auto check = [&](const std::vector<double>& v, const char* what, bool needed) {
        if (needed && v.size() != static_cast<std::size_t>(c.m))
            throw ParameterOutOfRange(std::string("constant needs ") + what +
                                      " for each of the m factors");
    };
    check(c.alpha_i, "alpha_i", alpha_i);
    check(c.lambda_i, "lambda_i", lambda_i);
    check(c.ell_i, "ell_i", ell_i);
    check(c.q_i, "q_i", q_i);
}

std::vector<double> alpha_plus_n(const ConstantParams& c) {
    std::vector<double> out;
    out.reserve(c.alpha_i.size());
    for (double a : c.alpha_i)
        out.push_back(a + c.n);
    return out;
}

} // namespace

LogScalar theorem_constant(ConstantKind kind, const ConstantParams& c) {
    const int p = c.p;
    switch (kind) {
    case ConstantKind::C1:
        return phi_sum(p, c.phi, 1.0 + (c.n + c.alpha) * c.lambda);
    case ConstantKind::C2:
        return phi_weighted_sum(p, c.phi, 1.0 + c.n * c.zeta * c.lambda_star,
                                1.0 + c.n * c.lambda_star * (c.delta - 1.0) / c.delta, {}, 0);
    case ConstantKind::C3:
        return phi_sum(p, c.phi, 1.0 - c.beta - (c.n + c.alpha) / c.q);
    case ConstantKind::C41:
        return phi_weighted_sum(
            p, c.phi, 1.0 - c.zeta * c.n / c.q - c.zeta * c.beta,
            1.0 - c.n * ((c.delta - 1.0) / c.delta) * (1.0 / c.q + c.beta / c.n), {}, 0);
    case ConstantKind::C42:
        return phi_weighted_sum(
            p, c.phi, 1.0 - c.n * ((c.delta - 1.0) / c.delta) * (1.0 / c.q + c.beta / c.n),
            1.0 - c.zeta * c.n / c.q + c.zeta * c.beta, {}, 0);
    case ConstantKind::C5:
        return phi_sum(p, c.phi, 1.0 - c.beta - (c.n + c.alpha) / c.q + c.lambda_star);
    case ConstantKind::C6: {
        need_factors(c, true, false, false, false);
        const auto cs = alpha_plus_n(c);
        const double u = 1.0 + (c.n + c.alpha) * c.lambda;
        return phi_weighted_sum(p, c.phi, u, u, cs, 0);
    }
    case ConstantKind::C6Star:
        return commutator_moment_sum(p, c.phi, 1.0 + (c.n + c.alpha) * c.lambda, c.m).abs();
    case ConstantKind::C7: {
        const std::vector<double> cs(static_cast<std::size_t>(c.m), c.zeta * c.n);
        return phi_weighted_sum(p, c.phi, 1.0 + c.n * c.zeta * c.lambda_star,
                                1.0 + c.n * c.lambda_star * (c.delta - 1.0) / c.delta, cs, 0);
    }
    case ConstantKind::C8: {
        need_factors(c, true, false, false, false);
        const auto cs = alpha_plus_n(c);
        const double u = 1.0 - c.beta_star - (c.n + c.alpha) / c.q + c.lambda_star;
        return phi_weighted_sum(p, c.phi, u, u, cs, 0);
    }
    case ConstantKind::C9: {
        need_factors(c, true, false, false, false);
        const auto cs = alpha_plus_n(c);
        const double u = 1.0 - c.beta_star - (c.n + c.alpha) / c.q;
        return phi_weighted_sum(p, c.phi, u, u, cs, 0);
    }
    case ConstantKind::StructuralK: {
        need_factors(c, true, true, false, true);
        if (!(c.alpha > -c.n))
            throw ParameterOutOfRange("structural constant needs alpha > -n");
        long double e = (1.0L / c.q + static_cast<long double>(c.lambda)) *
                            log1m_pow(p, static_cast<long double>(c.alpha) + c.n) -
                        static_cast<long double>(c.lambda) * log1m_pow(p, c.n);
        for (int i = 0; i < c.m; ++i) {
            if (!(c.alpha_i[i] > -c.n))
                throw ParameterOutOfRange("structural constant needs alpha_i > -n");
            e += static_cast<long double>(c.lambda_i[i]) * log1m_pow(p, c.n);
            e -= (1.0L / c.q_i[i] + static_cast<long double>(c.lambda_i[i])) *
                 log1m_pow(p, static_cast<long double>(c.alpha_i[i]) + c.n);
        }
        return LogScalar::make(+1, e);
    }
    case ConstantKind::HerzA: {
        need_factors(c, false, false, true, false);
        if (c.r < 1)
            throw ParameterOutOfRange("A(r) needs r >= 1");
        const long double pr = std::pow(static_cast<long double>(p), -c.r);
        long double e = -static_cast<long double>(c.r) * c.m * pr;
        for (int i = 0; i < c.m; ++i)
            e += log1m_pow(p, static_cast<long double>(c.ell_i[i]) * pr) / c.ell_i[i];
        e -= log1m_pow(p, static_cast<long double>(c.m) * c.ell * pr) / c.ell;
        return LogScalar::make(+1, e);
    }
    }
    throw Error("unreachable");
}

} // namespace padhaus
