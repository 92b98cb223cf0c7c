#include "padhaus/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <random>
#include <thread>

#include "padhaus/operators.hpp"
#include "padhaus/weights.hpp"

namespace padhaus {

namespace {

constexpr double kIdentityTol = 1e-10;
constexpr double kExactTol = 1e-12;

double u01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::mt19937_64 scenario_rng(const Scenario& s, std::uint64_t seed, int draw) {
    return std::mt19937_64(fnv1a(s.id) ^ (seed * 0x9E3779B97F4A7C15ull) ^
                           (static_cast<std::uint64_t>(draw) * 0xD1B54A32D192ED03ull));
}

double conjugate(double q) {
    if (q <= 1.0)
        return std::numeric_limits<double>::infinity();
    return q / (q - 1.0);
}

// Kernel-side constant for a scenario, mapped to the target theorem.
LogScalar scenario_constant(const Scenario& s) {
    ConstantParams c;
    c.p = s.p;
    c.n = s.n;
    c.m = s.m;
    c.phi = s.phi;
    c.q = s.q;
    c.alpha = s.alpha;
    c.lambda = s.lambda;
    c.beta = s.beta;
    c.ell = s.ell;
    c.zeta = s.zeta;
    c.delta = s.delta;
    c.lambda_star = s.lambda_star;
    c.beta_star = s.beta_star;
    c.q_i = s.q_i;
    c.alpha_i = s.alpha_i;
    c.lambda_i = s.lambda_i;
    c.ell_i = s.ell_i;
    switch (s.theorem) {
    case TheoremId::T31: return theorem_constant(ConstantKind::C1, c);
    case TheoremId::T32: return theorem_constant(ConstantKind::C2, c);
    case TheoremId::T33: return theorem_constant(ConstantKind::C3, c);
    case TheoremId::T34i: return theorem_constant(ConstantKind::C41, c);
    case TheoremId::T34ii: return theorem_constant(ConstantKind::C42, c);
    case TheoremId::T35: return theorem_constant(ConstantKind::C5, c);
    case TheoremId::T41i: return theorem_constant(ConstantKind::C6, c);
    case TheoremId::T41ii: return theorem_constant(ConstantKind::C6Star, c);
    case TheoremId::T42: return theorem_constant(ConstantKind::C7, c);
    case TheoremId::T43: return theorem_constant(ConstantKind::C8, c);
    case TheoremId::Cor44: return theorem_constant(ConstantKind::C9, c);
    }
    throw Error("unreachable");
}

LogScalar one_minus_pow(int p, double e) {
    return LogScalar::make(+1, log1m_pow(p, e));
}

// Omega norm in the exponent the theorem pairs with the target space.
LogScalar omega_norm_for(const Scenario& s) {
    const bool zeta_pairing = s.theorem == TheoremId::T32 || s.theorem == TheoremId::T34i ||
                              s.theorem == TheoremId::T34ii;
    const double base = zeta_pairing ? s.q / s.zeta : s.q;
    return angular_norm(s.p, s.n, s.omega, conjugate(base));
}

// Input-space norm of factor i, per theorem.
LogScalar factor_norm(const Scenario& s, int i, const SeparableFunction& f, Window win) {
    const std::size_t k = static_cast<std::size_t>(i);
    switch (s.theorem) {
    case TheoremId::T31:
    case TheoremId::T41i:
    case TheoremId::T41ii:
        return central_morrey_norm(s.p, s.n, f, s.q_i[k], s.lambda_i[k],
                                   PowerWeight{s.alpha_i[k]}, win)
            .value;
    case TheoremId::T32:
        return central_morrey_norm(s.p, s.n, f, s.q_i[k], s.lambda_i[k],
                                   PowerWeight{s.weight_alpha}, win)
            .value;
    case TheoremId::T42:
        return central_morrey_norm(s.p, s.n, f, s.q_star_i[k], s.lambda_i[k],
                                   PowerWeight{s.weight_alpha}, win)
            .value;
    case TheoremId::T33:
        return herz_norm(s.p, s.n, f, s.q_i[k], s.beta_i[k], s.ell_i[k],
                         PowerWeight{s.alpha_i[k]}, win)
            .value;
    case TheoremId::T34i:
    case TheoremId::T34ii:
        return dot_herz_norm(s.p, s.n, f, s.q_i[k], s.beta_i[k], s.ell_i[k],
                             PowerWeight{s.weight_alpha}, win)
            .value;
    case TheoremId::T35:
    case TheoremId::T43:
        return morrey_herz_norm(s.p, s.n, f, s.q_i[k], s.beta_i[k], s.ell_i[k], s.lambda_i[k],
                                PowerWeight{s.alpha_i[k]}, win)
            .value;
    case TheoremId::Cor44:
        return herz_norm(s.p, s.n, f, s.q_i[k], s.beta_i[k], s.ell_i[k],
                         PowerWeight{s.alpha_i[k]}, win)
            .value;
    }
    throw Error("unreachable");
}

// Target-space norm of the operator output, per theorem.
LogScalar output_norm(const Scenario& s, const RadialProfile& h, Window win) {
    const SeparableFunction hf{h, AngularFactor::constant(1.0)};
    switch (s.theorem) {
    case TheoremId::T31:
    case TheoremId::T41i:
    case TheoremId::T41ii:
        return central_morrey_norm(s.p, s.n, hf, s.q, s.lambda, PowerWeight{s.alpha}, win).value;
    case TheoremId::T32:
        return central_morrey_norm(s.p, s.n, hf, s.q_star, s.lambda_star,
                                   PowerWeight{s.weight_alpha}, win)
            .value;
    case TheoremId::T42:
        return central_morrey_norm(s.p, s.n, hf, s.q, s.lambda_star, PowerWeight{s.weight_alpha},
                                   win)
            .value;
    case TheoremId::T33:
        return herz_norm(s.p, s.n, hf, s.q, s.beta, s.ell, PowerWeight{s.alpha}, win).value;
    case TheoremId::T34i:
    case TheoremId::T34ii:
        return dot_herz_norm(s.p, s.n, hf, s.q_star, s.beta_star, s.ell,
                             PowerWeight{s.weight_alpha}, win)
            .value;
    case TheoremId::T35:
        return morrey_herz_norm(s.p, s.n, hf, s.q, s.beta, s.ell, s.lambda_star,
                                PowerWeight{s.alpha}, win)
            .value;
    case TheoremId::T43:
        return morrey_herz_norm(s.p, s.n, hf, s.q, s.beta_star, s.ell, s.lambda_star,
                                PowerWeight{s.alpha}, win)
            .value;
    case TheoremId::Cor44:
        return herz_norm(s.p, s.n, hf, s.q, s.beta_star, s.ell, PowerWeight{s.alpha}, win).value;
    }
    throw Error("unreachable");
}

bool is_commutator_theorem(TheoremId t) {
    return t == TheoremId::T41i || t == TheoremId::T41ii || t == TheoremId::T42 ||
           t == TheoremId::T43 || t == TheoremId::Cor44;
}

// Product of the symbol norms entering the right-hand side.
LogScalar symbol_norm_product(const Scenario& s, std::span<const SeparableFunction> bs,
                              Window win) {
    LogScalar prod = LogScalar::one();
    for (int i = 0; i < s.m; ++i) {
        const std::size_t k = static_cast<std::size_t>(i);
        double exponent;
        PowerWeight w{};
        if (s.theorem == TheoremId::T42) {
            exponent = s.r_star_i[k];
            w.alpha = s.weight_alpha;
        } else {
            exponent = s.r_i[k];
            w.alpha = s.alpha_i[k];
        }
        prod = prod * cmo_norm(s.p, s.n, bs[k], exponent, w, win).value;
    }
    return prod;
}

SeparableFunction random_function(const Scenario& s, std::mt19937_64& rng) {
    const int span = s.profile_span;
    const int len = 1 + static_cast<int>(u01(rng) * std::min(s.max_window_len, 2 * span));
    const int lo = -span + static_cast<int>(u01(rng) * (2 * span - len + 1));
    std::vector<LogScalar> vals;
    vals.reserve(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i)
        vals.push_back(LogScalar::from_real(u01(rng), s.p));
    RadialProfile radial = RadialProfile::finite_window(lo, lo + len - 1, std::move(vals));

    int level = static_cast<int>(u01(rng) * (s.max_angular_level + 1));
    if (level == 0)
        return {radial, AngularFactor::constant(1.0)};
    const double count = std::pow(s.p, static_cast<double>(level) * s.n) -
                         std::pow(s.p, static_cast<double>(level - 1) * s.n);
    std::vector<double> avals(static_cast<std::size_t>(count));
    for (auto& v : avals)
        v = u01(rng);
    return {radial, AngularFactor::at_level(level, std::move(avals))};
}

// Extremal inputs per sharpness theorem.
std::vector<SeparableFunction> extremal_inputs(const Scenario& s, int herz_r = 1) {
    std::vector<SeparableFunction> fs;
    for (int i = 0; i < s.m; ++i) {
        const std::size_t k = static_cast<std::size_t>(i);
        switch (s.theorem) {
        case TheoremId::T31:
        case TheoremId::T41ii:
            fs.push_back(
                make_central_morrey_extremal(s.n, s.alpha_i[k], s.lambda_i[k], s.q_i[k]));
            break;
        case TheoremId::T33:
            fs.push_back(make_herz_extremal(s.p, s.n, herz_r, s.beta_i[k], s.q_i[k], s.alpha_i[k]));
            break;
        case TheoremId::T35:
            fs.push_back(
                make_morrey_herz_extremal(s.n, s.beta_i[k], s.q_i[k], s.alpha_i[k], s.lambda_i[k]));
            break;
        default:
            throw HypothesisViolated("no extremal family for this theorem");
        }
    }
    return fs;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

VerificationReport base_report(const Scenario& s, const RunOptions& opts) {
    VerificationReport r;
    r.scenario_id = s.id;
    r.theorem = theorem_name(s.theorem);
    r.seed = opts.seed;
    return r;
}

void finish(VerificationReport& r, const Timer& t, const RunOptions& opts) {
    r.wall_ms = opts.record_timing ? t.ms() : 0.0;
}

VerificationReport sharpness_t31(const Scenario& s, const RunOptions& opts) {
    Timer timer;
    VerificationReport rep = base_report(s, opts);
    const LogScalar c1 = scenario_constant(s);
    if (!c1.is_finite()) {
        rep.status = "diverges";
        rep.lhs = rep.rhs = std::numeric_limits<double>::infinity();
        finish(rep, timer, opts);
        return rep;
    }
    const auto fs = extremal_inputs(s);
    const RadialProfile h = apply_hausdorff(s.p, s.n, s.phi, s.omega, fs);
    LogScalar side = output_norm(s, h, opts.window);
    for (int i = 0; i < s.m; ++i)
        side = side / factor_norm(s, i, fs[static_cast<std::size_t>(i)], opts.window);

    ConstantParams cp;
    cp.p = s.p;
    cp.n = s.n;
    cp.m = s.m;
    cp.q = s.q;
    cp.alpha = s.alpha;
    cp.lambda = s.lambda;
    cp.q_i = s.q_i;
    cp.alpha_i = s.alpha_i;
    cp.lambda_i = s.lambda_i;
    const LogScalar K = theorem_constant(ConstantKind::StructuralK, cp);
    LogScalar expected = K * c1 * angular_integral(s.p, s.n, s.omega).abs();
    for (int i = 0; i < s.m; ++i) {
        const std::size_t k = static_cast<std::size_t>(i);
        expected = expected *
                   one_minus_pow(s.p, (s.n + s.alpha_i[k]) * (s.lambda_i[k] * s.q_i[k] + 1.0))
                       .pow(1.0 / s.q_i[k]);
    }
    expected = expected / one_minus_pow(s.p, (s.n + s.alpha) * (s.lambda * s.q + 1.0)).pow(1.0 / s.q);

    rep.lhs = side.to_real(s.p);
    rep.rhs = expected.to_real(s.p);
    rep.metric = rel_diff(side, expected, s.p);
    rep.status = rep.metric <= kIdentityTol ? "pass" : "fail";
    finish(rep, timer, opts);
    return rep;
}

VerificationReport sharpness_t33(const Scenario& s, const RunOptions& opts) {
    Timer timer;
    VerificationReport rep = base_report(s, opts);
    if (!scenario_constant(s).is_finite()) {
        rep.status = "diverges";
        rep.lhs = rep.rhs = std::numeric_limits<double>::infinity();
        finish(rep, timer, opts);
        return rep;
    }
    // The exact window-plus-tail evaluation of the output exists only for
    // finite kernels; a decaying kernel would silently truncate the ratio.
    if (s.phi.kind != PhiKernel::Kind::FiniteSupport)
        throw HypothesisViolated("the Herz necessity check needs a finite-support kernel");

    const LogScalar omega_int = angular_integral(s.p, s.n, s.omega).abs();
    double worst_norm_err = 0.0;
    bool bound_ok = true;
    std::vector<double> a_values;
    double last_ratio = 0.0, last_lower = 0.0;

    for (int r = 1; r <= 7; ++r) {
        ConstantParams ap;
        ap.p = s.p;
        ap.n = s.n;
        ap.m = s.m;
        ap.ell = s.ell;
        ap.ell_i = s.ell_i;
        ap.r = r;
        a_values.push_back(theorem_constant(ConstantKind::HerzA, ap).to_real(s.p));
        if (r > 6)
            break;

        const auto fs = extremal_inputs(s, r);
        LogScalar norm_prod = LogScalar::one();
        for (int i = 0; i < s.m; ++i) {
            const std::size_t k = static_cast<std::size_t>(i);
            const LogScalar got = factor_norm(s, i, fs[k], opts.window);
            const LogScalar want =
                one_minus_pow(s.p, s.n).pow(1.0 / s.q_i[k]) /
                one_minus_pow(s.p, s.ell_i[k] * std::pow(s.p, -static_cast<double>(r)))
                    .pow(1.0 / s.ell_i[k]);
            worst_norm_err = std::max(worst_norm_err, rel_diff(got, want, s.p));
            norm_prod = norm_prod * got;
        }

        const RadialProfile h = apply_hausdorff(s.p, s.n, s.phi, s.omega, fs);
        const LogScalar ratio = output_norm(s, h, opts.window) / norm_prod;

        // Partial kernel sum at the r-dependent exponent.
        const double u_r = 1.0 - s.beta - (s.n + s.alpha) / s.q -
                           s.m * std::pow(s.p, -static_cast<double>(r));
        std::vector<LogScalar> terms;
        for (const auto& [g, v] : s.phi.support)
            if (g <= r && v != 0.0)
                terms.push_back(LogScalar::from_real(v, s.p) *
                                LogScalar::pow_of(-static_cast<long double>(g) * u_r));
        const LogScalar lower = LogScalar::from_real(a_values.back(), s.p) * omega_int *
                                log_combine(s.p, terms);

        last_ratio = ratio.to_real(s.p);
        last_lower = lower.to_real(s.p);
        if (!lower.is_zero() &&
            LogScalar::cmp_abs(ratio, lower * LogScalar::from_real(1.0 - kIdentityTol, s.p)) < 0)
            bound_ok = false;
    }

    bool converging = true;
    for (int r = 3; r + 1 < static_cast<int>(a_values.size()); ++r) {
        const double d_prev = std::fabs(a_values[static_cast<std::size_t>(r)] -
                                        a_values[static_cast<std::size_t>(r - 1)]);
        const double d_next = std::fabs(a_values[static_cast<std::size_t>(r + 1)] -
                                        a_values[static_cast<std::size_t>(r)]);
        if (d_next > d_prev)
            converging = false;
    }

    rep.lhs = last_ratio;
    rep.rhs = last_lower;
    rep.metric = worst_norm_err;
    rep.status = (worst_norm_err <= kExactTol && bound_ok && converging) ? "pass" : "fail";
    if (!bound_ok)
        rep.detail = "lower bound violated";
    else if (!converging)
        rep.detail = "A(r) differences not settling";
    finish(rep, timer, opts);
    return rep;
}

VerificationReport sharpness_t35(const Scenario& s, const RunOptions& opts) {
    Timer timer;
    VerificationReport rep = base_report(s, opts);
    const LogScalar c5 = scenario_constant(s);
    if (!c5.is_finite()) {
        rep.status = "diverges";
        rep.lhs = rep.rhs = std::numeric_limits<double>::infinity();
        finish(rep, timer, opts);
        return rep;
    }
    const auto fs = extremal_inputs(s);
    const RadialProfile h = apply_hausdorff(s.p, s.n, s.phi, s.omega, fs);
    const LogScalar omega_int = angular_integral(s.p, s.n, s.omega).abs();
    const double s_out = -s.beta - (s.n + s.alpha) / s.q + s.lambda_star;

    double worst = 0.0;
    for (int k = -30; k <= 30; ++k) {
        const LogScalar got = evaluate_profile(h, k, s.p).abs();
        const LogScalar want =
            omega_int * c5 * LogScalar::pow_of(static_cast<long double>(k) * s_out);
        worst = std::max(worst, rel_diff(got, want, s.p));
    }

    LogScalar norm_prod = LogScalar::one();
    for (int i = 0; i < s.m; ++i)
        norm_prod = norm_prod * factor_norm(s, i, fs[static_cast<std::size_t>(i)], opts.window);
    const LogScalar ratio = output_norm(s, h, opts.window) / norm_prod;
    LogScalar expected = omega_int * c5 / one_minus_pow(s.p, s.lambda_star * s.ell).pow(1.0 / s.ell);
    for (int i = 0; i < s.m; ++i) {
        const std::size_t k = static_cast<std::size_t>(i);
        expected = expected * one_minus_pow(s.p, s.lambda_i[k] * s.ell_i[k]).pow(1.0 / s.ell_i[k]);
    }
    worst = std::max(worst, rel_diff(ratio, expected, s.p));

    rep.lhs = ratio.to_real(s.p);
    rep.rhs = expected.to_real(s.p);
    rep.metric = worst;
    rep.status = worst <= kIdentityTol ? "pass" : "fail";
    finish(rep, timer, opts);
    return rep;
}

VerificationReport sharpness_t41ii(const Scenario& s, const RunOptions& opts) {
    Timer timer;
    VerificationReport rep = base_report(s, opts);
    const LogScalar moment =
        commutator_moment_sum(s.p, s.phi, 1.0 + (s.n + s.alpha) * s.lambda, s.m);
    if (!moment.is_finite()) {
        rep.status = "diverges";
        rep.lhs = rep.rhs = std::numeric_limits<double>::infinity();
        finish(rep, timer, opts);
        return rep;
    }
    const auto fs = extremal_inputs(s);
    std::vector<SeparableFunction> bs(static_cast<std::size_t>(s.m), make_log_symbol());
    const RadialProfile h = apply_commutator(s.p, s.n, s.phi, s.omega, bs, fs);
    const LogScalar omega_int = angular_integral(s.p, s.n, s.omega).abs();
    const double s_out = (s.n + s.alpha) * s.lambda;

    double worst = 0.0;
    for (int k = -30; k <= 30; ++k) {
        const LogScalar got = evaluate_profile(h, k, s.p).abs();
        const LogScalar want = moment.abs() * omega_int *
                               LogScalar::pow_of(static_cast<long double>(k) * s_out);
        worst = std::max(worst, rel_diff(got, want, s.p));
    }
    rep.lhs = evaluate_profile(h, 0, s.p).abs().to_real(s.p);
    rep.rhs = (moment.abs() * omega_int).to_real(s.p);
    rep.metric = worst;
    rep.status = worst <= kIdentityTol ? "pass" : "fail";
    finish(rep, timer, opts);
    return rep;
}

VerificationReport sufficiency_run(const Scenario& s, const RunOptions& opts) {
    Timer timer;
    VerificationReport rep = base_report(s, opts);
    const LogScalar constant = scenario_constant(s);
    if (!constant.is_finite()) {
        rep.status = "diverges";
        rep.lhs = rep.rhs = std::numeric_limits<double>::infinity();
        finish(rep, timer, opts);
        return rep;
    }
    const LogScalar omega_norm = omega_norm_for(s);
    const bool commutator = is_commutator_theorem(s.theorem);

    std::vector<SeparableFunction> bs;
    LogScalar symbol_prod = LogScalar::one();
    if (commutator) {
        bs.assign(static_cast<std::size_t>(s.m), make_log_symbol());
        symbol_prod = symbol_norm_product(s, bs, opts.window);
    }

    // T31 carries its explicit constant; the others get a fitted one. The
    // sphere-mass factor carries the 1/q power the chained estimates
    // actually produce (one (1-p^{-n})^{1/q_i} per factor); with it the
    // bound is exact and nearly attained by the extremal family.
    const bool explicit_constant = s.theorem == TheoremId::T31;
    LogScalar t31_prefactor = LogScalar::one();
    if (explicit_constant) {
        ConstantParams cp;
        cp.p = s.p;
        cp.n = s.n;
        cp.m = s.m;
        cp.q = s.q;
        cp.alpha = s.alpha;
        cp.lambda = s.lambda;
        cp.q_i = s.q_i;
        cp.alpha_i = s.alpha_i;
        cp.lambda_i = s.lambda_i;
        t31_prefactor = one_minus_pow(s.p, s.n).pow(1.0 / s.q) *
                        theorem_constant(ConstantKind::StructuralK, cp);
    }

    std::vector<double> fits;
    int violations = 0;
    double max_ratio = 0.0;
    for (int d = 0; d < s.draws; ++d) {
        auto rng = scenario_rng(s, opts.seed, d);
        std::vector<SeparableFunction> fs;
        fs.reserve(static_cast<std::size_t>(s.m));
        for (int i = 0; i < s.m; ++i)
            fs.push_back(random_function(s, rng));

        const RadialProfile h = commutator
                                    ? apply_commutator(s.p, s.n, s.phi, s.omega, bs, fs)
                                    : apply_hausdorff(s.p, s.n, s.phi, s.omega, fs);
        const LogScalar lhs = output_norm(s, h, opts.window);
        LogScalar bound = constant * omega_norm * symbol_prod;
        for (int i = 0; i < s.m; ++i)
            bound = bound * factor_norm(s, i, fs[static_cast<std::size_t>(i)], opts.window);

        if (explicit_constant) {
            bound = bound * t31_prefactor;
            if (lhs.is_zero() && bound.is_zero())
                continue;
            if (bound.is_zero()) {
                ++violations;
                continue;
            }
            const double ratio = (lhs / bound).to_real(s.p);
            max_ratio = std::max(max_ratio, ratio);
            if (ratio > 1.0 + kExactTol)
                ++violations;
        } else {
            if (bound.is_zero()) {
                if (!lhs.is_zero())
                    ++violations;
                fits.push_back(0.0);
                continue;
            }
            fits.push_back((lhs / bound).to_real(s.p));
        }
    }

    if (explicit_constant) {
        rep.lhs = max_ratio;
        rep.rhs = 1.0;
        rep.metric = max_ratio;
        rep.status = violations == 0 ? "pass" : "fail";
        if (violations > 0)
            rep.detail = std::to_string(violations) + " inequality violations";
        finish(rep, timer, opts);
        return rep;
    }

    std::vector<double> sorted = fits;
    std::sort(sorted.begin(), sorted.end());
    const double median = sorted.empty() ? 0.0 : sorted[sorted.size() / 2];
    const double maxfit = sorted.empty() ? 0.0 : sorted.back();
    const bool finite = std::all_of(sorted.begin(), sorted.end(),
                                    [](double f) { return std::isfinite(f); });
    rep.lhs = maxfit;
    rep.rhs = 10.0 * median;
    rep.metric = median > 0.0 ? maxfit / median : (maxfit > 0.0 ? INFINITY : 0.0);
    const bool stable = maxfit <= 10.0 * median || maxfit == 0.0;
    rep.status = (violations == 0 && finite && stable) ? "pass" : "fail";
    if (!stable)
        rep.detail = "fitted constant unstable across draws";
    finish(rep, timer, opts);
    return rep;
}

} // namespace

VerificationReport verify_sharpness(const Scenario& s, const RunOptions& opts) {
    VerificationReport rep = base_report(s, opts);
    try {
        const auto bad = validate_scenario(s);
        if (!bad.empty())
            throw HypothesisViolated(bad.front());
        switch (s.theorem) {
        case TheoremId::T31: return sharpness_t31(s, opts);
        case TheoremId::T33: return sharpness_t33(s, opts);
        case TheoremId::T35: return sharpness_t35(s, opts);
        case TheoremId::T41ii: return sharpness_t41ii(s, opts);
        default:
            throw HypothesisViolated("no sharpness identity is checked for this theorem");
        }
    } catch (const std::exception& e) {
        rep.status = "error";
        rep.detail = e.what();
    }
    return rep;
}

VerificationReport verify_sufficiency(const Scenario& s, const RunOptions& opts) {
    VerificationReport rep = base_report(s, opts);
    try {
        const auto bad = validate_scenario(s);
        if (!bad.empty())
            throw HypothesisViolated(bad.front());
        if (s.theorem == TheoremId::T41ii)
            throw HypothesisViolated("T41ii is a sharpness-only statement");
        return sufficiency_run(s, opts);
    } catch (const std::exception& e) {
        rep.status = "error";
        rep.detail = e.what();
    }
    return rep;
}

std::vector<VerificationReport> run_grid(std::span<const Scenario> scenarios,
                                         const RunOptions& opts) {
    std::vector<VerificationReport> reports(scenarios.size());
    const int workers =
        std::max(1, std::min<int>(opts.parallelism, static_cast<int>(scenarios.size())));
    std::atomic<std::size_t> next{0};
    auto work = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= scenarios.size())
                return;
            const Scenario& s = scenarios[i];
            reports[i] = s.mode == ScenarioMode::Sharpness ? verify_sharpness(s, opts)
                                                           : verify_sufficiency(s, opts);
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int i = 0; i < workers; ++i)
            pool.emplace_back(work);
        for (auto& t : pool)
            t.join();
    }
    return reports;
}

} // namespace padhaus
