#include "padhaus/weights.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace padhaus {

WeightClassification classify_power_weight(int p, int n, double alpha, double ell) {
    if (p < 2 || n < 1)
        throw ParameterOutOfRange("bad prime or dimension");
    if (!(ell >= 1.0))
        throw ParameterOutOfRange("Muckenhoupt index must be >= 1");
    WeightClassification c;
    c.alpha = alpha;
    c.ell = ell;
    c.locally_integrable = alpha > -n;
    if (!c.locally_integrable) {
        c.member = false;
        c.reverse_holder_index = std::numeric_limits<double>::quiet_NaN();
        return c;
    }
    c.member = (ell == 1.0) ? (alpha <= 0.0) : (alpha < n * (ell - 1.0));
    c.reverse_holder_index =
        alpha >= 0.0 ? std::numeric_limits<double>::infinity() : -static_cast<double>(n) / alpha;
    return c;
}

LogScalar muckenhoupt_characteristic(int p, int n, double alpha, double ell, Window win) {
    if (!(ell > 1.0))
        throw ParameterOutOfRange("characteristic is defined for ell > 1");
    const auto cls = classify_power_weight(p, n, alpha, ell);
    if (!cls.member)
        throw ParameterOutOfRange("weight is outside the class; no finite characteristic");

    // On a ball away from 0 the weight is constant and the product is 1, so
    // centered balls carry the supremum. Per centered ball both means are
    // exact geometric sums and their product cancels every p^{g..} power;
    // the scan asserts that invariance.
    const double dual = -alpha / (ell - 1.0);
    LogScalar best = LogScalar::zero();
    for (int g = win.lo; g <= win.hi; ++g) {
        const LogScalar mb = measure(p, n, Region::ball(g));
        const LogScalar a = weighted_measure(p, n, Region::ball(g), {alpha}) / mb;
        const LogScalar b = (weighted_measure(p, n, Region::ball(g), {dual}) / mb).pow(ell - 1.0);
        const LogScalar prod = a * b;
        if (!best.is_zero() && rel_diff(best, prod, p) > 1e-12)
            throw Error("characteristic product failed its ball invariance");
        if (LogScalar::cmp_abs(best, prod) < 0)
            best = prod;
    }
    return best;
}

SandwichReport check_sandwich(int p, int n, double alpha, double ell, double r, int ball_lo,
                              int ball_hi, int max_depth) {
    const auto cls = classify_power_weight(p, n, alpha, ell);
    if (!cls.member)
        throw ParameterOutOfRange("weight is not in the requested Muckenhoupt class");
    if (!(r > 1.0))
        throw ParameterOutOfRange("reverse Hoelder order must exceed 1");
    if (std::isfinite(cls.reverse_holder_index) && r >= cls.reverse_holder_index)
        throw ParameterOutOfRange("weight is not in the requested reverse Hoelder class");

    const PowerWeight w{alpha};
    SandwichReport rep;
    rep.c_lower = std::numeric_limits<double>::infinity();
    rep.c_upper = 0.0;
    const double rh = (r - 1.0) / r;
    for (int g = ball_lo; g <= ball_hi; ++g) {
        const LogScalar wb = weighted_measure(p, n, Region::ball(g), w);
        const LogScalar mb = measure(p, n, Region::ball(g));
        for (int d = 0; d <= max_depth; ++d) {
            for (const Region sub : {Region::ball(g - d), Region::sphere(g - d)}) {
                const double mr = (measure(p, n, sub) / mb).to_real(p);
                const double wr = (weighted_measure(p, n, sub, w) / wb).to_real(p);
                rep.samples.push_back({sub, g, mr, wr});
                rep.c_lower = std::min(rep.c_lower, wr / std::pow(mr, ell));
                rep.c_upper = std::max(rep.c_upper, wr / std::pow(mr, rh));
            }
        }
    }
    rep.pass = rep.c_lower > 0.0 && std::isfinite(rep.c_upper);
    return rep;
}

MeanBoundReport check_mean_bound(int p, int n, const SeparableFunction& f, double alpha,
                                 double ell, int ball_lo, int ball_hi) {
    const auto cls = classify_power_weight(p, n, alpha, ell);
    if (!cls.member)
        throw ParameterOutOfRange("weight is not in the requested Muckenhoupt class");

    if (f.radial.kind == RadialProfile::Kind::PowerLaw ||
        f.radial.kind == RadialProfile::Kind::LogScale) {
        const double s = f.radial.kind == RadialProfile::Kind::PowerLaw ? f.radial.exponent : 0.0;
        if (!(s + n > 0.05) || !(s * ell + alpha + n > 0.05))
            throw NonconvergentSum("profile-weight pair is not integrable on balls");
    }

    const PowerWeight w{alpha};
    const PowerWeight flat{0.0};
    MeanBoundReport rep;
    for (int g = ball_lo; g <= ball_hi; ++g) {
        // |B|^{-1} int |f| dx over the plain measure. Profiles unbounded
        // below are truncated deep enough that the geometric remainder is
        // far below the fit's resolution.
        std::vector<LogScalar> lhs_terms, rhs_terms;
        const auto slo = f.radial.support_lo();
        const int bottom = slo.has_value() ? std::max(*slo, g - 2000) : g - 2000;
        for (int theta = bottom; theta <= g; ++theta) {
            const LogScalar s1 = sphere_norm(p, n, f, theta, 1.0, flat);
            const LogScalar se = sphere_norm(p, n, f, theta, ell, w);
            lhs_terms.push_back(s1);
            rhs_terms.push_back(se.pow(ell));
        }
        const LogScalar lhs_sum = log_combine(p, lhs_terms);
        const LogScalar rhs_sum = log_combine(p, rhs_terms);
        const double lhs = (lhs_sum / measure(p, n, Region::ball(g))).to_real(p);
        const double rhs =
            (rhs_sum / weighted_measure(p, n, Region::ball(g), w)).pow(1.0 / ell).to_real(p);
        rep.samples.push_back({g, lhs, rhs});
        if (lhs > 0.0)
            rep.c_fit = std::max(rep.c_fit, rhs > 0.0 ? lhs / rhs : std::numeric_limits<double>::infinity());
    }
    rep.pass = std::isfinite(rep.c_fit);
    return rep;
}

} // namespace padhaus
