#include "padhaus/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "padhaus/weights.hpp"

namespace padhaus {

const char* theorem_name(TheoremId id) {
    switch (id) {
    case TheoremId::T31: return "T31";
    case TheoremId::T32: return "T32";
    case TheoremId::T33: return "T33";
    case TheoremId::T34i: return "T34i";
    case TheoremId::T34ii: return "T34ii";
    case TheoremId::T35: return "T35";
    case TheoremId::T41i: return "T41i";
    case TheoremId::T41ii: return "T41ii";
    case TheoremId::T42: return "T42";
    case TheoremId::T43: return "T43";
    case TheoremId::Cor44: return "Cor44";
    }
    return "?";
}

std::optional<TheoremId> theorem_from_name(const std::string& name) {
    for (TheoremId id : {TheoremId::T31, TheoremId::T32, TheoremId::T33, TheoremId::T34i,
                         TheoremId::T34ii, TheoremId::T35, TheoremId::T41i, TheoremId::T41ii,
                         TheoremId::T42, TheoremId::T43, TheoremId::Cor44})
        if (name == theorem_name(id))
            return id;
    return std::nullopt;
}

namespace {

constexpr double kRelTol = 1e-12;

double inv_sum(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v)
        s += 1.0 / x;
    return s;
}

double plain_sum(const std::vector<double>& v) {
    return std::accumulate(v.begin(), v.end(), 0.0);
}

bool close(double a, double b) {
    return std::fabs(a - b) <= kRelTol * std::max({1.0, std::fabs(a), std::fabs(b)});
}

bool uses_power_weights(TheoremId t) {
    return t == TheoremId::T31 || t == TheoremId::T33 || t == TheoremId::T35 ||
           t == TheoremId::T41i || t == TheoremId::T41ii || t == TheoremId::T43 ||
           t == TheoremId::Cor44;
}

bool uses_muckenhoupt_weight(TheoremId t) {
    return t == TheoremId::T32 || t == TheoremId::T34i || t == TheoremId::T34ii ||
           t == TheoremId::T42;
}

bool section4(TheoremId t) {
    return t == TheoremId::T41i || t == TheoremId::T41ii || t == TheoremId::T43 ||
           t == TheoremId::Cor44;
}

} // namespace

Scenario Scenario::derived() const {
    Scenario s = *this;
    const TheoremId t = s.theorem;
    const bool has_q_i = s.q_i.size() == static_cast<std::size_t>(s.m);
    const bool has_r_i = s.r_i.size() == static_cast<std::size_t>(s.m);

    if (has_q_i && s.q == 0.0 && t != TheoremId::T42) {
        double inv = inv_sum(s.q_i);
        if (section4(t) && has_r_i)
            inv += inv_sum(s.r_i);
        s.q = 1.0 / inv;
    }
    if (uses_power_weights(t) && s.alpha_i.size() == static_cast<std::size_t>(s.m) && has_q_i &&
        s.alpha == 0.0) {
        double acc = 0.0;
        for (int i = 0; i < s.m; ++i)
            acc += s.alpha_i[static_cast<std::size_t>(i)] / s.q_i[static_cast<std::size_t>(i)];
        if (section4(t) && has_r_i)
            for (int i = 0; i < s.m; ++i)
                acc += s.alpha_i[static_cast<std::size_t>(i)] / s.r_i[static_cast<std::size_t>(i)];
        s.alpha = acc * s.q;
    }
    if (s.beta_i.size() == static_cast<std::size_t>(s.m) && s.beta == 0.0)
        s.beta = plain_sum(s.beta_i);
    if (s.ell_i.size() == static_cast<std::size_t>(s.m) && s.ell == 0.0)
        s.ell = 1.0 / inv_sum(s.ell_i);
    if (s.lambda_i.size() == static_cast<std::size_t>(s.m)) {
        if (s.lambda_star == 0.0)
            s.lambda_star = plain_sum(s.lambda_i);
        if ((t == TheoremId::T31 || t == TheoremId::T41i || t == TheoremId::T41ii) &&
            s.lambda == 0.0 && s.alpha_i.size() == static_cast<std::size_t>(s.m)) {
            double acc = 0.0;
            for (int i = 0; i < s.m; ++i)
                acc += (s.n + s.alpha_i[static_cast<std::size_t>(i)]) *
                       s.lambda_i[static_cast<std::size_t>(i)];
            s.lambda = acc / (s.n + s.alpha);
        }
    }
    if ((t == TheoremId::T43 || t == TheoremId::Cor44) && s.beta_star == 0.0 &&
        s.beta_i.size() == static_cast<std::size_t>(s.m) && has_r_i &&
        s.alpha_i.size() == static_cast<std::size_t>(s.m)) {
        double acc = plain_sum(s.beta_i);
        for (int i = 0; i < s.m; ++i)
            acc -= (s.n + s.alpha_i[static_cast<std::size_t>(i)]) /
                   s.r_i[static_cast<std::size_t>(i)];
        s.beta_star = acc;
    }
    if ((t == TheoremId::T34i || t == TheoremId::T34ii) && s.beta_star == 0.0 && s.q_star != 0.0)
        s.beta_star = s.n * (1.0 / s.q + s.beta / s.n - 1.0 / s.q_star);
    return s;
}

namespace {

struct Checker {
    const Scenario& s;
    std::vector<std::string> bad;

    void relation(bool ok, const std::string& what) {
        if (!ok)
            bad.push_back(what);
    }

    void require_factors(const std::vector<double>& v, const char* name) {
        if (v.size() != static_cast<std::size_t>(s.m)) {
            std::ostringstream os;
            os << name << " must list one value per factor (m=" << s.m << ")";
            bad.push_back(os.str());
        }
    }
};

} // namespace

std::vector<std::string> check_homogeneity(const Scenario& s) {
    Checker c{s, {}};
    const TheoremId t = s.theorem;

    const bool need_q = t != TheoremId::T42;
    if (need_q) {
        c.require_factors(s.q_i, "q_i");
        if (section4(t))
            c.require_factors(s.r_i, "r_i");
        if (c.bad.empty()) {
            double inv = inv_sum(s.q_i);
            if (section4(t))
                inv += inv_sum(s.r_i);
            c.relation(close(inv, 1.0 / s.q), "sum of reciprocal factor exponents must equal 1/q");
        }
    }

    if (uses_power_weights(t) && c.bad.empty()) {
        c.require_factors(s.alpha_i, "alpha_i");
        if (c.bad.empty()) {
            double acc = 0.0;
            for (int i = 0; i < s.m; ++i)
                acc += s.alpha_i[static_cast<std::size_t>(i)] / s.q_i[static_cast<std::size_t>(i)];
            if (section4(t))
                for (int i = 0; i < s.m; ++i)
                    acc +=
                        s.alpha_i[static_cast<std::size_t>(i)] / s.r_i[static_cast<std::size_t>(i)];
            c.relation(close(acc, s.alpha / s.q),
                       "weighted alpha_i sums must equal alpha/q");
        }
    }

    switch (t) {
    case TheoremId::T31:
    case TheoremId::T41i:
    case TheoremId::T41ii: {
        c.require_factors(s.lambda_i, "lambda_i");
        if (c.bad.empty()) {
            double acc = 0.0;
            for (int i = 0; i < s.m; ++i)
                acc += (s.n + s.alpha_i[static_cast<std::size_t>(i)]) *
                       s.lambda_i[static_cast<std::size_t>(i)];
            c.relation(close(acc / (s.n + s.alpha), s.lambda),
                       "scaled lambda_i sums must equal lambda");
        }
        break;
    }
    case TheoremId::T32:
    case TheoremId::T42: {
        c.require_factors(s.lambda_i, "lambda_i");
        if (c.bad.empty())
            c.relation(close(plain_sum(s.lambda_i), s.lambda_star),
                       "lambda_star must equal the sum of the lambda_i");
        break;
    }
    case TheoremId::T33: {
        c.require_factors(s.beta_i, "beta_i");
        c.require_factors(s.ell_i, "ell_i");
        if (c.bad.empty()) {
            c.relation(close(plain_sum(s.beta_i), s.beta), "beta must equal the sum of the beta_i");
            c.relation(close(inv_sum(s.ell_i), 1.0 / s.ell),
                       "sum of reciprocal ell_i must equal 1/ell");
        }
        break;
    }
    case TheoremId::T34i:
    case TheoremId::T34ii: {
        c.require_factors(s.beta_i, "beta_i");
        c.require_factors(s.ell_i, "ell_i");
        if (c.bad.empty()) {
            c.relation(close(plain_sum(s.beta_i), s.beta), "beta must equal the sum of the beta_i");
            c.relation(close(inv_sum(s.ell_i), 1.0 / s.ell),
                       "sum of reciprocal ell_i must equal 1/ell");
            c.relation(close(1.0 / s.q_star + s.beta_star / s.n, 1.0 / s.q + s.beta / s.n),
                       "1/q* + beta*/n must equal 1/q + beta/n");
        }
        break;
    }
    case TheoremId::T35: {
        c.require_factors(s.beta_i, "beta_i");
        c.require_factors(s.ell_i, "ell_i");
        c.require_factors(s.lambda_i, "lambda_i");
        if (c.bad.empty()) {
            c.relation(close(plain_sum(s.beta_i), s.beta), "beta must equal the sum of the beta_i");
            c.relation(close(inv_sum(s.ell_i), 1.0 / s.ell),
                       "sum of reciprocal ell_i must equal 1/ell");
            c.relation(close(plain_sum(s.lambda_i), s.lambda_star),
                       "lambda_star must equal the sum of the lambda_i");
        }
        break;
    }
    case TheoremId::T43:
    case TheoremId::Cor44: {
        c.require_factors(s.beta_i, "beta_i");
        c.require_factors(s.ell_i, "ell_i");
        c.require_factors(s.lambda_i, "lambda_i");
        if (c.bad.empty()) {
            c.relation(close(inv_sum(s.ell_i), 1.0 / s.ell),
                       "sum of reciprocal ell_i must equal 1/ell");
            c.relation(close(plain_sum(s.lambda_i), s.lambda_star),
                       "lambda_star must equal the sum of the lambda_i");
            double acc = plain_sum(s.beta_i);
            for (int i = 0; i < s.m; ++i)
                acc -= (s.n + s.alpha_i[static_cast<std::size_t>(i)]) /
                       s.r_i[static_cast<std::size_t>(i)];
            c.relation(close(acc, s.beta_star),
                       "beta_star must equal sum beta_i - sum (n+alpha_i)/r_i");
        }
        break;
    }
    }
    return c.bad;
}

std::vector<std::string> check_hypotheses(const Scenario& s) {
    std::vector<std::string> bad;
    const TheoremId t = s.theorem;
    auto need = [&](bool ok, const std::string& msg) {
        if (!ok)
            bad.push_back(msg);
    };

    need(s.p >= 2, "p must be a prime >= 2");
    need(s.n >= 1, "n must be >= 1");
    need(s.m >= 1, "m must be >= 1");

    if (t != TheoremId::T42) {
        need(s.q >= 1.0, "q must be >= 1");
        for (double qi : s.q_i)
            need(qi >= 1.0, "each q_i must be >= 1");
    }
    for (double a : s.alpha_i)
        need(a > -s.n, "each alpha_i must exceed -n");

    if (t == TheoremId::T31 || t == TheoremId::T41i || t == TheoremId::T41ii) {
        for (int i = 0; i < s.m && i < static_cast<int>(s.lambda_i.size()); ++i) {
            const double li = s.lambda_i[static_cast<std::size_t>(i)];
            const double qi = i < static_cast<int>(s.q_i.size())
                                  ? s.q_i[static_cast<std::size_t>(i)]
                                  : 1.0;
            need(li > -1.0 / qi && li < 0.0, "each lambda_i must lie in (-1/q_i, 0)");
        }
        need(s.alpha > -s.n, "alpha must exceed -n");
    }
    if (t == TheoremId::T33)
        for (double li : s.ell_i)
            need(li >= 1.0, "each ell_i must be >= 1");
    if (t == TheoremId::T35) {
        for (double li : s.lambda_i)
            need(li > 0.0, "each lambda_i must be positive");
        need(s.alpha > -s.n, "alpha must exceed -n");
    }
    if (t == TheoremId::T34i || t == TheoremId::T34ii) {
        for (double bi : s.beta_i)
            need(bi < 0.0, "each beta_i must be negative");
        for (std::size_t i = 0; i < s.beta_i.size() && i < s.q_i.size(); ++i) {
            const double sign = 1.0 / s.q_i[i] + s.beta_i[i] / s.n;
            if (t == TheoremId::T34i)
                need(sign >= 0.0, "case (i) needs 1/q_i + beta_i/n >= 0 for every i");
            else
                need(sign < 0.0, "case (ii) needs 1/q_i + beta_i/n < 0 for every i");
        }
        need(s.q_star >= 1.0, "q* must be >= 1");
    }
    if (t == TheoremId::T43 || t == TheoremId::Cor44) {
        for (double li : s.lambda_i)
            need(li >= 0.0, "each lambda_i must be >= 0");
        if (t == TheoremId::Cor44)
            for (double li : s.lambda_i)
                need(li == 0.0, "the corollary requires every lambda_i = 0");
        for (double ri : s.r_i)
            need(ri >= 1.0, "each r_i must be >= 1");
        need(s.alpha > -s.n, "alpha must exceed -n");
    }
    if (t == TheoremId::T41i || t == TheoremId::T41ii)
        for (double ri : s.r_i)
            need(ri >= 1.0, "each r_i must be >= 1");

    if (uses_muckenhoupt_weight(t)) {
        const auto cls = classify_power_weight(s.p, s.n, s.weight_alpha, s.zeta);
        need(cls.member, "the weight must lie in the requested Muckenhoupt class");
        need(std::isfinite(cls.reverse_holder_index),
             "the weight must have a finite reverse Hoelder index");
        if (std::isfinite(cls.reverse_holder_index)) {
            const double rw = cls.reverse_holder_index;
            need(s.delta > 1.0 && s.delta < rw, "delta must lie in (1, r_w)");
            if (t == TheoremId::T32) {
                need(s.q_star >= 1.0, "q* must be >= 1");
                need(s.q > s.q_star * s.zeta * rw / (rw - 1.0),
                     "q must exceed q* zeta r_w/(r_w - 1)");
                need(s.lambda_star > -1.0 / s.q_star,
                     "lambda* must exceed -1/q* for the target space");
            }
            if (t == TheoremId::T34i || t == TheoremId::T34ii)
                need(s.q > s.q_star * s.zeta * rw / (rw - 1.0),
                     "q must exceed q* zeta r_w/(r_w - 1)");
            if (t == TheoremId::T42) {
                if (s.q_star_i.size() != static_cast<std::size_t>(s.m) ||
                    s.r_star_i.size() != static_cast<std::size_t>(s.m)) {
                    need(false, "starred exponents must list one value per factor");
                } else {
                    double inv = inv_sum(s.q_star_i) + inv_sum(s.r_star_i);
                    need(1.0 / s.q > inv * s.zeta * rw / (rw - 1.0),
                         "1/q must exceed (sum 1/r*_i + sum 1/q*_i) zeta r_w/(r_w - 1)");
                    for (std::size_t i = 0; i < s.lambda_i.size() && i < s.q_star_i.size(); ++i)
                        need(s.lambda_i[i] > -1.0 / s.q_star_i[i] && s.lambda_i[i] < 0.0,
                             "each lambda_i must lie in (-1/q*_i, 0)");
                    need(s.lambda_star > -1.0 / s.q,
                         "lambda* must exceed -1/q for the target space");
                    need(s.q >= 1.0, "q must be >= 1");
                }
            }
        }
        for (std::size_t i = 0; i < s.lambda_i.size() && t == TheoremId::T32 && i < s.q_i.size();
             ++i)
            need(s.lambda_i[i] > -1.0 / s.q_i[i] && s.lambda_i[i] < 0.0,
                 "each lambda_i must lie in (-1/q_i, 0)");
    }
    return bad;
}

std::vector<std::string> validate_scenario(const Scenario& s) {
    auto bad = check_homogeneity(s);
    auto hyp = check_hypotheses(s);
    bad.insert(bad.end(), hyp.begin(), hyp.end());
    return bad;
}

} // namespace padhaus
