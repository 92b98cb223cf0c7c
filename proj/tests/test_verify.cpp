#include "doctest.h"

#include <cmath>

#include "padhaus/operators.hpp"
#include "padhaus/verify.hpp"
#include "test_scenarios.hpp"

using namespace padhaus;

TEST_SUITE_BEGIN("verify");

namespace {

RunOptions quick_opts() {
    RunOptions o;
    o.seed = 42;
    return o;
}

} // namespace

TEST_CASE("homogeneity: single-factor identities are trivially satisfied") {
    Scenario s;
    s.id = "m1";
    s.theorem = TheoremId::T31;
    s.p = 2;
    s.n = 1;
    s.m = 1;
    s.q_i = {2.0};
    s.alpha_i = {0.5};
    s.lambda_i = {-0.25};
    s.q = 2.0;
    s.alpha = 0.5;
    s.lambda = -0.25;
    s.phi = PhiKernel::dirac(0);
    CHECK(check_homogeneity(s).empty());
    CHECK(check_hypotheses(s).empty());
}

TEST_CASE("homogeneity: constructed violations are flagged") {
    Scenario s = testutil::t31_scenario();
    CHECK(check_homogeneity(s).empty());
    s.lambda += 0.1;
    const auto bad = check_homogeneity(s);
    REQUIRE(!bad.empty());
    CHECK(bad.front().find("lambda") != std::string::npos);

    Scenario t = testutil::t43_scenario();
    CHECK(check_homogeneity(t).empty());
    t.beta_star += 0.1;
    const auto bad2 = check_homogeneity(t);
    REQUIRE(!bad2.empty());
    CHECK(bad2.front().find("beta_star") != std::string::npos);
}

TEST_CASE("every sharpness scenario rejects a 1e-3 parameter nudge") {
    for (Scenario s : {testutil::t31_scenario(), testutil::t33_scenario(),
                       testutil::t35_scenario(), testutil::t41_scenario(true)}) {
        CHECK(check_homogeneity(s).empty());
        Scenario nudged = s;
        nudged.q += 1e-3;
        CHECK(!check_homogeneity(nudged).empty());
    }
}

TEST_CASE("sharpness T31 across factor counts and angular data") {
    // m = 2, constant angular factor.
    auto rep = verify_sharpness(testutil::t31_scenario(), quick_opts());
    CHECK(rep.status == "pass");
    CHECK(rep.metric <= 1e-10);

    // m = 1 single factor.
    Scenario s1;
    s1.id = "t31-m1";
    s1.theorem = TheoremId::T31;
    s1.p = 3;
    s1.n = 2;
    s1.m = 1;
    s1.q_i = {2.0};
    s1.alpha_i = {-0.5};
    s1.lambda_i = {-0.2};
    s1.phi = PhiKernel::finite({{0, 1.0}, {3, 2.0}});
    rep = verify_sharpness(s1.derived(), quick_opts());
    CHECK(rep.status == "pass");

    // m = 3 with a signed level-1 angular factor (p = 3 has two cosets).
    Scenario s3;
    s3.id = "t31-m3";
    s3.theorem = TheoremId::T31;
    s3.p = 3;
    s3.n = 1;
    s3.m = 3;
    s3.q_i = {3.0, 6.0, 6.0};
    s3.alpha_i = {0.0, 0.5, 1.0};
    s3.lambda_i = {-0.15, -0.1, -0.05};
    s3.omega = AngularFactor::at_level(1, {1.0, -0.25});
    s3.phi = PhiKernel::finite({{-2, 0.3}, {1, 1.2}});
    rep = verify_sharpness(s3.derived(), quick_opts());
    CHECK(rep.status == "pass");
    CHECK(rep.metric <= 1e-10);
}

TEST_CASE("sharpness T31 with a zero kernel passes with both sides zero") {
    Scenario s = testutil::t31_scenario();
    s.phi = PhiKernel::finite({});
    const auto rep = verify_sharpness(s, quick_opts());
    CHECK(rep.status == "pass");
    CHECK(rep.lhs == 0.0);
    CHECK(rep.rhs == 0.0);
}

TEST_CASE("sharpness T33") {
    const auto rep = verify_sharpness(testutil::t33_scenario(), quick_opts());
    CHECK(rep.status == "pass");
    CHECK(rep.metric <= 1e-12);
    CHECK(rep.lhs >= rep.rhs * (1.0 - 1e-10)); // ratio dominates the bound
}

TEST_CASE("sharpness T35 including a single-scale kernel") {
    const auto rep = verify_sharpness(testutil::t35_scenario(), quick_opts());
    CHECK(rep.status == "pass");
    CHECK(rep.metric <= 1e-10);

    Scenario wide = testutil::t35_scenario();
    wide.id = "t35-wide";
    wide.phi = PhiKernel::finite({{-2, 0.5}, {0, 1.0}, {3, 0.125}});
    CHECK(verify_sharpness(wide, quick_opts()).status == "pass");
}

TEST_CASE("sharpness T41ii including sign cancellation") {
    auto rep = verify_sharpness(testutil::t41_scenario(true), quick_opts());
    CHECK(rep.status == "pass");

    // gamma = 0 only: the moment factor kills everything.
    Scenario zero = testutil::t41_scenario(true);
    zero.phi = PhiKernel::dirac(0);
    rep = verify_sharpness(zero, quick_opts());
    CHECK(rep.status == "pass");
    CHECK(rep.lhs == 0.0);

    // Kernel living on both signs of gamma, tuned to cancel the signed sum
    // exactly for odd m... here m = 2 keeps it positive, so instead check a
    // two-sided kernel evaluates cleanly.
    Scenario both = testutil::t41_scenario(true);
    both.id = "t41ii-two-sided";
    both.phi = PhiKernel::finite({{-1, 0.5}, {1, 0.5}, {2, 0.125}});
    rep = verify_sharpness(both, quick_opts());
    CHECK(rep.status == "pass");
}

TEST_CASE("sufficiency T31 has zero violations") {
    Scenario s = testutil::t31_scenario();
    s.mode = ScenarioMode::Sufficiency;
    s.draws = 40;
    const auto rep = verify_sufficiency(s, quick_opts());
    CHECK(rep.status == "pass");
    CHECK(rep.lhs <= 1.0);
    CHECK(rep.lhs > 0.0);
}

TEST_CASE("sufficiency fitted constants are stable per theorem") {
    for (Scenario s :
         {testutil::t32_scenario(), testutil::t33_scenario(), testutil::t34_scenario(false),
          testutil::t34_scenario(true), testutil::t35_scenario(), testutil::t41_scenario(false),
          testutil::t42_scenario(), testutil::t43_scenario(false), testutil::t43_scenario(true)}) {
        s.mode = ScenarioMode::Sufficiency;
        s.draws = 40;
        const auto rep = verify_sufficiency(s, quick_opts());
        CAPTURE(s.id);
        CAPTURE(rep.detail);
        CHECK(rep.status == "pass");
        CHECK(rep.metric <= 10.0);
    }
}

TEST_CASE("sharpness reports are seed independent") {
    RunOptions a = quick_opts();
    RunOptions b = quick_opts();
    b.seed = 777;
    const auto ra = verify_sharpness(testutil::t31_scenario(), a);
    const auto rb = verify_sharpness(testutil::t31_scenario(), b);
    CHECK(ra.lhs == rb.lhs);
    CHECK(ra.rhs == rb.rhs);
    CHECK(ra.metric == rb.metric);
}

TEST_CASE("sufficiency batches are reproducible from the seed") {
    Scenario s = testutil::t32_scenario();
    s.draws = 25;
    const auto r1 = verify_sufficiency(s, quick_opts());
    const auto r2 = verify_sufficiency(s, quick_opts());
    CHECK(r1.lhs == r2.lhs);
    CHECK(r1.rhs == r2.rhs);
    RunOptions other = quick_opts();
    other.seed = 1234;
    const auto r3 = verify_sufficiency(s, other);
    // Different seed, different draws; the fit moves but stays stable.
    CHECK(r3.status == "pass");
}

TEST_CASE("extremal ratio sits under the sufficiency bound") {
    const Scenario s = testutil::t31_scenario();
    const auto sharp = verify_sharpness(s, quick_opts());
    REQUIRE(sharp.status == "pass");

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
    cp.phi = s.phi;
    const double upper = std::pow(1.0 - std::pow(s.p, -s.n), 1.0 / s.q) *
                         theorem_constant(ConstantKind::StructuralK, cp).to_real(s.p) *
                         theorem_constant(ConstantKind::C1, cp).to_real(s.p) *
                         angular_norm(s.p, s.n, s.omega, s.q / (s.q - 1.0)).to_real(s.p);
    CHECK(sharp.lhs <= upper * (1 + 1e-12));
    CHECK(sharp.lhs > 0.97 * upper); // the extremal family nearly attains it
    CHECK(sharp.lhs > 0.0);
}

TEST_CASE("grid runs are ordered, contained, and parallel safe") {
    CHECK(run_grid({}, quick_opts()).empty());

    std::vector<Scenario> grid;
    grid.push_back(testutil::t35_scenario());
    Scenario divergent = testutil::t31_scenario();
    divergent.id = "t31-divergent";
    divergent.phi = PhiKernel::power_decay(1.0, 0.05); // decays too slowly
    grid.push_back(divergent);
    Scenario broken = testutil::t31_scenario();
    broken.id = "t31-broken";
    broken.lambda += 0.25; // violates the scaling relation
    grid.push_back(broken);
    Scenario quick = testutil::t33_scenario();
    quick.id = "t33-b";
    grid.push_back(quick);

    const auto reports = run_grid(grid, quick_opts());
    REQUIRE(reports.size() == 4);
    CHECK(reports[0].scenario_id == "t35");
    CHECK(reports[0].status == "pass");
    CHECK(reports[1].scenario_id == "t31-divergent");
    CHECK(reports[1].status == "diverges");
    CHECK(reports[2].scenario_id == "t31-broken");
    CHECK(reports[2].status == "error");
    CHECK(reports[3].status == "pass");

    RunOptions par = quick_opts();
    par.parallelism = 4;
    const auto parallel = run_grid(grid, par);
    REQUIRE(parallel.size() == reports.size());
    for (std::size_t i = 0; i < reports.size(); ++i) {
        CHECK(parallel[i].scenario_id == reports[i].scenario_id);
        CHECK(parallel[i].status == reports[i].status);
        CHECK(parallel[i].lhs == reports[i].lhs);
    }
}

TEST_SUITE_END();
