#include "doctest.h"

#include <limits>

#include "padhaus/run_config.hpp"
#include "test_scenarios.hpp"

using namespace padhaus;

TEST_SUITE_BEGIN("config");

namespace {

const char* kMinimal = R"({
  "scenarios": [
    {
      "id": "t35-demo",
      "theorem": "T35",
      "mode": "sharpness",
      "p": 2, "n": 1, "m": 2,
      "q_i": [3, 6],
      "alpha_i": [0.5, 1.0],
      "beta_i": [0.2, -0.1],
      "ell_i": [2, 2],
      "lambda_i": [0.2, 0.3],
      "phi": {"kind": "dirac", "gamma": 1}
    }
  ]
})";

} // namespace

TEST_CASE("minimal config parses with defaults filled") {
    const auto out = parse_config(kMinimal);
    REQUIRE(out.ok());
    const RunConfig& cfg = *out.config;
    CHECK(cfg.seed == 0);
    CHECK(cfg.format == ReportFormat::Csv);
    CHECK(cfg.parallelism == 1);
    CHECK(cfg.window.lo == -40);
    REQUIRE(cfg.scenarios.size() == 1);
    const Scenario& s = cfg.scenarios.front();
    CHECK(s.id == "t35-demo");
    CHECK(s.q == doctest::Approx(2.0));          // derived from q_i
    CHECK(s.lambda_star == doctest::Approx(0.5));
    CHECK(s.beta == doctest::Approx(0.1));
}

TEST_CASE("hypothesis violations surface as schema issues") {
    std::string text = kMinimal;
    // Turn it into a T31 scenario with an out-of-range lambda_i.
    text.replace(text.find("T35"), 3, "T31");
    text.replace(text.find("[0.2, 0.3]"), 10, "[0.5, 0.3]");
    const auto out = parse_config(text);
    CHECK(!out.ok());
    bool found = false;
    for (const auto& issue : out.issues)
        if (issue.message.find("lambda_i") != std::string::npos)
            found = true;
    CHECK(found);
}

TEST_CASE("inconsistent aggregates surface as schema issues") {
    std::string text = kMinimal;
    text.insert(text.find("\"phi\""), "\"q\": 3.5,\n      ");
    const auto out = parse_config(text);
    CHECK(!out.ok());
    bool found = false;
    for (const auto& issue : out.issues)
        if (issue.message.find("1/q") != std::string::npos)
            found = true;
    CHECK(found);
}

TEST_CASE("unknown fields are named") {
    std::string text = kMinimal;
    text.insert(text.find("\"phi\""), "\"lambda_typo\": 1,\n      ");
    const auto out = parse_config(text);
    CHECK(!out.ok());
    bool found = false;
    for (const auto& issue : out.issues)
        if (issue.field.find("lambda_typo") != std::string::npos &&
            issue.message == "unknown field")
            found = true;
    CHECK(found);
}

TEST_CASE("malformed JSON is reported, not thrown") {
    const auto out = parse_config("{ not json");
    CHECK(!out.ok());
    CHECK(!out.issues.empty());
}

TEST_CASE("serialize and parse round trip") {
    RunConfig cfg;
    cfg.seed = 31337;
    cfg.format = ReportFormat::Json;
    cfg.parallelism = 3;
    cfg.window = {-60, 60};
    cfg.scenarios = {testutil::t31_scenario(), testutil::t42_scenario(),
                     testutil::t43_scenario(true)};
    cfg.scenarios[0].omega = AngularFactor::at_level(1, {1.0});

    const std::string text = serialize_config(cfg);
    const auto out = parse_config(text);
    REQUIRE(out.ok());
    CHECK(serialize_config(*out.config) == text);
    CHECK(out.config->seed == cfg.seed);
    CHECK(out.config->scenarios.size() == cfg.scenarios.size());
}

TEST_CASE("report emission") {
    CHECK(emit_report({}, ReportFormat::Csv, 9) ==
          "scenario_id,theorem,lhs,rhs,rel_err_or_constant,status,seed,wall_ms\n");

    VerificationReport pass;
    pass.scenario_id = "a";
    pass.theorem = "T35";
    pass.lhs = 1.25;
    pass.rhs = 1.25;
    pass.metric = 1e-12;
    pass.status = "pass";
    VerificationReport div;
    div.scenario_id = "b";
    div.theorem = "T31";
    div.lhs = std::numeric_limits<double>::infinity();
    div.rhs = std::numeric_limits<double>::infinity();
    div.status = "diverges";
    const std::vector<VerificationReport> reports{pass, div};

    const std::string csv = emit_report(reports, ReportFormat::Csv, 9);
    CHECK(csv.find("a,T35,1.25,1.25,1e-12,pass,9,0\n") != std::string::npos);
    CHECK(csv.find("b,T31,inf,inf,0,diverges,9,0\n") != std::string::npos);

    const std::string json = emit_report(reports, ReportFormat::Json, 9);
    CHECK(json.find("\"status\": \"pass\"") != std::string::npos);
    CHECK(json.find("\"lhs\": \"inf\"") != std::string::npos);
}

TEST_CASE("identical configs and seeds give byte-identical reports") {
    Scenario s = testutil::t32_scenario();
    s.mode = ScenarioMode::Sufficiency;
    s.draws = 20;
    RunOptions opts;
    opts.seed = 5150;
    const auto r1 = run_grid({&s, 1}, opts);
    const auto r2 = run_grid({&s, 1}, opts);
    CHECK(emit_report(r1, ReportFormat::Csv, opts.seed) ==
          emit_report(r2, ReportFormat::Csv, opts.seed));
    CHECK(emit_report(r1, ReportFormat::Json, opts.seed) ==
          emit_report(r2, ReportFormat::Json, opts.seed));
}

TEST_CASE("descriptor snippets parse") {
    const auto f = parse_function_json(
        R"({"radial": {"kind": "power_law", "s": -0.25},
            "angular": {"kind": "level", "level": 1, "values": [1.0, -1.0]}})",
        3);
    CHECK(f.radial.kind == RadialProfile::Kind::PowerLaw);
    CHECK(f.angular.level() == 1);

    const auto w = parse_function_json(
        R"({"radial": {"kind": "finite_window", "lo": -2, "values": [1.0, 0.5, 0.25]}})", 2);
    CHECK(w.radial.lo == -2);
    CHECK(w.radial.hi == 0);
    CHECK(evaluate_profile(w.radial, -1, 2).to_real(2) == doctest::Approx(0.5));

    const auto phi = parse_phi_json(R"({"kind": "finite_support", "values": {"-1": 0.5, "2": 1}})");
    CHECK(phi.support.at(-1) == doctest::Approx(0.5));
    CHECK(phi.support.at(2) == doctest::Approx(1.0));

    CHECK_THROWS_AS(parse_phi_json(R"({"kind": "nope"})"), SchemaParseError);
    CHECK_THROWS_AS(parse_profile_json(R"({"kind": "finite_window", "lo": 0, "values": []})", 2),
                    SchemaParseError);
}

TEST_SUITE_END();
