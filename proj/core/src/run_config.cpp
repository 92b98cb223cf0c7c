#include "padhaus/run_config.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace padhaus {

namespace {

using nlohmann::json;

std::string fmt_double(double v) {
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

struct Collector {
    std::vector<SchemaIssue>& issues;
    std::string path;

    Collector sub(const std::string& key) const { return {issues, path + "/" + key}; }
    void fail(const std::string& message) const { issues.push_back({path, message}); }
};

void check_keys(const json& obj, std::initializer_list<const char*> allowed, Collector c) {
    for (const auto& [key, value] : obj.items()) {
        bool ok = false;
        for (const char* a : allowed)
            if (key == a) {
                ok = true;
                break;
            }
        if (!ok)
            c.sub(key).fail("unknown field");
    }
}

std::optional<double> get_number(const json& obj, const char* key, Collector c) {
    if (!obj.contains(key))
        return std::nullopt;
    if (!obj[key].is_number()) {
        c.sub(key).fail("expected a number");
        return std::nullopt;
    }
    return obj[key].get<double>();
}

std::optional<std::vector<double>> get_array(const json& obj, const char* key, Collector c) {
    if (!obj.contains(key))
        return std::nullopt;
    if (!obj[key].is_array()) {
        c.sub(key).fail("expected an array of numbers");
        return std::nullopt;
    }
    std::vector<double> out;
    for (const auto& v : obj[key]) {
        if (!v.is_number()) {
            c.sub(key).fail("expected an array of numbers");
            return std::nullopt;
        }
        out.push_back(v.get<double>());
    }
    return out;
}

RadialProfile profile_from_json(const json& j, int p, Collector c) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
        c.fail("profile needs a string 'kind'");
        return RadialProfile::power_law(0.0);
    }
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "finite_window") {
        check_keys(j, {"kind", "lo", "values"}, c);
        const auto lo = get_number(j, "lo", c);
        const auto vals = get_array(j, "values", c);
        if (!lo || !vals || vals->empty()) {
            c.fail("finite_window needs 'lo' and nonempty 'values'");
            return RadialProfile::power_law(0.0);
        }
        std::vector<LogScalar> v;
        for (double x : *vals)
            v.push_back(LogScalar::from_real(x, p));
        const int l = static_cast<int>(*lo);
        const int h = l + static_cast<int>(v.size()) - 1;
        return RadialProfile::finite_window(l, h, std::move(v));
    }
    if (kind == "power_law") {
        check_keys(j, {"kind", "s"}, c);
        const auto s = get_number(j, "s", c);
        if (!s) {
            c.fail("power_law needs 's'");
            return RadialProfile::power_law(0.0);
        }
        return RadialProfile::power_law(*s);
    }
    if (kind == "power_law_truncated") {
        check_keys(j, {"kind", "s", "cutoff"}, c);
        const auto s = get_number(j, "s", c);
        const auto cut = get_number(j, "cutoff", c);
        if (!s) {
            c.fail("power_law_truncated needs 's'");
            return RadialProfile::power_law(0.0);
        }
        return RadialProfile::power_law_truncated(*s, cut ? static_cast<int>(*cut) : 0);
    }
    if (kind == "log_scale") {
        check_keys(j, {"kind"}, c);
        return RadialProfile::log_scale();
    }
    if (kind == "constant") {
        check_keys(j, {"kind", "value"}, c);
        const auto v = get_number(j, "value", c);
        return RadialProfile::constant(v.value_or(1.0), p);
    }
    c.sub("kind").fail("unknown profile kind '" + kind + "'");
    return RadialProfile::power_law(0.0);
}

AngularFactor angular_from_json(const json& j, Collector c) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
        c.fail("angular factor needs a string 'kind'");
        return AngularFactor::constant(1.0);
    }
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "constant") {
        check_keys(j, {"kind", "value"}, c);
        const auto v = get_number(j, "value", c);
        return AngularFactor::constant(v.value_or(1.0));
    }
    if (kind == "level") {
        check_keys(j, {"kind", "level", "values"}, c);
        const auto level = get_number(j, "level", c);
        const auto vals = get_array(j, "values", c);
        if (!level || !vals) {
            c.fail("level factor needs 'level' and 'values'");
            return AngularFactor::constant(1.0);
        }
        return AngularFactor::at_level(static_cast<int>(*level), *vals);
    }
    c.sub("kind").fail("unknown angular kind '" + kind + "'");
    return AngularFactor::constant(1.0);
}

PhiKernel phi_from_json(const json& j, Collector c) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
        c.fail("kernel needs a string 'kind'");
        return PhiKernel::finite({});
    }
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "finite_support") {
        check_keys(j, {"kind", "values"}, c);
        if (!j.contains("values") || !j["values"].is_object()) {
            c.sub("values").fail("expected an object of gamma -> value");
            return PhiKernel::finite({});
        }
        std::map<int, double> vals;
        for (const auto& [key, value] : j["values"].items()) {
            if (!value.is_number() || value.get<double>() < 0.0) {
                c.sub("values").sub(key).fail("kernel values must be nonnegative numbers");
                continue;
            }
            try {
                vals[std::stoi(key)] = value.get<double>();
            } catch (...) {
                c.sub("values").sub(key).fail("keys must be integer scale indices");
            }
        }
        return PhiKernel::finite(std::move(vals));
    }
    if (kind == "dirac") {
        check_keys(j, {"kind", "gamma", "value"}, c);
        const auto g = get_number(j, "gamma", c);
        const auto v = get_number(j, "value", c);
        return PhiKernel::dirac(g ? static_cast<int>(*g) : 0, v.value_or(1.0));
    }
    if (kind == "power_decay") {
        check_keys(j, {"kind", "scale", "decay"}, c);
        const auto sc = get_number(j, "scale", c);
        const auto de = get_number(j, "decay", c);
        if (!de || !(*de > 0.0)) {
            c.sub("decay").fail("power_decay needs decay > 0");
            return PhiKernel::finite({});
        }
        return PhiKernel::power_decay(sc.value_or(1.0), *de);
    }
    c.sub("kind").fail("unknown kernel kind '" + kind + "'");
    return PhiKernel::finite({});
}

Scenario scenario_from_json(const json& j, Collector c) {
    Scenario s;
    check_keys(j,
               {"id",        "theorem",   "mode",        "p",         "n",
                "m",         "q_i",       "alpha_i",     "lambda_i",  "beta_i",
                "ell_i",     "r_i",       "q_star_i",    "r_star_i",  "q",
                "alpha",     "beta",      "ell",         "lambda",    "q_star",
                "lambda_star", "beta_star", "zeta",      "delta",     "weight_alpha",
                "phi",       "omega",     "draws",       "profile_span",
                "max_window_len", "max_angular_level"},
               c);
    if (j.contains("id") && j["id"].is_string())
        s.id = j["id"].get<std::string>();
    else
        c.sub("id").fail("scenario needs a string id");
    if (j.contains("theorem") && j["theorem"].is_string()) {
        const auto t = theorem_from_name(j["theorem"].get<std::string>());
        if (t)
            s.theorem = *t;
        else
            c.sub("theorem").fail("unknown theorem id");
    } else {
        c.sub("theorem").fail("scenario needs a theorem id");
    }
    if (j.contains("mode")) {
        const std::string m = j["mode"].is_string() ? j["mode"].get<std::string>() : "";
        if (m == "sharpness")
            s.mode = ScenarioMode::Sharpness;
        else if (m == "sufficiency")
            s.mode = ScenarioMode::Sufficiency;
        else
            c.sub("mode").fail("mode must be 'sharpness' or 'sufficiency'");
    }

    auto set_int = [&](const char* key, int& out) {
        if (const auto v = get_number(j, key, c))
            out = static_cast<int>(*v);
    };
    auto set_double = [&](const char* key, double& out) {
        if (const auto v = get_number(j, key, c))
            out = *v;
    };
    auto set_vec = [&](const char* key, std::vector<double>& out) {
        if (const auto v = get_array(j, key, c))
            out = *v;
    };
    set_int("p", s.p);
    set_int("n", s.n);
    set_int("m", s.m);
    set_vec("q_i", s.q_i);
    set_vec("alpha_i", s.alpha_i);
    set_vec("lambda_i", s.lambda_i);
    set_vec("beta_i", s.beta_i);
    set_vec("ell_i", s.ell_i);
    set_vec("r_i", s.r_i);
    set_vec("q_star_i", s.q_star_i);
    set_vec("r_star_i", s.r_star_i);
    set_double("q", s.q);
    set_double("alpha", s.alpha);
    set_double("beta", s.beta);
    set_double("ell", s.ell);
    set_double("lambda", s.lambda);
    set_double("q_star", s.q_star);
    set_double("lambda_star", s.lambda_star);
    set_double("beta_star", s.beta_star);
    set_double("zeta", s.zeta);
    set_double("delta", s.delta);
    set_double("weight_alpha", s.weight_alpha);
    set_int("draws", s.draws);
    set_int("profile_span", s.profile_span);
    set_int("max_window_len", s.max_window_len);
    set_int("max_angular_level", s.max_angular_level);
    if (j.contains("phi"))
        s.phi = phi_from_json(j["phi"], c.sub("phi"));
    else
        c.sub("phi").fail("scenario needs a kernel");
    if (j.contains("omega"))
        s.omega = angular_from_json(j["omega"], c.sub("omega"));
    return s;
}

json angular_to_json(const AngularFactor& a) {
    json j;
    if (a.is_constant()) {
        j["kind"] = "constant";
        j["value"] = a.constant_value();
    } else {
        j["kind"] = "level";
        j["level"] = a.level();
        j["values"] = a.values();
    }
    return j;
}

json phi_to_json(const PhiKernel& k) {
    json j;
    if (k.kind == PhiKernel::Kind::FiniteSupport) {
        j["kind"] = "finite_support";
        json vals = json::object();
        for (const auto& [g, v] : k.support)
            vals[std::to_string(g)] = v;
        j["values"] = vals;
    } else {
        j["kind"] = "power_decay";
        j["scale"] = k.scale;
        j["decay"] = k.decay;
    }
    return j;
}

json scenario_to_json(const Scenario& s) {
    json j;
    j["id"] = s.id;
    j["theorem"] = theorem_name(s.theorem);
    j["mode"] = s.mode == ScenarioMode::Sharpness ? "sharpness" : "sufficiency";
    j["p"] = s.p;
    j["n"] = s.n;
    j["m"] = s.m;
    auto put_vec = [&](const char* key, const std::vector<double>& v) {
        if (!v.empty())
            j[key] = v;
    };
    put_vec("q_i", s.q_i);
    put_vec("alpha_i", s.alpha_i);
    put_vec("lambda_i", s.lambda_i);
    put_vec("beta_i", s.beta_i);
    put_vec("ell_i", s.ell_i);
    put_vec("r_i", s.r_i);
    put_vec("q_star_i", s.q_star_i);
    put_vec("r_star_i", s.r_star_i);
    j["q"] = s.q;
    j["alpha"] = s.alpha;
    j["beta"] = s.beta;
    j["ell"] = s.ell;
    j["lambda"] = s.lambda;
    j["q_star"] = s.q_star;
    j["lambda_star"] = s.lambda_star;
    j["beta_star"] = s.beta_star;
    j["zeta"] = s.zeta;
    j["delta"] = s.delta;
    j["weight_alpha"] = s.weight_alpha;
    j["phi"] = phi_to_json(s.phi);
    j["omega"] = angular_to_json(s.omega);
    j["draws"] = s.draws;
    j["profile_span"] = s.profile_span;
    j["max_window_len"] = s.max_window_len;
    j["max_angular_level"] = s.max_angular_level;
    return j;
}

} // namespace

ParseOutcome parse_config(const std::string& text) {
    ParseOutcome out;
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        out.issues.push_back({"$", e.what()});
        return out;
    }
    Collector c{out.issues, "$"};
    if (!root.is_object()) {
        c.fail("config must be a JSON object");
        return out;
    }
    check_keys(root, {"seed", "out", "format", "parallelism", "window", "timing", "scenarios"}, c);

    RunConfig cfg;
    if (root.contains("seed")) {
        if (root["seed"].is_number_unsigned() || root["seed"].is_number_integer())
            cfg.seed = root["seed"].get<std::uint64_t>();
        else
            c.sub("seed").fail("seed must be an unsigned integer");
    }
    if (root.contains("out")) {
        if (root["out"].is_string())
            cfg.out_path = root["out"].get<std::string>();
        else
            c.sub("out").fail("out must be a string path");
    }
    if (root.contains("format")) {
        const std::string f = root["format"].is_string() ? root["format"].get<std::string>() : "";
        if (f == "csv")
            cfg.format = ReportFormat::Csv;
        else if (f == "json")
            cfg.format = ReportFormat::Json;
        else
            c.sub("format").fail("format must be 'csv' or 'json'");
    }
    if (root.contains("parallelism")) {
        if (root["parallelism"].is_number_integer() && root["parallelism"].get<int>() >= 1)
            cfg.parallelism = root["parallelism"].get<int>();
        else
            c.sub("parallelism").fail("parallelism must be a positive integer");
    }
    if (root.contains("timing")) {
        if (root["timing"].is_boolean())
            cfg.record_timing = root["timing"].get<bool>();
        else
            c.sub("timing").fail("timing must be a boolean");
    }
    if (root.contains("window")) {
        const auto& w = root["window"];
        Collector cw = c.sub("window");
        if (!w.is_object()) {
            cw.fail("window must be an object with lo/hi");
        } else {
            check_keys(w, {"lo", "hi"}, cw);
            const auto lo = get_number(w, "lo", cw);
            const auto hi = get_number(w, "hi", cw);
            if (lo)
                cfg.window.lo = static_cast<int>(*lo);
            if (hi)
                cfg.window.hi = static_cast<int>(*hi);
            if (cfg.window.lo < -200 || cfg.window.hi > 200 || cfg.window.lo > cfg.window.hi)
                cw.fail("window overrides must satisfy -200 <= lo <= hi <= 200");
        }
    }
    if (!root.contains("scenarios") || !root["scenarios"].is_array()) {
        c.sub("scenarios").fail("config needs a scenario array");
        return out;
    }
    std::size_t idx = 0;
    for (const auto& js : root["scenarios"]) {
        Collector cs = c.sub("scenarios").sub(std::to_string(idx));
        Scenario s = scenario_from_json(js, cs).derived();
        for (const auto& msg : validate_scenario(s))
            cs.fail(msg);
        cfg.scenarios.push_back(std::move(s));
        ++idx;
    }
    if (!out.issues.empty())
        return out;
    out.config = std::move(cfg);
    return out;
}

std::string serialize_config(const RunConfig& cfg) {
    json root;
    root["seed"] = cfg.seed;
    if (!cfg.out_path.empty())
        root["out"] = cfg.out_path;
    root["format"] = cfg.format == ReportFormat::Csv ? "csv" : "json";
    root["parallelism"] = cfg.parallelism;
    root["timing"] = cfg.record_timing;
    root["window"] = {{"lo", cfg.window.lo}, {"hi", cfg.window.hi}};
    root["scenarios"] = json::array();
    for (const auto& s : cfg.scenarios)
        root["scenarios"].push_back(scenario_to_json(s));
    return root.dump(2) + "\n";
}

std::string emit_report(std::span<const VerificationReport> reports, ReportFormat format,
                        std::uint64_t seed) {
    if (format == ReportFormat::Csv) {
        std::ostringstream os;
        os << "scenario_id,theorem,lhs,rhs,rel_err_or_constant,status,seed,wall_ms\n";
        for (const auto& r : reports) {
            os << r.scenario_id << ',' << r.theorem << ',' << fmt_double(r.lhs) << ','
               << fmt_double(r.rhs) << ',' << fmt_double(r.metric) << ',' << r.status << ','
               << seed << ',' << fmt_double(r.wall_ms) << '\n';
        }
        return os.str();
    }
    json arr = json::array();
    for (const auto& r : reports) {
        json j;
        j["scenario_id"] = r.scenario_id;
        j["theorem"] = r.theorem;
        j["lhs"] = fmt_double(r.lhs);
        j["rhs"] = fmt_double(r.rhs);
        j["rel_err_or_constant"] = fmt_double(r.metric);
        j["status"] = r.status;
        if (!r.detail.empty())
            j["detail"] = r.detail;
        j["seed"] = seed;
        j["wall_ms"] = fmt_double(r.wall_ms);
        arr.push_back(j);
    }
    return arr.dump(2) + "\n";
}

RadialProfile parse_profile_json(const std::string& text, int p) {
    std::vector<SchemaIssue> issues;
    Collector c{issues, "$"};
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaParseError(e.what());
    }
    RadialProfile f = profile_from_json(j, p, c);
    if (!issues.empty())
        throw SchemaParseError(issues.front().field + ": " + issues.front().message);
    return f;
}

AngularFactor parse_angular_json(const std::string& text) {
    std::vector<SchemaIssue> issues;
    Collector c{issues, "$"};
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaParseError(e.what());
    }
    AngularFactor a = angular_from_json(j, c);
    if (!issues.empty())
        throw SchemaParseError(issues.front().field + ": " + issues.front().message);
    return a;
}

SeparableFunction parse_function_json(const std::string& text, int p) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaParseError(e.what());
    }
    std::vector<SchemaIssue> issues;
    Collector c{issues, "$"};
    if (!j.is_object() || !j.contains("radial"))
        throw SchemaParseError("function descriptor needs a 'radial' profile");
    SeparableFunction f{profile_from_json(j["radial"], p, c.sub("radial")),
                        AngularFactor::constant(1.0)};
    if (j.contains("angular"))
        f.angular = angular_from_json(j["angular"], c.sub("angular"));
    if (!issues.empty())
        throw SchemaParseError(issues.front().field + ": " + issues.front().message);
    return f;
}

PhiKernel parse_phi_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaParseError(e.what());
    }
    std::vector<SchemaIssue> issues;
    Collector c{issues, "$"};
    PhiKernel k = phi_from_json(j, c);
    if (!issues.empty())
        throw SchemaParseError(issues.front().field + ": " + issues.front().message);
    return k;
}

} // namespace padhaus
