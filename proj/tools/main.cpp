// Command line front end: scenario grids, single norms, operator tables,
// weight classification, and the closed-form constants.

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "padhaus/operators.hpp"
#include "padhaus/run_config.hpp"
#include "padhaus/spaces.hpp"
#include "padhaus/verify.hpp"
#include "padhaus/weights.hpp"

namespace {

using nlohmann::json;
using namespace padhaus;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

std::string fmt(double v) {
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot write '" + path + "'");
    out << text;
}

json parse_params(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaParseError(e.what());
    }
}

double need_number(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number())
        throw SchemaParseError(std::string("params need a numeric '") + key + "'");
    return j[key].get<double>();
}

double opt_number(const json& j, const char* key, double fallback) {
    if (!j.contains(key))
        return fallback;
    if (!j[key].is_number())
        throw SchemaParseError(std::string("'") + key + "' must be a number");
    return j[key].get<double>();
}

std::vector<double> opt_vector(const json& j, const char* key) {
    std::vector<double> out;
    if (!j.contains(key))
        return out;
    for (const auto& v : j[key])
        out.push_back(v.get<double>());
    return out;
}

int cmd_verify(const std::string& config_path, const std::string& format_flag,
               const std::string& out_flag, std::optional<std::uint64_t> seed_flag,
               int parallelism_flag, bool timing_flag) {
    ParseOutcome parsed = parse_config(read_file(config_path));
    if (!parsed.ok()) {
        for (const auto& issue : parsed.issues)
            std::cerr << "config error at " << issue.field << ": " << issue.message << "\n";
        return kExitConfig;
    }
    RunConfig cfg = std::move(*parsed.config);
    if (!format_flag.empty())
        cfg.format = format_flag == "json" ? ReportFormat::Json : ReportFormat::Csv;
    if (!out_flag.empty())
        cfg.out_path = out_flag;
    if (seed_flag)
        cfg.seed = *seed_flag;
    if (parallelism_flag > 0)
        cfg.parallelism = parallelism_flag;
    if (timing_flag)
        cfg.record_timing = true;

    RunOptions opts;
    opts.seed = cfg.seed;
    opts.parallelism = cfg.parallelism;
    opts.window = cfg.window;
    opts.record_timing = cfg.record_timing;
    const auto reports = run_grid(cfg.scenarios, opts);
    write_output(cfg.out_path, emit_report(reports, cfg.format, cfg.seed));

    int failures = 0;
    for (const auto& r : reports) {
        if (r.status != "pass")
            ++failures;
        std::cerr << r.scenario_id << " [" << r.theorem << "] " << r.status;
        if (!r.detail.empty())
            std::cerr << " (" << r.detail << ")";
        std::cerr << "\n";
    }
    std::cerr << reports.size() - failures << "/" << reports.size() << " scenarios passed\n";
    return failures == 0 ? kExitPass : kExitFail;
}

int cmd_constant(const std::string& kind_name, const std::string& params_text) {
    static const std::map<std::string, ConstantKind> kinds = {
        {"C1", ConstantKind::C1},   {"C2", ConstantKind::C2},
        {"C3", ConstantKind::C3},   {"C41", ConstantKind::C41},
        {"C42", ConstantKind::C42}, {"C5", ConstantKind::C5},
        {"C6", ConstantKind::C6},   {"C6star", ConstantKind::C6Star},
        {"C7", ConstantKind::C7},   {"C8", ConstantKind::C8},
        {"C9", ConstantKind::C9},   {"K", ConstantKind::StructuralK},
        {"Ar", ConstantKind::HerzA}};
    const auto it = kinds.find(kind_name);
    if (it == kinds.end()) {
        std::cerr << "unknown constant kind '" << kind_name << "'\n";
        return kExitConfig;
    }
    const json j = parse_params(params_text);
    ConstantParams c;
    c.p = static_cast<int>(need_number(j, "p"));
    c.n = static_cast<int>(opt_number(j, "n", 1));
    c.m = static_cast<int>(opt_number(j, "m", 1));
    c.q = opt_number(j, "q", 1.0);
    c.alpha = opt_number(j, "alpha", 0.0);
    c.lambda = opt_number(j, "lambda", 0.0);
    c.beta = opt_number(j, "beta", 0.0);
    c.ell = opt_number(j, "ell", 1.0);
    c.zeta = opt_number(j, "zeta", 1.0);
    c.delta = opt_number(j, "delta", 2.0);
    c.lambda_star = opt_number(j, "lambda_star", 0.0);
    c.beta_star = opt_number(j, "beta_star", 0.0);
    c.q_i = opt_vector(j, "q_i");
    c.alpha_i = opt_vector(j, "alpha_i");
    c.lambda_i = opt_vector(j, "lambda_i");
    c.ell_i = opt_vector(j, "ell_i");
    c.r = static_cast<int>(opt_number(j, "r", 1));
    if (j.contains("phi"))
        c.phi = parse_phi_json(j["phi"].dump());
    const LogScalar value = theorem_constant(it->second, c);
    std::cout << fmt(value.to_real(c.p)) << "\n";
    return kExitPass;
}

int cmd_norm(const std::string& space, const std::string& params_text) {
    const json j = parse_params(params_text);
    const int p = static_cast<int>(need_number(j, "p"));
    const int n = static_cast<int>(opt_number(j, "n", 1));
    const PowerWeight w{opt_number(j, "alpha", 0.0)};
    Window win;
    if (j.contains("window")) {
        win.lo = static_cast<int>(opt_number(j["window"], "lo", -40));
        win.hi = static_cast<int>(opt_number(j["window"], "hi", 40));
    }
    if (!j.contains("f"))
        throw SchemaParseError("params need an 'f' function descriptor");
    const SeparableFunction f = parse_function_json(j["f"].dump(), p);
    const double q = opt_number(j, "q", 1.0);

    NormResult result;
    if (space == "cmorrey")
        result = central_morrey_norm(p, n, f, q, need_number(j, "lambda"), w, win);
    else if (space == "herz")
        result = herz_norm(p, n, f, q, need_number(j, "beta"), need_number(j, "ell"), w, win);
    else if (space == "dherz")
        result = dot_herz_norm(p, n, f, q, need_number(j, "beta"), need_number(j, "ell"), w, win);
    else if (space == "mherz")
        result = morrey_herz_norm(p, n, f, q, need_number(j, "beta"), need_number(j, "ell"),
                                  need_number(j, "lambda"), w, win);
    else if (space == "cmo")
        result = cmo_norm(p, n, f, q, w, win);
    else {
        std::cerr << "unknown space '" << space << "'\n";
        return kExitConfig;
    }
    std::cout << fmt(result.value.to_real(p))
              << (result.exactness == Exactness::WindowLimited ? " (window-limited)" : "")
              << "\n";
    return kExitPass;
}

int cmd_apply(const std::string& params_text) {
    const json j = parse_params(params_text);
    const int p = static_cast<int>(need_number(j, "p"));
    const int n = static_cast<int>(opt_number(j, "n", 1));
    if (!j.contains("phi") || !j.contains("f") || !j["f"].is_array())
        throw SchemaParseError("params need 'phi' and an array 'f' of function descriptors");
    const PhiKernel phi = parse_phi_json(j["phi"].dump());
    AngularFactor omega = AngularFactor::constant(1.0);
    if (j.contains("omega"))
        omega = parse_angular_json(j["omega"].dump());
    std::vector<SeparableFunction> fs;
    for (const auto& jf : j["f"])
        fs.push_back(parse_function_json(jf.dump(), p));

    ApplyOptions opts;
    const int k_lo = static_cast<int>(opt_number(j, "k_lo", -10));
    const int k_hi = static_cast<int>(opt_number(j, "k_hi", 10));
    opts.grid = {k_lo, k_hi};

    RadialProfile h;
    if (j.contains("b")) {
        std::vector<SeparableFunction> bs;
        for (const auto& jb : j["b"])
            bs.push_back(parse_function_json(jb.dump(), p));
        h = apply_commutator(p, n, phi, omega, bs, fs, opts);
    } else {
        h = apply_hausdorff(p, n, phi, omega, fs, opts);
    }
    std::cout << "k,value\n";
    for (int k = k_lo; k <= k_hi; ++k)
        std::cout << k << ',' << fmt(evaluate_profile(h, k, p).to_real(p)) << "\n";
    if (h.window_truncated)
        std::cerr << "note: values outside the grid were truncated\n";
    return kExitPass;
}

int cmd_classify(const std::string& params_text) {
    const json j = parse_params(params_text);
    const int p = static_cast<int>(need_number(j, "p"));
    const int n = static_cast<int>(opt_number(j, "n", 1));
    const double alpha = need_number(j, "alpha");
    const double ell = need_number(j, "ell");
    const auto cls = classify_power_weight(p, n, alpha, ell);
    std::cout << "member," << (cls.member ? "yes" : "no") << "\n"
              << "locally_integrable," << (cls.locally_integrable ? "yes" : "no") << "\n"
              << "reverse_holder_index," << fmt(cls.reverse_holder_index) << "\n";
    if (cls.member && ell > 1.0)
        std::cout << "characteristic,"
                  << fmt(muckenhoupt_characteristic(p, n, alpha, ell).to_real(p)) << "\n";
    return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"p-adic scale-sum operator laboratory"};
    app.require_subcommand(1);

    std::string config_path, format_flag, out_flag, kind_name, params_text, space;
    std::optional<std::uint64_t> seed_flag;
    int parallelism_flag = 0;
    bool timing_flag = false;

    auto* verify = app.add_subcommand("verify", "run a scenario grid from a config file");
    verify->add_option("--config", config_path, "JSON config path")->required();
    verify->add_option("--format", format_flag, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    verify->add_option("--out", out_flag, "output path (default: from config or stdout)");
    verify->add_option("--seed", seed_flag, "seed override");
    verify->add_option("--parallelism", parallelism_flag, "worker threads");
    verify->add_flag("--timing", timing_flag, "record wall times (breaks byte-identical reruns)");

    auto* constant = app.add_subcommand("constant", "evaluate a closed-form constant");
    constant->add_option("--kind", kind_name, "C1..C9, C41, C42, C6star, K, Ar")->required();
    constant->add_option("--params", params_text, "inline JSON parameters")->required();

    auto* norm = app.add_subcommand("norm", "evaluate one space norm of one function");
    norm->add_option("--space", space, "cmorrey, herz, dherz, mherz, cmo")->required();
    norm->add_option("--params", params_text, "inline JSON parameters")->required();

    auto* apply = app.add_subcommand("apply", "tabulate the operator or commutator output");
    apply->add_option("--params", params_text, "inline JSON parameters")->required();

    auto* classify = app.add_subcommand("classify", "classify a power weight");
    classify->add_option("--params", params_text, "inline JSON parameters")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed())
            return cmd_verify(config_path, format_flag, out_flag, seed_flag, parallelism_flag,
                              timing_flag);
        if (constant->parsed())
            return cmd_constant(kind_name, params_text);
        if (norm->parsed())
            return cmd_norm(space, params_text);
        if (apply->parsed())
            return cmd_apply(params_text);
        if (classify->parsed())
            return cmd_classify(params_text);
    } catch (const SchemaParseError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitConfig;
}
