// Command-line front end: factor, unwind, sweep, m0-scan, compare-taylor,
// verify, trace. Exit codes: 0 success, 1 invariant failure, 2 input error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "unwinding/errors.hpp"
#include "unwinding/json_io.hpp"
#include "unwinding/metrics.hpp"
#include "unwinding/roots.hpp"
#include "unwinding/sweep.hpp"
#include "unwinding/unwind.hpp"
#include "unwinding/verify.hpp"

namespace {

using namespace unwinding;

constexpr int kExitOk = 0;
constexpr int kExitInvariantFailure = 1;
constexpr int kExitInputError = 2;

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw Error("cannot open " + out_path + " for writing");
    out << text;
}

RadiusSchedule parse_schedule(const std::string& spec) {
    if (spec == "c615") return RadiusSchedule::contraction_615();
    if (spec == "ostrowski") return RadiusSchedule::ostrowski();
    const auto colon = spec.find(':');
    if (colon != std::string::npos) {
        const std::string kind = spec.substr(0, colon);
        const double value = std::stod(spec.substr(colon + 1));
        if (kind == "fixed") return RadiusSchedule::fixed(value);
        if (kind == "minimal") return RadiusSchedule::minimal_capture(value);
    }
    throw Error("unknown schedule '" + spec +
                "' (expected fixed:R, minimal:M, c615 or ostrowski)");
}

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(std::stoi(item));
    }
    if (out.empty()) throw Error("empty integer list");
    return out;
}

SweepConfig load_sweep_config(const std::string& path) {
    SweepConfig cfg = sweep_config_from_json(read_json_file(path));
    if (const char* env = std::getenv("UNWIND_SEED")) {
        cfg.master_seed = std::strtoull(env, nullptr, 10);
    }
    return cfg;
}

int run(int argc, char** argv) {
    CLI::App app{"iterative variable-radius Blaschke factorization toolkit"};
    app.require_subcommand(1);

    std::string poly_path, out_path, config_path, schedule_spec = "fixed:1",
                                                  n_list_csv = "2,10,50,100,500",
                                                  filter;
    double radius = 1.0, tol = 1e-6;
    int max_terms = 0, samples = 1024;

    auto* factor = app.add_subcommand("factor", "factor a polynomial at one radius");
    factor->add_option("poly", poly_path, "polynomial JSON file")->required();
    factor->add_option("--radius", radius, "factorization radius")->required();
    factor->add_option("--out", out_path, "output path (stdout when omitted)");

    auto* unwind_cmd = app.add_subcommand("unwind", "build the unwinding series");
    unwind_cmd->add_option("poly", poly_path, "polynomial JSON file")->required();
    unwind_cmd->add_option("--schedule", schedule_spec,
                           "fixed:R | minimal:M | c615 | ostrowski");
    unwind_cmd->add_option("--max-terms", max_terms,
                           "term cap (defaults to the degree)");
    unwind_cmd->add_option("--out", out_path, "output path (stdout when omitted)");

    auto* sweep_cmd = app.add_subcommand("sweep", "random-polynomial error sweep");
    sweep_cmd->add_option("--config", config_path, "sweep config JSON")->required();
    sweep_cmd->add_option("--out", out_path, "CSV output path")->required();

    auto* m0_cmd = app.add_subcommand("m0-scan", "equality thresholds for (z-m)^n");
    m0_cmd->add_option("--n", n_list_csv, "comma-separated degrees");
    m0_cmd->add_option("--tol", tol, "bisection tolerance");
    m0_cmd->add_option("--out", out_path, "output path (stdout when omitted)");

    auto* taylor_cmd =
        app.add_subcommand("compare-taylor", "same sweep with the power-series baseline");
    taylor_cmd->add_option("--config", config_path, "sweep config JSON")->required();
    taylor_cmd->add_option("--out", out_path, "CSV output path (stdout when omitted)");

    auto* verify_cmd = app.add_subcommand("verify", "run the invariant suites");
    verify_cmd->add_option("--filter", filter, "run only suites whose name contains this");

    auto* trace_cmd = app.add_subcommand("trace", "boundary trace CSV for plotting");
    trace_cmd->add_option("poly", poly_path, "polynomial JSON file")->required();
    trace_cmd->add_option("--radius", radius, "circle radius")->required();
    trace_cmd->add_option("--samples", samples, "number of samples");
    trace_cmd->add_option("--out", out_path, "output path (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    if (factor->parsed()) {
        const Polynomial p = polynomial_from_json(read_json_file(poly_path));
        const Factorization f = factorize(find_roots(p), radius);
        write_output(to_json(f).dump(2) + "\n", out_path);
        return kExitOk;
    }

    if (unwind_cmd->parsed()) {
        const Polynomial p = polynomial_from_json(read_json_file(poly_path));
        const int terms = max_terms > 0 ? max_terms : p.degree();
        const UnwindingSeries s = unwind(p, parse_schedule(schedule_spec), terms);
        write_output(to_json(s).dump(2) + "\n", out_path);
        return kExitOk;
    }

    if (sweep_cmd->parsed()) {
        const SweepResult result = error_sweep(load_sweep_config(config_path));
        write_output(to_csv(result), out_path);
        return kExitOk;
    }

    if (m0_cmd->parsed()) {
        const auto scan = m0_scan(parse_int_list(n_list_csv), tol);
        std::string text = "n,m0\n";
        char buf[64];
        for (const auto& [n, m0] : scan) {
            std::snprintf(buf, sizeof(buf), "%d,%.17g\n", n, m0);
            text += buf;
        }
        write_output(text, out_path);
        return kExitOk;
    }

    if (taylor_cmd->parsed()) {
        const SweepResult result = compare_taylor(load_sweep_config(config_path));
        write_output(to_csv(result), out_path);
        return kExitOk;
    }

    if (verify_cmd->parsed()) {
        const std::vector<CheckResult> results = run_verify(filter);
        std::cout << to_json(results).dump(2) << "\n";
        return all_passed(results) ? kExitOk : kExitInvariantFailure;
    }

    if (trace_cmd->parsed()) {
        const Polynomial p = polynomial_from_json(read_json_file(poly_path));
        std::string text = "t,re,im\n";
        char buf[128];
        for (const auto& [t, v] : boundary_trace(p, radius, samples)) {
            std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g\n", t, v.real(), v.imag());
            text += buf;
        }
        write_output(text, out_path);
        return kExitOk;
    }

    return kExitInputError;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}
