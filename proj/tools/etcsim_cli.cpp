// etcsim_cli.cpp - experiment runner for event-triggered delay-system control
//
// Subcommands:
//   simulate <config.json>   run the configured simulations, write traces + summary
//   tune <config.json>       synthesize (sigma, a, b) for the configured system
//   tables                   rerun the published event-count study
//   check <config.json>      feasibility and certificate report only
//
// Exit codes: 0 ok, 1 validation error, 2 infeasible, 3 invariant violation
// detected in a certified run.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <variant>

#include <CLI11.hpp>

#include "etcsim/config_io.hpp"
#include "etcsim/errors.hpp"
#include "etcsim/experiment.hpp"

namespace fs = std::filesystem;
using namespace etcsim;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitViolation = 3;

int cmd_simulate(const std::string& config_path, const std::string& out_dir,
                 bool allow_infeasible) {
    const ExperimentConfig config = load_experiment_config(config_path);
    const ExperimentSummary summary = run_experiment(config, out_dir, allow_infeasible);
    std::cout << summary.to_json().dump(2) << '\n';
    if (summary.any_violations()) {
        bool certified = false;
        for (const auto& r : summary.runs) certified |= r.nontrivial_certified;
        if (certified) {
            std::cerr << "invariant violations detected in a certified run\n";
            return kExitViolation;
        }
    }
    return kExitOk;
}

int cmd_tune(const std::string& config_path, const std::string& out_dir) {
    const ExperimentConfig config = load_experiment_config(config_path);

    KrasovskiiCertificate cert;
    LipschitzConstants consts;
    int tau = config.tau();
    if (std::holds_alternative<LinearDelaySystem>(config.system)) {
        const auto& lin = std::get<LinearDelaySystem>(config.system);
        cert = derive_linear_certificate(lin).cert;
        consts = linear_lipschitz(lin);
    } else {
        const auto& ex2 = std::get<Example2System>(config.system);
        const double eps =
            config.certificate && config.certificate->eps ? *config.certificate->eps : 0.1;
        cert = example2_certificate(ex2, eps);
        consts = example2_lipschitz(ex2);
    }

    const HistoryWindow phi = HistoryWindow::constant(tau, config.initial.front());
    const TunerResult result = tune(cert.mu, consts, phi, cert, tau);
    const auto j = to_json(result);
    std::cout << j.dump(2) << '\n';
    if (!out_dir.empty()) {
        fs::create_directories(out_dir);
        std::ofstream out(fs::path(out_dir) / "tuned.json", std::ios::trunc);
        out << j.dump(2) << '\n';
    }
    return kExitOk;
}

int cmd_tables(const std::string& out_dir, bool include_initial) {
    const TableDocument doc = reproduce_tables(include_initial);
    std::cout << doc.to_text();
    if (!out_dir.empty()) {
        fs::create_directories(out_dir);
        std::ofstream out(fs::path(out_dir) / "tables.json", std::ios::trunc);
        out << doc.to_json().dump(2) << '\n';
    }
    return kExitOk;
}

int cmd_check(const std::string& config_path) {
    const ExperimentConfig config = load_experiment_config(config_path);
    nlohmann::json report;
    if (std::holds_alternative<LinearDelaySystem>(config.system)) {
        const auto& lin = std::get<LinearDelaySystem>(config.system);
        report["feasible"] = check_linear_feasibility(lin);
        const auto derived = derive_linear_certificate(lin);
        report["certificate"] = to_json(derived.cert);
        report["bk_norm"] = derived.bk_norm;
    } else {
        const auto& ex2 = std::get<Example2System>(config.system);
        const double eps =
            config.certificate && config.certificate->eps ? *config.certificate->eps : 0.1;
        report["feasible"] = true;
        report["certificate"] = to_json(example2_certificate(ex2, eps));
    }
    std::cout << report.dump(2) << '\n';
    if (!report["feasible"].get<bool>()) return kExitInfeasible;
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"event-triggered control simulator for discrete-time delay systems"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = "out";
    bool include_initial = false;
    bool allow_infeasible = false;

    auto* sim = app.add_subcommand("simulate", "run configured simulations");
    sim->add_option("config", config_path, "experiment config JSON")->required();
    sim->add_option("--out-dir", out_dir, "output directory");
    sim->add_flag("--allow-infeasible", allow_infeasible,
                  "run even when the linear feasibility test fails");

    auto* tun = app.add_subcommand("tune", "synthesize trigger parameters");
    tun->add_option("config", config_path, "experiment config JSON")->required();
    tun->add_option("--out-dir", out_dir, "output directory");

    auto* tab = app.add_subcommand("tables", "rerun the event-count study");
    tab->add_option("--out-dir", out_dir, "output directory");
    tab->add_flag("--include-initial-event", include_initial,
                  "count the implicit event at k = 0");

    auto* chk = app.add_subcommand("check", "feasibility + certificate report");
    chk->add_option("config", config_path, "experiment config JSON")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (sim->parsed()) return cmd_simulate(config_path, out_dir, allow_infeasible);
        if (tun->parsed()) return cmd_tune(config_path, out_dir);
        if (tab->parsed()) return cmd_tables(out_dir, include_initial);
        if (chk->parsed()) return cmd_check(config_path);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const CertificateInfeasible& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInfeasible;
    } catch (const TuneInfeasible& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInfeasible;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    }
    return kExitOk;
}
