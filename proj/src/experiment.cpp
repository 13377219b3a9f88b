#include "etcsim/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "etcsim/errors.hpp"

namespace etcsim {

namespace fs = std::filesystem;
using nlohmann::json;

LinearDelaySystem reference_linear_system() {
    LinearDelaySystem sys;
    sys.A1 = Eigen::MatrixXd{{0.95, 0.0}, {0.01, 1.05}};
    sys.A2 = Eigen::MatrixXd{{0.0, -0.01}, {-0.01, 0.0}};
    sys.B = Eigen::MatrixXd{{3.0, 0.2}, {0.5, 1.0}};
    sys.K = Eigen::MatrixXd{{-0.1621, 0.0324}, {0.0810, -0.4862}};
    sys.tau = 1;
    return sys;
}

namespace {

struct ResolvedSystem {
    NonlinearDelaySystem system;
    KrasovskiiCertificate cert;
    bool feasible = true;
};

ResolvedSystem resolve(const ExperimentConfig& config) {
    ResolvedSystem out;
    if (std::holds_alternative<LinearDelaySystem>(config.system)) {
        const auto& lin = std::get<LinearDelaySystem>(config.system);
        out.system = make_system(lin);
        out.feasible = check_linear_feasibility(lin);
        if (config.certificate && config.certificate->eps && config.certificate->mu) {
            out.cert = KrasovskiiCertificate::linear_form(
                *config.certificate->mu, *config.certificate->eps,
                induced_norm(lin.B * lin.K));
        } else {
            out.cert = derive_linear_certificate(lin).cert;
            if (config.certificate && config.certificate->mu)
                out.cert.mu = *config.certificate->mu;
        }
    } else {
        const auto& ex2 = std::get<Example2System>(config.system);
        out.system = make_system(ex2);
        const double eps =
            config.certificate && config.certificate->eps ? *config.certificate->eps : 0.1;
        out.cert = example2_certificate(ex2, eps);
        if (config.certificate && config.certificate->mu)
            out.cert.mu = *config.certificate->mu;
    }
    return out;
}

std::string run_trace_path(const OutputPaths& outputs, std::size_t initial_idx,
                           int horizon) {
    return outputs.trace_csv + "_i" + std::to_string(initial_idx) + "_h" +
           std::to_string(horizon) + ".csv";
}

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

bool ExperimentSummary::any_violations() const {
    for (const auto& r : runs)
        if (!r.violations.empty()) return true;
    return false;
}

json ExperimentSummary::to_json() const {
    json j;
    j["certificate"] = etcsim::to_json(cert);
    j["feasible"] = feasible;
    j["runs"] = json::array();
    for (const auto& r : runs) {
        json run;
        run["initial"] = std::vector<double>(r.initial.begin(), r.initial.end());
        run["horizon"] = r.horizon;
        run["event_count_incl"] = r.event_count_incl;
        run["event_count_excl"] = r.event_count_excl;
        if (r.min_gap) run["min_gap"] = *r.min_gap; else run["min_gap"] = nullptr;
        if (r.max_gap) run["max_gap"] = *r.max_gap; else run["max_gap"] = nullptr;
        run["final_state_norm"] = r.final_state_norm;
        run["bound_margin"] = r.bound_margin;
        run["nontrivial_certified"] = r.nontrivial_certified;
        run["violations"] = r.violations;
        run["trace"] = r.trace_path;
        j["runs"].push_back(std::move(run));
    }
    return j;
}

ExperimentSummary run_experiment(const ExperimentConfig& config,
                                 const std::string& out_dir, bool allow_infeasible) {
    config.validate();
    const ResolvedSystem resolved = resolve(config);
    if (!resolved.feasible && !allow_infeasible)
        throw CertificateInfeasible(resolved.cert.mu);

    fs::create_directories(out_dir);

    LipschitzConstants consts =
        std::holds_alternative<LinearDelaySystem>(config.system)
            ? linear_lipschitz(std::get<LinearDelaySystem>(config.system))
            : example2_lipschitz(std::get<Example2System>(config.system));

    ExperimentSummary summary;
    summary.cert = resolved.cert;
    summary.feasible = resolved.feasible;

    for (std::size_t i = 0; i < config.initial.size(); ++i) {
        const HistoryWindow phi = HistoryWindow::constant(config.tau(), config.initial[i]);
        const TunerResult tuned =
            assess(config.trigger, resolved.cert.mu, consts, phi, resolved.cert,
                   config.tau());
        for (int horizon : config.horizons) {
            SimConfig sim_cfg{horizon, phi, config.trigger, config.record_v};
            const SimTrace trace = simulate(resolved.system, resolved.cert, sim_cfg);

            RunSummary run;
            run.initial = config.initial[i];
            run.horizon = horizon;
            run.event_count_incl = count_events(trace, horizon, true);
            run.event_count_excl = count_events(trace, horizon, false);
            const auto gaps = inter_event_times(trace);
            if (!gaps.empty()) {
                run.min_gap = *std::min_element(gaps.begin(), gaps.end());
                run.max_gap = *std::max_element(gaps.begin(), gaps.end());
            }
            run.final_state_norm = trace.rows.back().x.stableNorm();
            run.nontrivial_certified = tuned.nontrivial_certified;

            double margin = std::numeric_limits<double>::infinity();
            for (const auto& row : trace.rows) {
                const double bound = resolved.cert.alpha1_inv(
                    tuned.m * std::pow(1.0 - tuned.eta(), row.k));
                margin = std::min(margin, bound - row.x.stableNorm());
            }
            run.bound_margin = margin;

            for (const auto& v : verify_restriction(trace, config.trigger, resolved.cert))
                run.violations.push_back("restriction violated at k=" +
                                         std::to_string(v.k));
            for (const auto& v : verify_state_bound(trace, tuned, resolved.cert))
                run.violations.push_back("state bound violated at k=" +
                                         std::to_string(v.k));
            if (config.record_v)
                for (const auto& v : check_iss_decrement(resolved.cert, trace))
                    run.violations.push_back("V decrement violated at k=" +
                                             std::to_string(v.k));

            const std::string trace_name = run_trace_path(config.outputs, i, horizon);
            const fs::path trace_path = fs::path(out_dir) / trace_name;
            fs::create_directories(trace_path.parent_path());
            write_trace_csv(trace, trace_path.string());
            run.trace_path = trace_name;

            summary.runs.push_back(std::move(run));
        }
    }

    std::ofstream out(fs::path(out_dir) / config.outputs.summary_json, std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot write summary: " + config.outputs.summary_json);
    out << summary.to_json().dump(2) << '\n';
    return summary;
}

namespace {

TableCell run_cell(const NonlinearDelaySystem& system, const KrasovskiiCertificate& cert,
                   double sigma, double a, double b, const Eigen::Vector2d& initial,
                   int horizon, int published, bool include_initial) {
    TriggerParams params{sigma, a, b,
                         sigma == 0.0 ? TriggerMode::time_only : TriggerMode::full};
    SimConfig cfg{horizon, HistoryWindow::constant(1, initial), params, false};
    const SimTrace trace = simulate(system, cert, cfg);
    TableCell cell;
    cell.a = a;
    cell.b = b;
    cell.sigma = sigma;
    cell.initial = initial;
    cell.horizon = horizon;
    cell.computed_excl = count_events(trace, horizon, false);
    cell.computed_incl = count_events(trace, horizon, true);
    cell.published = published;
    const int computed = include_initial ? cell.computed_incl : cell.computed_excl;
    cell.rel_error = std::abs(computed - published) / static_cast<double>(published);
    std::ostringstream label;
    label << "a=" << a << " b=" << b << " sigma=" << sigma << " phi=[" << initial(0)
          << "," << initial(1) << "]";
    cell.label = label.str();
    return cell;
}

} // namespace

TableDocument reproduce_tables(bool include_initial) {
    const LinearDelaySystem sys = reference_linear_system();
    const NonlinearDelaySystem system = make_system(sys);
    const KrasovskiiCertificate cert = derive_linear_certificate(sys).cert;

    const Eigen::Vector2d phi_a(1.0, 1.0);
    const Eigen::Vector2d phi_b(-2.0, 3.0);

    TableDocument doc;
    struct Row1 { double a, b; int pub_a, pub_b; };
    for (const Row1& row : {Row1{16.0, 0.01, 2135, 2141}, Row1{16.0, 0.03, 2317, 2323},
                            Row1{24.0, 0.03, 2315, 2320}}) {
        doc.table1.push_back(run_cell(system, cert, 0.1, row.a, row.b, phi_a, 10000,
                                      row.pub_a, include_initial));
        doc.table1.push_back(run_cell(system, cert, 0.1, row.a, row.b, phi_b, 10000,
                                      row.pub_b, include_initial));
    }
    struct Row2 { double sigma; int pub_a, pub_b; };
    for (const Row2& row : {Row2{0.1, 15845, 15857}, Row2{0.0, 17373, 17369}}) {
        doc.table2.push_back(run_cell(system, cert, row.sigma, 16.0, 0.01, phi_a, 100000,
                                      row.pub_a, include_initial));
        doc.table2.push_back(run_cell(system, cert, row.sigma, 16.0, 0.01, phi_b, 100000,
                                      row.pub_b, include_initial));
    }
    return doc;
}

std::string TableDocument::to_text() const {
    std::ostringstream out;
    auto print = [&out](const char* title, const std::vector<TableCell>& cells) {
        out << title << '\n';
        out << "  cell                                      computed  published  rel.err\n";
        for (const auto& c : cells) {
            char line[160];
            std::snprintf(line, sizeof line, "  %-41s %8d  %9d  %6.2f%%\n",
                          c.label.c_str(), c.computed_excl, c.published,
                          100.0 * c.rel_error);
            out << line;
        }
    };
    print("Event counts over [0, 1e4] (table 1):", table1);
    print("Event counts over [0, 1e5] (table 2):", table2);
    return out.str();
}

json TableDocument::to_json() const {
    auto cells_json = [](const std::vector<TableCell>& cells) {
        json arr = json::array();
        for (const auto& c : cells) {
            arr.push_back({{"label", c.label},
                           {"a", c.a},
                           {"b", c.b},
                           {"sigma", c.sigma},
                           {"initial", {c.initial(0), c.initial(1)}},
                           {"horizon", c.horizon},
                           {"computed_excl", c.computed_excl},
                           {"computed_incl", c.computed_incl},
                           {"published", c.published},
                           {"rel_error", c.rel_error}});
        }
        return arr;
    };
    return json{{"table1", cells_json(table1)}, {"table2", cells_json(table2)}};
}

void emit_plot_data(const SimTrace& trace, const std::string& out_path) {
    if (trace.rows.empty())
        throw std::invalid_argument("emit_plot_data: empty trace");
    std::ofstream out(out_path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open for writing: " + out_path);

    const int n = static_cast<int>(trace.rows.front().x.size());
    const int m = static_cast<int>(trace.rows.front().u.size());
    out << "k,e_norm,threshold,is_event";
    for (int i = 0; i < n; ++i) out << ",x_" << i;
    for (int i = 0; i < m; ++i) out << ",u_" << i;
    out << '\n';
    for (const auto& row : trace.rows) {
        out << row.k << ',' << fmt_double(row.e_norm) << ',' << fmt_double(row.threshold)
            << ',' << (row.is_event ? 1 : 0);
        for (int i = 0; i < n; ++i) out << ',' << fmt_double(row.x(i));
        for (int i = 0; i < m; ++i) out << ',' << fmt_double(row.u(i));
        out << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + out_path);
}

} // namespace etcsim
