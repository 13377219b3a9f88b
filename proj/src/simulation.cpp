#include "etcsim/simulation.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "etcsim/errors.hpp"

namespace etcsim {

namespace {
constexpr double kDivergenceGuard = 1e12;
constexpr double kTol = 1e-9;
} // namespace

SimTrace simulate(const NonlinearDelaySystem& system, const KrasovskiiCertificate& cert,
                  const SimConfig& config) {
    config.params.validate();
    if (config.horizon < 1)
        throw std::invalid_argument("simulate: horizon must be >= 1");
    if (config.phi.tau() != system.tau || config.phi.dim() != system.state_dim)
        throw std::invalid_argument("simulate: phi does not match the system");

    SimTrace trace;
    trace.rows.reserve(config.horizon + 1);

    HistoryWindow window = config.phi;
    Eigen::VectorXd anchor = window.current();          // x(k_i)
    Eigen::VectorXd u = system.feedback(anchor);        // held input
    int last_event = 0;
    trace.event_times.push_back(0);

    for (int k = 0; k <= config.horizon; ++k) {
        const Eigen::VectorXd& x = window.current();
        if (!x.allFinite() || x.stableNorm() > kDivergenceGuard)
            throw SimulationDiverged(k - 1);

        TraceRow row;
        row.k = k;
        row.x = x;
        row.is_event = (k == 0);
        row.e_norm = 0.0;
        if (k > last_event) {
            MeasurementError err{anchor - x, last_event};
            if (should_trigger(err, x, k, config.params, cert)) {
                anchor = x;
                u = system.feedback(x);
                last_event = k;
                trace.event_times.push_back(k);
                row.is_event = true;
            } else {
                row.e_norm = err.e.stableNorm();
            }
        }
        row.u = u;
        row.threshold = threshold(config.params, cert, x, k);
        if (config.record_v) row.v = evaluate_V(cert, window);
        trace.rows.push_back(std::move(row));

        window.push(system.dynamics(window, u));
    }
    return trace;
}

std::vector<int> inter_event_times(const SimTrace& trace) {
    std::vector<int> gaps;
    for (std::size_t i = 1; i < trace.event_times.size(); ++i)
        gaps.push_back(trace.event_times[i] - trace.event_times[i - 1]);
    return gaps;
}

int count_events(const SimTrace& trace, int upto, bool include_initial) {
    int n = 0;
    for (int t : trace.event_times) {
        if (t > upto) break;
        if (t == 0 && !include_initial) continue;
        ++n;
    }
    return n;
}

std::vector<BoundViolation> verify_state_bound(const SimTrace& trace,
                                               const TunerResult& result,
                                               const KrasovskiiCertificate& cert) {
    const double eta = result.eta();
    std::vector<BoundViolation> out;
    for (const auto& row : trace.rows) {
        const double bound =
            cert.alpha1_inv(result.m * std::pow(1.0 - eta, row.k));
        const double value = row.x.stableNorm();
        if (value > bound + kTol) out.push_back({row.k, value, bound});
    }
    return out;
}

std::vector<BoundViolation> verify_restriction(const SimTrace& trace,
                                               const TriggerParams& params,
                                               const KrasovskiiCertificate& cert) {
    std::vector<BoundViolation> out;
    for (const auto& row : trace.rows) {
        if (row.k == 0) continue;
        const double lhs = cert.chi(row.e_norm);
        const double rhs = threshold_chi(params, cert, row.x, row.k);
        if (lhs > rhs) out.push_back({row.k, lhs, rhs});
    }
    return out;
}

VBoundReport v_bound_oracle(const SimTrace& trace, const KrasovskiiCertificate& cert,
                            const TunerResult& result) {
    VBoundReport report;
    if (trace.rows.empty()) return report;
    if (!trace.rows.front().v)
        throw std::invalid_argument("v_bound_oracle: trace lacks V values");

    const double aL = result.a * cert.chi_lipschitz;
    const double v0 = *trace.rows.front().v;
    for (std::size_t i = 0; i + 1 < trace.rows.size(); ++i) {
        const auto& row = trace.rows[i];
        const auto& next = trace.rows[i + 1];
        if (!row.v || !next.v)
            throw std::invalid_argument("v_bound_oracle: trace lacks V values");
        const double forcing = aL * std::pow(1.0 - result.b, row.k);
        const double step_bound = (1.0 - result.c) * *row.v + forcing;
        if (*next.v > step_bound + kTol)
            report.recursion.push_back({row.k, *next.v, step_bound});
        const double envelope = lyapunov_envelope(v0, result.a, cert.chi_lipschitz,
                                                  result.b, result.c, result.xi,
                                                  row.k + 1);
        if (*next.v > envelope + kTol)
            report.closed_form.push_back({row.k + 1, *next.v, envelope});
    }
    return report;
}

namespace {

void append_double(std::string& line, double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    line += buf;
}

} // namespace

void write_trace_csv(const SimTrace& trace, const std::string& path) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);

    const int n = trace.rows.empty() ? 0 : static_cast<int>(trace.rows.front().x.size());
    const int m = trace.rows.empty() ? 0 : static_cast<int>(trace.rows.front().u.size());
    std::string header = "k";
    for (int i = 0; i < n; ++i) header += ",x_" + std::to_string(i);
    for (int i = 0; i < m; ++i) header += ",u_" + std::to_string(i);
    header += ",e_norm,threshold,is_event,V";
    out << header << '\n';

    std::string line;
    for (const auto& row : trace.rows) {
        line.clear();
        line += std::to_string(row.k);
        for (int i = 0; i < n; ++i) {
            line += ',';
            append_double(line, row.x(i));
        }
        for (int i = 0; i < m; ++i) {
            line += ',';
            append_double(line, row.u(i));
        }
        line += ',';
        append_double(line, row.e_norm);
        line += ',';
        append_double(line, row.threshold);
        line += row.is_event ? ",1," : ",0,";
        if (row.v) append_double(line, *row.v);
        out << line << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

SimTrace read_trace_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);

    std::string header;
    if (!std::getline(in, header))
        throw std::runtime_error("empty trace file: " + path);
    int n = 0, m = 0;
    {
        std::stringstream ss(header);
        std::string col;
        while (std::getline(ss, col, ',')) {
            if (col.rfind("x_", 0) == 0) ++n;
            if (col.rfind("u_", 0) == 0) ++m;
        }
    }

    SimTrace trace;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string field;
        auto next_field = [&]() {
            if (!std::getline(ss, field, ','))
                throw std::runtime_error("malformed trace row in " + path);
            return field;
        };
        TraceRow row;
        row.k = std::stoi(next_field());
        row.x.resize(n);
        for (int i = 0; i < n; ++i) row.x(i) = std::stod(next_field());
        row.u.resize(m);
        for (int i = 0; i < m; ++i) row.u(i) = std::stod(next_field());
        row.e_norm = std::stod(next_field());
        row.threshold = std::stod(next_field());
        row.is_event = next_field() == "1";
        if (std::getline(ss, field, ',') && !field.empty())
            row.v = std::stod(field);
        if (row.is_event) trace.event_times.push_back(row.k);
        trace.rows.push_back(std::move(row));
    }
    return trace;
}

} // namespace etcsim
