// experiment.hpp - configuration-driven experiment runner
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "etcsim/config_io.hpp"
#include "etcsim/simulation.hpp"

namespace etcsim {

/// Outcome of one (initial, horizon) run.
struct RunSummary {
    Eigen::VectorXd initial;
    int horizon = 0;
    int event_count_incl = 0;
    int event_count_excl = 0;
    std::optional<int> min_gap;  // absent with fewer than two events
    std::optional<int> max_gap;
    double final_state_norm = 0.0;
    double bound_margin = 0.0;   // min over k of alpha1^{-1}(m(1-eta)^k) - ||x(k)||
    bool nontrivial_certified = false;
    std::vector<std::string> violations;
    std::string trace_path;
};

struct ExperimentSummary {
    std::vector<RunSummary> runs;
    KrasovskiiCertificate cert;
    bool feasible = true;  // linear feasibility result, true for example2

    bool any_violations() const;
    nlohmann::json to_json() const;
};

/// Runs the cross product of initials x horizons, writes one trace CSV per
/// run plus the summary JSON under out_dir. Re-validates the supplied
/// trigger parameters per initial function and checks the restriction,
/// state-bound and (when V is recorded) decrement inequalities on every
/// trace. Identical configs overwrite their outputs byte-for-byte.
ExperimentSummary run_experiment(const ExperimentConfig& config,
                                 const std::string& out_dir,
                                 bool allow_infeasible = false);

/// One reproduction cell: computed event count against a published one.
struct TableCell {
    std::string label;
    double a = 0.0;
    double b = 0.0;
    double sigma = 0.0;
    Eigen::Vector2d initial;
    int horizon = 0;
    int computed_excl = 0;
    int computed_incl = 0;
    int published = 0;
    double rel_error = 0.0;  // |computed - published| / published
};

struct TableDocument {
    std::vector<TableCell> table1;  // horizon 1e4, sigma = 0.1
    std::vector<TableCell> table2;  // horizon 1e5
    std::string to_text() const;
    nlohmann::json to_json() const;
};

/// Reruns the published event-count study on the reference linear system.
/// Counts exclude the implicit initial event unless include_initial is set.
TableDocument reproduce_tables(bool include_initial = false);

/// Plot-ready CSV: k, e_norm, threshold, is_event, x..., u...
void emit_plot_data(const SimTrace& trace, const std::string& out_path);

/// The linear system studied in the event-count tables.
LinearDelaySystem reference_linear_system();

} // namespace etcsim
