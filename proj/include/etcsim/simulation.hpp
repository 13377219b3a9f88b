// simulation.hpp - closed-loop event-triggered simulation
#pragma once

#include <string>
#include <vector>

#include "etcsim/certificate.hpp"
#include "etcsim/history_window.hpp"
#include "etcsim/system.hpp"
#include "etcsim/trace.hpp"
#include "etcsim/trigger.hpp"
#include "etcsim/tuner.hpp"

namespace etcsim {

struct SimConfig {
    int horizon = 1;      // rows cover k = 0..horizon
    HistoryWindow phi;    // initial function, length tau+1
    TriggerParams params;
    bool record_v = false;
};

/// Runs the sampled-data loop: k = 0 is an implicit event (u = p(x(0)),
/// e = 0); at each later step the error relative to the last update is
/// measured, the trigger queried, the input refreshed on events, and the
/// state advanced with the held input. Deterministic for fixed inputs.
/// Throws SimulationDiverged when the state leaves [0, 1e12] in norm.
SimTrace simulate(const NonlinearDelaySystem& system, const KrasovskiiCertificate& cert,
                  const SimConfig& config);

/// Consecutive differences of the event times.
std::vector<int> inter_event_times(const SimTrace& trace);

/// Number of event times in [0, upto], or (0, upto] when the implicit
/// initial event is excluded.
int count_events(const SimTrace& trace, int upto, bool include_initial);

/// Checks ||x(k)|| <= alpha1^{-1}(m (1-eta)^k) + 1e-9 along the trace.
std::vector<BoundViolation> verify_state_bound(const SimTrace& trace,
                                               const TunerResult& result,
                                               const KrasovskiiCertificate& cert);

/// Violations of the chi-units error restriction at non-event rows:
/// chi(e_norm) <= sigma alpha1(||x||) + chi(a (1-b)^k).
std::vector<BoundViolation> verify_restriction(const SimTrace& trace,
                                               const TriggerParams& params,
                                               const KrasovskiiCertificate& cert);

struct VBoundReport {
    std::vector<BoundViolation> recursion;    // one-step decrement failures
    std::vector<BoundViolation> closed_form;  // geometric-envelope failures
    bool ok() const { return recursion.empty() && closed_form.empty(); }
};

/// Checks that the recorded V obeys both the forced recursion
/// V(x_{k+1}) <= (1-c) V(x_k) + a L (1-b)^k and its closed-form bound
/// (1-eta)^{k+1} (V(x_0) + m_bar).
VBoundReport v_bound_oracle(const SimTrace& trace, const KrasovskiiCertificate& cert,
                            const TunerResult& result);

/// Trace CSV with header k,x_0..x_{n-1},u_0..u_{m-1},e_norm,threshold,
/// is_event,V; floats carry 17 significant digits.
void write_trace_csv(const SimTrace& trace, const std::string& path);
SimTrace read_trace_csv(const std::string& path);

} // namespace etcsim
