// trigger.hpp - event-triggering rule and threshold evaluation
#pragma once

#include <Eigen/Dense>
#include <string>

#include "etcsim/certificate.hpp"

namespace etcsim {

enum class TriggerMode { full, state_only, time_only };

/// Parameters of the execution rule
///   chi(||e||) > sigma * alpha1(||x||) + chi(a (1-b)^k).
/// state_only fixes a = 0 (rule driven by the state alone);
/// time_only fixes sigma = 0 (rule driven by the evolution time alone).
struct TriggerParams {
    double sigma = 0.0;
    double a = 0.0;
    double b = 0.5;
    TriggerMode mode = TriggerMode::full;

    void validate() const;
};

/// Measurement error e(k) = x(k_i) - x(k) relative to the last event k_i.
struct MeasurementError {
    Eigen::VectorXd e;
    int last_event = 0;
};

const char* to_string(TriggerMode mode);
TriggerMode trigger_mode_from_string(const std::string& s);

/// Threshold in chi-units: sigma * alpha1(||x||) + chi(a (1-b)^k).
/// This is the quantity chi(||e||) is compared against.
double threshold_chi(const TriggerParams& params, const KrasovskiiCertificate& cert,
                     const Eigen::VectorXd& x, int k);

/// Threshold in error-norm units (what the trace records and figures plot);
/// for linear chi this is sigma*||x||/gain + a (1-b)^k.
double threshold(const TriggerParams& params, const KrasovskiiCertificate& cert,
                 const Eigen::VectorXd& x, int k);

/// True iff the event fires at step k: chi(||e||) strictly exceeds the
/// chi-units threshold. Only valid for k > err.last_event.
bool should_trigger(const MeasurementError& err, const Eigen::VectorXd& x, int k,
                    const TriggerParams& params, const KrasovskiiCertificate& cert);

} // namespace etcsim
