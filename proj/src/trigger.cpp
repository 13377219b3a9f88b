#include "etcsim/trigger.hpp"

#include <cmath>
#include <stdexcept>

namespace etcsim {

void TriggerParams::validate() const {
    if (!(b > 0.0 && b < 1.0))
        throw std::invalid_argument("trigger: b must lie in (0, 1)");
    if (sigma < 0.0) throw std::invalid_argument("trigger: sigma must be >= 0");
    if (a < 0.0) throw std::invalid_argument("trigger: a must be >= 0");
    switch (mode) {
        case TriggerMode::state_only:
            if (a != 0.0 || sigma <= 0.0)
                throw std::invalid_argument(
                    "trigger: state_only requires a = 0 and sigma > 0");
            break;
        case TriggerMode::time_only:
            if (sigma != 0.0 || a <= 0.0)
                throw std::invalid_argument(
                    "trigger: time_only requires sigma = 0 and a > 0");
            break;
        case TriggerMode::full:
            break;
    }
}

const char* to_string(TriggerMode mode) {
    switch (mode) {
        case TriggerMode::full: return "full";
        case TriggerMode::state_only: return "state_only";
        case TriggerMode::time_only: return "time_only";
    }
    return "full";
}

TriggerMode trigger_mode_from_string(const std::string& s) {
    if (s == "full") return TriggerMode::full;
    if (s == "state_only") return TriggerMode::state_only;
    if (s == "time_only") return TriggerMode::time_only;
    throw std::invalid_argument("trigger: unknown mode '" + s + "'");
}

double threshold_chi(const TriggerParams& params, const KrasovskiiCertificate& cert,
                     const Eigen::VectorXd& x, int k) {
    if (k < 0) throw std::invalid_argument("threshold: k must be >= 0");
    const double decay = params.a * std::pow(1.0 - params.b, k);
    return params.sigma * cert.alpha1(x.stableNorm()) + cert.chi(decay);
}

double threshold(const TriggerParams& params, const KrasovskiiCertificate& cert,
                 const Eigen::VectorXd& x, int k) {
    return cert.chi_inv(threshold_chi(params, cert, x, k));
}

bool should_trigger(const MeasurementError& err, const Eigen::VectorXd& x, int k,
                    const TriggerParams& params, const KrasovskiiCertificate& cert) {
    if (k <= err.last_event)
        throw std::invalid_argument("should_trigger: queried at k <= last event");
    // Strict inequality: a tie keeps the held input.
    return cert.chi(err.e.stableNorm()) > threshold_chi(params, cert, x, k);
}

} // namespace etcsim
