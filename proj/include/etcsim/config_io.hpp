// config_io.hpp - JSON configuration schema (see README for the layout)
#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "etcsim/certificate.hpp"
#include "etcsim/system.hpp"
#include "etcsim/trigger.hpp"
#include "etcsim/tuner.hpp"

#include <json.hpp>

namespace etcsim {

struct CertificateOverride {
    std::optional<double> eps;
    std::optional<double> mu;
};

struct OutputPaths {
    std::string trace_csv = "trace";        // per-run files get a suffix
    std::string summary_json = "summary.json";
};

struct ExperimentConfig {
    std::variant<LinearDelaySystem, Example2System> system;
    std::optional<CertificateOverride> certificate;
    TriggerParams trigger;
    std::vector<Eigen::VectorXd> initial;   // constant initial function per run
    std::vector<int> horizons;
    OutputPaths outputs;
    bool record_v = true;

    int tau() const;
    int state_dim() const;
    /// Throws ConfigError naming the offending field.
    void validate() const;
};

ExperimentConfig parse_experiment_config(const nlohmann::json& j);
ExperimentConfig load_experiment_config(const std::string& path);

nlohmann::json to_json(const TriggerParams& params);
TriggerParams trigger_from_json(const nlohmann::json& j);

/// Certificate data (mu, eps, L, L1) for the linear-form family.
nlohmann::json to_json(const KrasovskiiCertificate& cert);
KrasovskiiCertificate certificate_from_json(const nlohmann::json& j);

nlohmann::json to_json(const TunerResult& result);
TunerResult tuner_result_from_json(const nlohmann::json& j);

} // namespace etcsim
