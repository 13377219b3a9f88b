#include "etcsim/config_io.hpp"

#include <fstream>

#include "etcsim/errors.hpp"

namespace etcsim {

using nlohmann::json;

namespace {

Eigen::MatrixXd matrix_from_json(const json& j, const std::string& field) {
    if (!j.is_array() || j.empty())
        throw ConfigError(field, "expected a non-empty nested array");
    // Accept a scalar row form ([a, b]) as a 1 x n matrix.
    if (!j.front().is_array()) {
        Eigen::MatrixXd m(1, j.size());
        for (std::size_t c = 0; c < j.size(); ++c) m(0, c) = j[c].get<double>();
        return m;
    }
    const std::size_t rows = j.size();
    const std::size_t cols = j.front().size();
    Eigen::MatrixXd m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols)
            throw ConfigError(field, "ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = j[r][c].get<double>();
    }
    return m;
}

double scalar_from_json(const json& j, const std::string& field) {
    if (j.is_number()) return j.get<double>();
    const Eigen::MatrixXd m = matrix_from_json(j, field);
    if (m.size() != 1) throw ConfigError(field, "expected a scalar");
    return m(0, 0);
}

LinearDelaySystem linear_from_json(const json& j) {
    LinearDelaySystem sys;
    for (const char* key : {"A1", "A2", "B", "K"})
        if (!j.contains(key))
            throw ConfigError(std::string("system.linear.") + key, "missing");
    sys.A1 = matrix_from_json(j.at("A1"), "system.linear.A1");
    sys.A2 = matrix_from_json(j.at("A2"), "system.linear.A2");
    sys.B = matrix_from_json(j.at("B"), "system.linear.B");
    sys.K = matrix_from_json(j.at("K"), "system.linear.K");
    sys.tau = j.value("tau", 1);
    try {
        sys.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError("system.linear", e.what());
    }
    return sys;
}

Example2System example2_from_json(const json& j) {
    Example2System sys;
    sys.A1 = j.contains("A1") ? scalar_from_json(j.at("A1"), "system.example2.A1") : sys.A1;
    sys.A2 = j.contains("A2") ? scalar_from_json(j.at("A2"), "system.example2.A2") : sys.A2;
    sys.B = j.contains("B") ? scalar_from_json(j.at("B"), "system.example2.B") : sys.B;
    sys.K = j.contains("K") ? scalar_from_json(j.at("K"), "system.example2.K") : sys.K;
    sys.tau = j.value("tau", 1);
    if (sys.tau != 1) throw ConfigError("system.example2.tau", "must be 1");
    return sys;
}

} // namespace

int ExperimentConfig::tau() const {
    return std::holds_alternative<LinearDelaySystem>(system)
               ? std::get<LinearDelaySystem>(system).tau
               : std::get<Example2System>(system).tau;
}

int ExperimentConfig::state_dim() const {
    return std::holds_alternative<LinearDelaySystem>(system)
               ? std::get<LinearDelaySystem>(system).state_dim()
               : 1;
}

void ExperimentConfig::validate() const {
    if (initial.empty()) throw ConfigError("initial", "need at least one initial function");
    if (horizons.empty()) throw ConfigError("horizons", "need at least one horizon");
    for (const auto& v : initial)
        if (v.size() != state_dim())
            throw ConfigError("initial", "dimension does not match the system");
    for (int h : horizons)
        if (h < 1) throw ConfigError("horizons", "horizons must be >= 1");
    try {
        trigger.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError("trigger", e.what());
    }
    if (outputs.trace_csv.empty()) throw ConfigError("outputs.trace_csv", "empty path");
    if (outputs.summary_json.empty())
        throw ConfigError("outputs.summary_json", "empty path");
}

ExperimentConfig parse_experiment_config(const json& j) {
    ExperimentConfig cfg;
    if (!j.contains("system")) throw ConfigError("system", "missing");
    const auto& sys = j.at("system");
    if (sys.contains("linear"))
        cfg.system = linear_from_json(sys.at("linear"));
    else if (sys.contains("example2"))
        cfg.system = example2_from_json(sys.at("example2"));
    else
        throw ConfigError("system", "expected 'linear' or 'example2'");

    if (j.contains("certificate")) {
        CertificateOverride ov;
        const auto& c = j.at("certificate");
        if (c.contains("eps")) ov.eps = c.at("eps").get<double>();
        if (c.contains("mu")) ov.mu = c.at("mu").get<double>();
        cfg.certificate = ov;
    }

    if (!j.contains("trigger")) throw ConfigError("trigger", "missing");
    cfg.trigger = trigger_from_json(j.at("trigger"));

    if (!j.contains("initial")) throw ConfigError("initial", "missing");
    for (const auto& v : j.at("initial")) {
        if (v.is_number()) {
            cfg.initial.push_back(Eigen::VectorXd::Constant(1, v.get<double>()));
        } else {
            const Eigen::MatrixXd m = matrix_from_json(v, "initial");
            cfg.initial.push_back(Eigen::VectorXd(m.reshaped()));
        }
    }

    if (!j.contains("horizons")) throw ConfigError("horizons", "missing");
    for (const auto& h : j.at("horizons")) cfg.horizons.push_back(h.get<int>());

    if (j.contains("outputs")) {
        const auto& o = j.at("outputs");
        cfg.outputs.trace_csv = o.value("trace_csv", cfg.outputs.trace_csv);
        cfg.outputs.summary_json = o.value("summary_json", cfg.outputs.summary_json);
    }
    cfg.record_v = j.value("record_v", true);

    cfg.validate();
    return cfg;
}

ExperimentConfig load_experiment_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("(file)", "cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ConfigError("(file)", std::string("JSON parse error: ") + e.what());
    }
    return parse_experiment_config(j);
}

json to_json(const TriggerParams& params) {
    return json{{"sigma", params.sigma},
                {"a", params.a},
                {"b", params.b},
                {"mode", to_string(params.mode)}};
}

TriggerParams trigger_from_json(const json& j) {
    TriggerParams p;
    if (!j.contains("sigma")) throw ConfigError("trigger.sigma", "missing");
    if (!j.contains("a")) throw ConfigError("trigger.a", "missing");
    if (!j.contains("b")) throw ConfigError("trigger.b", "missing");
    p.sigma = j.at("sigma").get<double>();
    p.a = j.at("a").get<double>();
    p.b = j.at("b").get<double>();
    if (j.contains("mode")) p.mode = trigger_mode_from_string(j.at("mode").get<std::string>());
    try {
        p.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError("trigger", e.what());
    }
    return p;
}

json to_json(const KrasovskiiCertificate& cert) {
    return json{{"mu", cert.mu},
                {"eps", cert.eps},
                {"L", cert.chi_lipschitz},
                {"L1", cert.alpha1_inv_lipschitz}};
}

KrasovskiiCertificate certificate_from_json(const json& j) {
    for (const char* key : {"mu", "eps", "L"})
        if (!j.contains(key))
            throw ConfigError(std::string("certificate.") + key, "missing");
    auto cert = KrasovskiiCertificate::linear_form(
        j.at("mu").get<double>(), j.at("eps").get<double>(), j.at("L").get<double>());
    cert.alpha1_inv_lipschitz = j.value("L1", 1.0);
    return cert;
}

json to_json(const TunerResult& result) {
    return json{{"sigma", result.sigma},
                {"a", result.a},
                {"b", result.b},
                {"c", result.c},
                {"m_tilde", result.m_tilde},
                {"m_bar", result.m_bar},
                {"m", result.m},
                {"xi", result.xi},
                {"eta", result.eta()},
                {"nontrivial_certified", result.nontrivial_certified}};
}

TunerResult tuner_result_from_json(const json& j) {
    TunerResult r;
    r.sigma = j.at("sigma").get<double>();
    r.a = j.at("a").get<double>();
    r.b = j.at("b").get<double>();
    r.c = j.at("c").get<double>();
    r.m_tilde = j.at("m_tilde").get<double>();
    r.m_bar = j.at("m_bar").get<double>();
    r.m = j.at("m").get<double>();
    r.xi = j.at("xi").get<double>();
    r.nontrivial_certified = j.at("nontrivial_certified").get<bool>();
    return r;
}

} // namespace etcsim
