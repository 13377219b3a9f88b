// errors.hpp - exception types used across the library
#pragma once

#include <stdexcept>
#include <string>

namespace etcsim {

/// Thrown when the closed-form linear certificate does not exist (mu <= 0).
class CertificateInfeasible : public std::runtime_error {
public:
    explicit CertificateInfeasible(double mu)
        : std::runtime_error("certificate infeasible: mu = " + std::to_string(mu)),
          mu_(mu) {}
    double mu() const { return mu_; }

private:
    double mu_;
};

/// Thrown by tune() when mu <= L*L1*(l11+l12+l2), i.e. no trigger
/// parameters with the required guarantees exist.
class TuneInfeasible : public std::runtime_error {
public:
    TuneInfeasible(double mu, double lipschitz_product)
        : std::runtime_error("tuning infeasible: mu = " + std::to_string(mu) +
                             " <= L*L1*(l11+l12+l2) = " +
                             std::to_string(lipschitz_product)),
          mu_(mu), product_(lipschitz_product) {}
    double mu() const { return mu_; }
    double lipschitz_product() const { return product_; }

private:
    double mu_;
    double product_;
};

/// Thrown when a tuning sweep exhausts its grid without satisfying its
/// inequality; carries the last iterate for diagnostics.
class TuneSearchFailed : public std::runtime_error {
public:
    TuneSearchFailed(const std::string& stage, double sigma, double a, double b)
        : std::runtime_error("tuning search exhausted during " + stage +
                             " sweep (sigma=" + std::to_string(sigma) +
                             ", a=" + std::to_string(a) +
                             ", b=" + std::to_string(b) + ")"),
          sigma_(sigma), a_(a), b_(b) {}
    double sigma() const { return sigma_; }
    double a() const { return a_; }
    double b() const { return b_; }

private:
    double sigma_, a_, b_;
};

/// Thrown when a simulated state leaves the finite range.
class SimulationDiverged : public std::runtime_error {
public:
    explicit SimulationDiverged(int last_finite_step)
        : std::runtime_error("simulation diverged after step " +
                             std::to_string(last_finite_step)),
          last_finite_step_(last_finite_step) {}
    int last_finite_step() const { return last_finite_step_; }

private:
    int last_finite_step_;
};

/// Configuration validation error naming the offending field.
class ConfigError : public std::runtime_error {
public:
    ConfigError(const std::string& field, const std::string& what)
        : std::runtime_error("config field '" + field + "': " + what),
          field_(field) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

} // namespace etcsim
