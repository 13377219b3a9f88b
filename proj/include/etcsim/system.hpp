// system.hpp - delay system models and dynamics evaluation
#pragma once

#include <Eigen/Dense>
#include <functional>

#include "etcsim/history_window.hpp"
#include "etcsim/lipschitz.hpp"

namespace etcsim {

/// x(k+1) = A1 x(k) + A2 x(k - tau) + B u(k),  u = K x  (feedback gain).
struct LinearDelaySystem {
    Eigen::MatrixXd A1;
    Eigen::MatrixXd A2;
    Eigen::MatrixXd B;
    Eigen::MatrixXd K;
    int tau = 1;

    int state_dim() const { return static_cast<int>(A1.rows()); }
    int input_dim() const { return static_cast<int>(B.cols()); }

    /// Throws std::invalid_argument on inconsistent dimensions.
    void validate() const;
};

/// Scalar system x(k+1) = A1 x(k) + A2 cos(x(k)) sin(x(k-tau)) + B u(k)
/// with feedback u = K x.
struct Example2System {
    double A1 = 1.0;
    double A2 = 0.05;
    double B = 2.0;
    double K = -0.3;
    int tau = 1;
};

/// Generic delay system given as evaluation contracts. Lipschitz data is
/// declared by the caller, never estimated.
struct NonlinearDelaySystem {
    std::function<Eigen::VectorXd(const HistoryWindow&, const Eigen::VectorXd&)> dynamics;
    std::function<Eigen::VectorXd(const Eigen::VectorXd&)> feedback;
    int tau = 0;
    int state_dim = 0;
    int input_dim = 0;
    LipschitzConstants lipschitz;
};

/// A1*window(0) + A2*window(-tau) + B*u
Eigen::VectorXd eval_linear(const LinearDelaySystem& sys, const HistoryWindow& window,
                            const Eigen::VectorXd& u);

/// a1*x(0) + a2*cos(x(0))*sin(x(-1)) + b*u, for scalar tau=1 windows.
double eval_example2(double a1, double a2, double b, const HistoryWindow& window,
                     double u);

/// Largest singular value (the induced 2-norm over Euclidean vector norms).
double induced_norm(const Eigen::MatrixXd& m);

NonlinearDelaySystem make_system(const LinearDelaySystem& sys);
NonlinearDelaySystem make_system(const Example2System& sys);

} // namespace etcsim
