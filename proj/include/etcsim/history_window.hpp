// history_window.hpp - delayed state history x_k over offsets -tau..0
#pragma once

#include <Eigen/Dense>
#include <vector>

namespace etcsim {

/// Fixed-length history of states indexed by offset s in {-tau, ..., 0}.
/// Stored as a ring buffer so advancing by one step does not rotate the
/// underlying storage. Treated as a value: shifted() returns a new window,
/// push() mutates and is meant for a buffer owned by a single simulation.
class HistoryWindow {
public:
    /// Zero window of the given delay and state dimension.
    HistoryWindow(int tau, int dim);

    /// Window with every offset equal to `state` (constant initial function).
    static HistoryWindow constant(int tau, const Eigen::VectorXd& state);

    /// Window from explicit states ordered oldest first (offset -tau first).
    static HistoryWindow from_states(const std::vector<Eigen::VectorXd>& states);

    int tau() const { return tau_; }
    int dim() const { return dim_; }

    /// State at offset s, s in [-tau, 0].
    const Eigen::VectorXd& at(int offset) const;
    const Eigen::VectorXd& current() const { return at(0); }
    const Eigen::VectorXd& oldest() const { return at(-tau_); }

    /// max_{s in [-tau,0]} ||x(s)||  (Euclidean, overflow/underflow safe)
    double window_norm() const;
    /// max_{s in [-tau,-1]} ||x(s)||; zero for tau = 0.
    double past_norm() const;

    /// New window with offsets advanced by one and `next` at offset 0.
    HistoryWindow shifted(const Eigen::VectorXd& next) const;

    /// In-place advance; only valid on a window owned by one simulation run.
    void push(const Eigen::VectorXd& next);

private:
    int tau_;
    int dim_;
    int head_;  // storage index of offset -tau
    std::vector<Eigen::VectorXd> states_;

    void check_dim(const Eigen::VectorXd& v) const;
};

} // namespace etcsim
