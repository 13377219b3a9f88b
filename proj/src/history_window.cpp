#include "etcsim/history_window.hpp"

#include <stdexcept>

namespace etcsim {

HistoryWindow::HistoryWindow(int tau, int dim)
    : tau_(tau), dim_(dim), head_(0) {
    if (tau < 0) throw std::invalid_argument("HistoryWindow: tau must be >= 0");
    if (dim < 1) throw std::invalid_argument("HistoryWindow: dim must be >= 1");
    states_.assign(tau_ + 1, Eigen::VectorXd::Zero(dim_));
}

HistoryWindow HistoryWindow::constant(int tau, const Eigen::VectorXd& state) {
    HistoryWindow w(tau, static_cast<int>(state.size()));
    for (auto& s : w.states_) s = state;
    return w;
}

HistoryWindow HistoryWindow::from_states(const std::vector<Eigen::VectorXd>& states) {
    if (states.empty())
        throw std::invalid_argument("HistoryWindow: need at least one state");
    HistoryWindow w(static_cast<int>(states.size()) - 1,
                    static_cast<int>(states.front().size()));
    for (std::size_t i = 0; i < states.size(); ++i) {
        w.check_dim(states[i]);
        w.states_[i] = states[i];
    }
    return w;
}

const Eigen::VectorXd& HistoryWindow::at(int offset) const {
    if (offset < -tau_ || offset > 0)
        throw std::invalid_argument("HistoryWindow: offset out of [-tau, 0]");
    // head_ holds offset -tau; offset s lives tau+s slots further on.
    return states_[(head_ + tau_ + offset) % (tau_ + 1)];
}

double HistoryWindow::window_norm() const {
    double m = 0.0;
    for (const auto& s : states_) m = std::max(m, s.stableNorm());
    return m;
}

double HistoryWindow::past_norm() const {
    double m = 0.0;
    for (int s = -tau_; s < 0; ++s) m = std::max(m, at(s).stableNorm());
    return m;
}

HistoryWindow HistoryWindow::shifted(const Eigen::VectorXd& next) const {
    HistoryWindow w(*this);
    w.push(next);
    return w;
}

void HistoryWindow::push(const Eigen::VectorXd& next) {
    check_dim(next);
    // Oldest slot becomes the new offset-0 entry; head advances.
    states_[head_] = next;
    head_ = (head_ + 1) % (tau_ + 1);
}

void HistoryWindow::check_dim(const Eigen::VectorXd& v) const {
    if (v.size() != dim_)
        throw std::invalid_argument("HistoryWindow: state dimension mismatch");
}

} // namespace etcsim
