#include "etcsim/system.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <stdexcept>

namespace etcsim {

void LinearDelaySystem::validate() const {
    const auto n = A1.rows();
    if (A1.cols() != n || A2.rows() != n || A2.cols() != n)
        throw std::invalid_argument("LinearDelaySystem: A1/A2 must be n x n");
    if (B.rows() != n)
        throw std::invalid_argument("LinearDelaySystem: B must have n rows");
    if (K.rows() != B.cols() || K.cols() != n)
        throw std::invalid_argument("LinearDelaySystem: K must be m x n");
    if (tau < 0)
        throw std::invalid_argument("LinearDelaySystem: tau must be >= 0");
    if (!A1.allFinite() || !A2.allFinite() || !B.allFinite() || !K.allFinite())
        throw std::invalid_argument("LinearDelaySystem: matrices must be finite");
}

Eigen::VectorXd eval_linear(const LinearDelaySystem& sys, const HistoryWindow& window,
                            const Eigen::VectorXd& u) {
    if (window.tau() != sys.tau || window.dim() != sys.state_dim())
        throw std::invalid_argument("eval_linear: window does not match system");
    if (u.size() != sys.input_dim())
        throw std::invalid_argument("eval_linear: input dimension mismatch");
    return sys.A1 * window.current() + sys.A2 * window.oldest() + sys.B * u;
}

double eval_example2(double a1, double a2, double b, const HistoryWindow& window,
                     double u) {
    if (window.dim() != 1)
        throw std::invalid_argument("eval_example2: state must be scalar");
    if (window.tau() != 1)
        throw std::invalid_argument("eval_example2: tau must be 1");
    const double xk = window.current()(0);
    const double xd = window.at(-1)(0);
    return a1 * xk + a2 * std::cos(xk) * std::sin(xd) + b * u;
}

double induced_norm(const Eigen::MatrixXd& m) {
    if (!m.allFinite())
        throw std::invalid_argument("induced_norm: matrix must be finite");
    if (m.size() == 0) return 0.0;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    return svd.singularValues()(0);
}

NonlinearDelaySystem make_system(const LinearDelaySystem& sys) {
    sys.validate();
    NonlinearDelaySystem out;
    out.tau = sys.tau;
    out.state_dim = sys.state_dim();
    out.input_dim = sys.input_dim();
    out.dynamics = [sys](const HistoryWindow& w, const Eigen::VectorXd& u) {
        return eval_linear(sys, w, u);
    };
    out.feedback = [gain = sys.K](const Eigen::VectorXd& x) -> Eigen::VectorXd {
        return gain * x;
    };
    out.lipschitz.l11 = induced_norm(
        Eigen::MatrixXd::Identity(sys.state_dim(), sys.state_dim()) - sys.A1);
    out.lipschitz.l12 = induced_norm(sys.A2);
    out.lipschitz.l2 = induced_norm(sys.B * sys.K);
    out.lipschitz.chi = out.lipschitz.l2;
    out.lipschitz.alpha1_inv = 1.0;
    return out;
}

NonlinearDelaySystem make_system(const Example2System& sys) {
    NonlinearDelaySystem out;
    out.tau = sys.tau;
    out.state_dim = 1;
    out.input_dim = 1;
    out.dynamics = [sys](const HistoryWindow& w, const Eigen::VectorXd& u) {
        Eigen::VectorXd next(1);
        next(0) = eval_example2(sys.A1, sys.A2, sys.B, w, u(0));
        return next;
    };
    out.feedback = [gain = sys.K](const Eigen::VectorXd& x) -> Eigen::VectorXd {
        return gain * x;
    };
    out.lipschitz.l11 = std::abs(1.0 - sys.A1);
    out.lipschitz.l12 = std::abs(sys.A2);
    out.lipschitz.l2 = std::abs(sys.B * sys.K);
    out.lipschitz.chi = out.lipschitz.l2;
    out.lipschitz.alpha1_inv = 1.0;
    return out;
}

} // namespace etcsim
