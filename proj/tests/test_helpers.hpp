// test_helpers.hpp - shared fixtures for the test suites
#pragma once

#include <random>

#include "etcsim/experiment.hpp"
#include "etcsim/system.hpp"

namespace etcsim::testing {

/// The 2-state linear benchmark system used across the suites.
inline LinearDelaySystem example1() { return reference_linear_system(); }

/// The scalar nonlinear benchmark (defaults already match).
inline Example2System example2() { return Example2System{}; }

inline Eigen::VectorXd vec2(double a, double b) {
    Eigen::VectorXd v(2);
    v << a, b;
    return v;
}

inline Eigen::VectorXd vec1(double a) {
    Eigen::VectorXd v(1);
    v << a;
    return v;
}

inline Eigen::VectorXd random_vector(std::mt19937& rng, int n, double lo = -2.0,
                                     double hi = 2.0) {
    std::uniform_real_distribution<double> dist(lo, hi);
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v(i) = dist(rng);
    return v;
}

inline Eigen::MatrixXd random_matrix(std::mt19937& rng, int rows, int cols,
                                     double lo = -1.0, double hi = 1.0) {
    std::uniform_real_distribution<double> dist(lo, hi);
    Eigen::MatrixXd m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m(r, c) = dist(rng);
    return m;
}

/// Random stable-by-construction linear delay system; feasibility is not
/// guaranteed, callers filter with check_linear_feasibility.
inline LinearDelaySystem random_linear_system(std::mt19937& rng) {
    std::uniform_int_distribution<int> ndist(1, 3);
    std::uniform_real_distribution<double> ddist(0.9, 1.05);
    std::uniform_real_distribution<double> gdist(0.35, 0.55);
    const int n = ndist(rng);
    LinearDelaySystem sys;
    sys.A1 = ddist(rng) * Eigen::MatrixXd::Identity(n, n) +
             random_matrix(rng, n, n, -0.02, 0.02);
    sys.A2 = random_matrix(rng, n, n, -0.008, 0.008);
    sys.B = Eigen::MatrixXd::Identity(n, n);
    sys.K = -gdist(rng) * Eigen::MatrixXd::Identity(n, n) +
            random_matrix(rng, n, n, -0.01, 0.01);
    sys.tau = 1;
    return sys;
}

} // namespace etcsim::testing
