// trace.hpp - simulation trace records and violation reports
#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

namespace etcsim {

struct TraceRow {
    int k = 0;
    Eigen::VectorXd x;
    Eigen::VectorXd u;
    double e_norm = 0.0;     // ||x(k_i) - x(k)||, zero at event rows
    double threshold = 0.0;  // error-norm-units trigger threshold at k
    bool is_event = false;
    std::optional<double> v; // Lyapunov functional V(x_k), when recorded
};

struct SimTrace {
    std::vector<TraceRow> rows;      // k = 0..horizon
    std::vector<int> event_times;    // strictly increasing, starts at 0
};

/// One step where a checked inequality failed: value > bound (+ tolerance).
struct BoundViolation {
    int k = 0;
    double value = 0.0;
    double bound = 0.0;
};

} // namespace etcsim
