// lipschitz.hpp - Lipschitz data carried alongside a system / certificate
#pragma once

namespace etcsim {

/// Lipschitz constants of the one-step displacement map
/// (phi, x) -> phi(0) - f(phi, p(x)) together with the chi and
/// alpha1-inverse constants used by the nontriviality conditions.
struct LipschitzConstants {
    double l11 = 0.0;        // coefficient of ||phi(0)||
    double l12 = 0.0;        // coefficient of the past-window norm
    double l2 = 0.0;         // coefficient of ||x||
    double chi = 0.0;        // Lipschitz constant of chi on [0, a]
    double alpha1_inv = 1.0; // Lipschitz constant of alpha1^{-1} on [0, M]

    double sum() const { return l11 + l12 + l2; }
};

} // namespace etcsim
