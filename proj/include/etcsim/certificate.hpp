// certificate.hpp - Lyapunov-Krasovskii certificates and their checks
#pragma once

#include <functional>

#include "etcsim/history_window.hpp"
#include "etcsim/system.hpp"
#include "etcsim/trace.hpp"

namespace etcsim {

using ScalarMap = std::function<double(double)>;

/// Data certifying the one-step decrement
///   V(x_{k+1}) - V(x_k) <= -mu V(x_k) + chi(||e(k)||)
/// for V(phi) = V1(phi(0)) + V2(past), together with the comparison maps
/// alpha1 <= V1 <= alpha2 and V2 <= alpha3. Certificates are values; the
/// maps are pure, so sharing across threads is safe.
struct KrasovskiiCertificate {
    double mu = 0.0;                  // decrement rate, in [0, 1)
    double eps = 0.0;                 // weight of the delayed term in V
    double chi_lipschitz = 0.0;       // L, Lipschitz constant of chi
    double alpha1_inv_lipschitz = 1.0;// L1, Lipschitz constant of alpha1^{-1}

    ScalarMap alpha1, alpha2, alpha3; // class-K-infinity comparison maps
    ScalarMap chi;                    // input gain map (class K)
    ScalarMap alpha1_inv;             // inverse of alpha1
    ScalarMap chi_inv;                // inverse of chi (used for plotting units)

    /// Family used throughout: alpha1 = alpha2 = id, alpha3 = eps*r,
    /// chi = gain*r. `gain` is ||BK|| in the linear case.
    static KrasovskiiCertificate linear_form(double mu, double eps, double gain);
};

/// Closed-form certificate for a tau = 1 linear system.
struct LinearCertificate {
    KrasovskiiCertificate cert;
    double bk_norm = 0.0;
};

/// Derives eps and mu from ||A1+BK|| and ||A2||:
///   eps = ( -q + sqrt(q^2 + 4 ||A2||) ) / 2,   q = ||A1+BK||
///   mu  = ( 2 - q - sqrt(q^2 + 4 ||A2||) ) / 2
/// Throws CertificateInfeasible when mu <= 0.
LinearCertificate derive_linear_certificate(const LinearDelaySystem& sys);

/// Certificate for the scalar nonlinear system with a caller-chosen eps:
/// mu = min{ 1 - eps - |A1 + BK|, 1 - |A2| / eps }.
KrasovskiiCertificate example2_certificate(const Example2System& sys, double eps = 0.1);

/// V(window) = ||window(0)|| + eps * ||window(-1)||  (tau <= 1 form).
double evaluate_V(const KrasovskiiCertificate& cert, const HistoryWindow& window);

/// Checks the decrement inequality along a trace that recorded V;
/// returns every step k where it fails by more than 1e-9.
std::vector<BoundViolation> check_iss_decrement(const KrasovskiiCertificate& cert,
                                                const SimTrace& trace);

} // namespace etcsim
