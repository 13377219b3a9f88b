// tuner.hpp - trigger-parameter synthesis and nontriviality conditions
#pragma once

#include "etcsim/certificate.hpp"
#include "etcsim/history_window.hpp"
#include "etcsim/lipschitz.hpp"
#include "etcsim/system.hpp"
#include "etcsim/trigger.hpp"

namespace etcsim {

/// Trigger parameters with the constants entering the state and Lyapunov
/// bounds. m_tilde and m_bar depend on the initial function, so a result is
/// specific to the phi it was computed for.
struct TunerResult {
    double sigma = 0.0;
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;        // mu - sigma
    double m_tilde = 0.0;  // alpha2(||phi(0)||) + alpha3(past norm of phi)
    double m_bar = 0.0;
    double m = 0.0;        // m_bar + m_tilde
    double xi = 0.0;       // only meaningful when b = c
    bool nontrivial_certified = false;

    /// Decay rate of the Lyapunov envelope: min{b, c}, or xi when b = c.
    double eta() const { return b == c ? xi : std::min(b, c); }

    TriggerParams params(TriggerMode mode = TriggerMode::full) const {
        return TriggerParams{sigma, a, b, mode};
    }
};

/// The geometric-sum majorant of the forced Lyapunov recursion:
///   a*L/|c-b|                                   when b != c,
///   a*L/((1-c)(ln(1-xi) - ln(1-c)))             when b = c, 0 < xi < b.
/// a = 0 yields 0 in either branch.
double compute_m_bar(double a, double L, double b, double c, double xi = 0.0);

/// (1-eta)^k (v0 + m_bar): the closed-form bound on V(x_k) implied by the
/// recursion V(x_{k+1}) <= (1-c) V(x_k) + a L (1-b)^k.
double lyapunov_envelope(double v0, double a, double L, double b, double c,
                         double xi, int k);

enum class NontrivialityVariant { split, combined };

/// split:    a >= (m L1/(1-b)) (l11 + l12/(1-b)^tau + l2)
/// combined: a >= (m L1/(1-b)) ((l11 + l12)/(1-b)^tau + l2)
/// combined is the more conservative of the two.
bool check_nontriviality(const TriggerParams& params, const LipschitzConstants& consts,
                         double m, int tau, NontrivialityVariant variant);

/// Closed-form feasibility test for tau = 1 linear systems:
///   2 - q - sqrt(q^2 + 4||A2||) >= 2||BK||(||I-A1|| + ||A2|| + ||BK||),
/// with q = ||A1+BK||. Guarantees tunable parameters exist.
bool check_linear_feasibility(const LinearDelaySystem& sys);

/// Lipschitz data of the displacement map for a linear system:
/// l11 = ||I-A1||, l12 = ||A2||, l2 = chi = ||BK||, alpha1_inv = 1.
LipschitzConstants linear_lipschitz(const LinearDelaySystem& sys);
LipschitzConstants example2_lipschitz(const Example2System& sys);

/// Selects (sigma, a, b) for which the event sequence is strongly
/// nontrivial, sweeping the three inequalities of the constructive
/// procedure in order:
///   sigma down from mu/2 until c = mu - sigma clears the Lipschitz product
///   with room for the next stage, then a up from m_tilde until
///   1 > L1 (l11+l12+l2)(L/c + m_tilde/a) holds with margin 0.95, then
///   b down from c/2 until
///   1 >= (L1/(1-b))(l11 + l12/(1-b)^tau + l2)(L/(c-b) + m_tilde/a).
/// Deterministic; throws TuneInfeasible when mu <= L*L1*(l11+l12+l2).
TunerResult tune(double mu, const LipschitzConstants& consts, const HistoryWindow& phi,
                 const KrasovskiiCertificate& cert, int tau);

/// Re-validates caller-supplied trigger parameters: computes c, m_tilde,
/// m_bar, m for them and runs the split nontriviality check.
TunerResult assess(const TriggerParams& params, double mu,
                   const LipschitzConstants& consts, const HistoryWindow& phi,
                   const KrasovskiiCertificate& cert, int tau);

} // namespace etcsim
