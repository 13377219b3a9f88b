#include "etcsim/tuner.hpp"

#include <cmath>
#include <stdexcept>

#include "etcsim/errors.hpp"

namespace etcsim {

double compute_m_bar(double a, double L, double b, double c, double xi) {
    if (!(b > 0.0 && b < 1.0))
        throw std::invalid_argument("compute_m_bar: b must lie in (0, 1)");
    if (!(c > 0.0 && c < 1.0))
        throw std::invalid_argument("compute_m_bar: c must lie in (0, 1)");
    if (a == 0.0) return 0.0;
    if (b != c) return a * L / std::abs(c - b);
    if (!(xi > 0.0 && xi < b))
        throw std::invalid_argument("compute_m_bar: b = c requires xi in (0, b)");
    return a * L / ((1.0 - c) * (std::log1p(-xi) - std::log1p(-c)));
}

double lyapunov_envelope(double v0, double a, double L, double b, double c,
                         double xi, int k) {
    const double m_bar = compute_m_bar(a, L, b, c, xi);
    const double eta = (b == c) ? xi : std::min(b, c);
    return std::pow(1.0 - eta, k) * (v0 + m_bar);
}

bool check_nontriviality(const TriggerParams& params, const LipschitzConstants& consts,
                         double m, int tau, NontrivialityVariant variant) {
    if (!(params.b > 0.0 && params.b < 1.0))
        throw std::invalid_argument("check_nontriviality: b must lie in (0, 1)");
    const double decay = std::pow(1.0 - params.b, tau);
    const double factor =
        variant == NontrivialityVariant::split
            ? consts.l11 + consts.l12 / decay + consts.l2
            : (consts.l11 + consts.l12) / decay + consts.l2;
    const double rhs = m * consts.alpha1_inv / (1.0 - params.b) * factor;
    return params.a >= rhs;
}

bool check_linear_feasibility(const LinearDelaySystem& sys) {
    sys.validate();
    if (sys.tau != 1)
        throw std::invalid_argument("check_linear_feasibility: requires tau = 1");
    const auto bk = sys.B * sys.K;
    const double q = induced_norm(sys.A1 + bk);
    const double a2n = induced_norm(sys.A2);
    const double bkn = induced_norm(bk);
    const double ia1 = induced_norm(
        Eigen::MatrixXd::Identity(sys.state_dim(), sys.state_dim()) - sys.A1);
    const double lhs = 2.0 - q - std::sqrt(q * q + 4.0 * a2n);
    const double rhs = 2.0 * bkn * (ia1 + a2n + bkn);
    return lhs >= rhs;
}

LipschitzConstants linear_lipschitz(const LinearDelaySystem& sys) {
    return make_system(sys).lipschitz;
}

LipschitzConstants example2_lipschitz(const Example2System& sys) {
    return make_system(sys).lipschitz;
}

namespace {

double m_tilde_of(const KrasovskiiCertificate& cert, const HistoryWindow& phi) {
    return cert.alpha2(phi.current().stableNorm()) + cert.alpha3(phi.past_norm());
}

TunerResult finish(double sigma, double a, double b, double mu, double m_tilde,
                   const LipschitzConstants& consts, int tau) {
    TunerResult r;
    r.sigma = sigma;
    r.a = a;
    r.b = b;
    r.c = mu - sigma;
    r.m_tilde = m_tilde;
    r.xi = b / 2.0;
    r.m_bar = compute_m_bar(a, consts.chi, b, r.c, r.xi);
    r.m = r.m_bar + r.m_tilde;
    r.nontrivial_certified =
        b < r.c && check_nontriviality(r.params(), consts, r.m, tau,
                                       NontrivialityVariant::split);
    return r;
}

} // namespace

TunerResult tune(double mu, const LipschitzConstants& consts, const HistoryWindow& phi,
                 const KrasovskiiCertificate& cert, int tau) {
    const double S = consts.sum();
    const double L = consts.chi;
    const double L1 = consts.alpha1_inv;
    const double product = L * L1 * S;
    if (!(mu > product)) throw TuneInfeasible(mu, product);

    constexpr int kMaxSteps = 200;
    constexpr double kMargin = 0.95;

    // Stage 1: sigma down from mu/2 until c clears the Lipschitz product and
    // leaves the next inequality attainable at its margin.
    double sigma = 0.5 * mu;
    bool ok = false;
    for (int i = 0; i < kMaxSteps; ++i) {
        const double c = mu - sigma;
        if (c > product && L1 * S * L / c <= kMargin) {
            ok = true;
            break;
        }
        sigma *= 0.5;
    }
    if (!ok) throw TuneSearchFailed("sigma", sigma, 0.0, 0.0);
    const double c = mu - sigma;

    const double m_tilde = m_tilde_of(cert, phi);

    // Stage 2: a up from m_tilde (or 1 for a zero initial function).
    double a = m_tilde > 0.0 ? m_tilde : 1.0;
    ok = false;
    for (int i = 0; i < kMaxSteps; ++i) {
        if (L1 * S * (L / c + m_tilde / a) <= kMargin) {
            ok = true;
            break;
        }
        a *= 2.0;
    }
    if (!ok) throw TuneSearchFailed("a", sigma, a, 0.0);

    // Stage 3: b down from c/2.
    double b = 0.5 * c;
    ok = false;
    for (int i = 0; i < kMaxSteps; ++i) {
        const double decay = std::pow(1.0 - b, tau);
        const double lhs = L1 / (1.0 - b) *
                           (consts.l11 + consts.l12 / decay + consts.l2) *
                           (L / (c - b) + m_tilde / a);
        if (lhs <= 1.0) {
            ok = true;
            break;
        }
        b *= 0.5;
    }
    if (!ok) throw TuneSearchFailed("b", sigma, a, b);

    TunerResult r = finish(sigma, a, b, mu, m_tilde, consts, tau);
    if (!r.nontrivial_certified) throw TuneSearchFailed("validation", sigma, a, b);
    return r;
}

TunerResult assess(const TriggerParams& params, double mu,
                   const LipschitzConstants& consts, const HistoryWindow& phi,
                   const KrasovskiiCertificate& cert, int tau) {
    params.validate();
    const double c = mu - params.sigma;
    TunerResult r;
    r.sigma = params.sigma;
    r.a = params.a;
    r.b = params.b;
    r.c = c;
    r.m_tilde = m_tilde_of(cert, phi);
    r.xi = params.b / 2.0;
    if (c > 0.0 && c < 1.0) {
        r.m_bar = compute_m_bar(params.a, consts.chi, params.b, c, r.xi);
        r.m = r.m_bar + r.m_tilde;
        r.nontrivial_certified =
            params.b < c && params.a > 0.0 &&
            check_nontriviality(params, consts, r.m, tau, NontrivialityVariant::split);
    } else {
        // No decrement margin left; the run is not certified.
        r.m_bar = 0.0;
        r.m = r.m_tilde;
        r.nontrivial_certified = false;
    }
    return r;
}

} // namespace etcsim
