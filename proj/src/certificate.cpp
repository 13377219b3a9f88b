#include "etcsim/certificate.hpp"

#include <cmath>
#include <stdexcept>

#include "etcsim/errors.hpp"

namespace etcsim {

KrasovskiiCertificate KrasovskiiCertificate::linear_form(double mu, double eps,
                                                         double gain) {
    if (eps < 0.0) throw std::invalid_argument("certificate: eps must be >= 0");
    if (gain < 0.0) throw std::invalid_argument("certificate: gain must be >= 0");
    KrasovskiiCertificate c;
    c.mu = mu;
    c.eps = eps;
    c.chi_lipschitz = gain;
    c.alpha1_inv_lipschitz = 1.0;
    c.alpha1 = [](double r) { return r; };
    c.alpha2 = [](double r) { return r; };
    c.alpha3 = [eps](double r) { return eps * r; };
    c.chi = [gain](double r) { return gain * r; };
    c.alpha1_inv = [](double r) { return r; };
    // gain = 0 collapses chi to the zero map; its inverse is only used for
    // the plotted threshold column, where 0 is the right degenerate value.
    c.chi_inv = [gain](double r) { return gain > 0.0 ? r / gain : 0.0; };
    return c;
}

LinearCertificate derive_linear_certificate(const LinearDelaySystem& sys) {
    sys.validate();
    if (sys.tau != 1)
        throw std::invalid_argument("derive_linear_certificate: requires tau = 1");
    const double q = induced_norm(sys.A1 + sys.B * sys.K);
    const double a2n = induced_norm(sys.A2);
    const double root = std::sqrt(q * q + 4.0 * a2n);
    const double mu = 0.5 * (2.0 - q - root);
    if (mu <= 0.0) throw CertificateInfeasible(mu);
    const double eps = 0.5 * (-q + root);
    LinearCertificate out;
    out.bk_norm = induced_norm(sys.B * sys.K);
    out.cert = KrasovskiiCertificate::linear_form(mu, eps, out.bk_norm);
    return out;
}

KrasovskiiCertificate example2_certificate(const Example2System& sys, double eps) {
    if (eps <= 0.0)
        throw std::invalid_argument("example2_certificate: eps must be > 0");
    const double a1bk = std::abs(sys.A1 + sys.B * sys.K);
    const double mu = std::min(1.0 - eps - a1bk, 1.0 - std::abs(sys.A2) / eps);
    if (mu <= 0.0) throw CertificateInfeasible(mu);
    return KrasovskiiCertificate::linear_form(mu, eps, std::abs(sys.B * sys.K));
}

double evaluate_V(const KrasovskiiCertificate& cert, const HistoryWindow& window) {
    if (window.tau() > 1)
        throw std::invalid_argument("evaluate_V: only tau <= 1 windows supported");
    double v = window.current().stableNorm();
    if (window.tau() == 1) v += cert.eps * window.at(-1).stableNorm();
    return v;
}

std::vector<BoundViolation> check_iss_decrement(const KrasovskiiCertificate& cert,
                                                const SimTrace& trace) {
    constexpr double kTol = 1e-9;
    std::vector<BoundViolation> out;
    for (std::size_t i = 0; i + 1 < trace.rows.size(); ++i) {
        const auto& row = trace.rows[i];
        const auto& next = trace.rows[i + 1];
        if (!row.v || !next.v)
            throw std::invalid_argument("check_iss_decrement: trace lacks V values");
        const double lhs = *next.v - *row.v;
        const double rhs = -cert.mu * *row.v + cert.chi(row.e_norm);
        if (lhs > rhs + kTol) out.push_back({row.k, lhs, rhs});
    }
    return out;
}

} // namespace etcsim
