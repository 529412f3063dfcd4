#include "jc/oracles.hpp"

#include <cmath>

namespace jc {

DscClosedForm::DscClosedForm(double g_over_omega, double omega)
    : beta_(g_over_omega), omega_(omega) {
    if (beta_ < 0.0)
        throw std::invalid_argument("DscClosedForm: g/omega must be >= 0");
    if (!(omega_ > 0.0))
        throw std::invalid_argument("DscClosedForm: omega must be > 0");
}

DscClosedForm::DscClosedForm(const JCParams& params)
    : DscClosedForm(params.g / params.omega, params.omega) {
    if (params.omega0 != 0.0)
        throw std::invalid_argument(
            "DscClosedForm: closed forms hold only for omega0 = 0");
}

double DscClosedForm::mean_photon(double t) const {
    const double s = std::sin(omega_ * t / 2.0);
    return 4.0 * beta_ * beta_ * s * s;
}

double DscClosedForm::photon_distribution(int n, double t) const {
    if (n < 0)
        throw std::invalid_argument("photon_distribution: n must be >= 0");
    const double mu = mean_photon(t);
    if (mu == 0.0)
        return n == 0 ? 1.0 : 0.0;
    // log form keeps large n and large mu finite
    const double log_p = -mu + n * std::log(mu) - std::lgamma(n + 1.0);
    return std::exp(log_p);
}

double DscClosedForm::revival_probability(double t) const {
    return std::exp(-mean_photon(t));
}

std::pair<double, double> DscClosedForm::populations(double t) const {
    const double pg = 0.5 * (1.0 + std::exp(-2.0 * mean_photon(t)));
    return {pg, 1.0 - pg};
}

double dsc_mean_photon(double t, double beta, double omega) {
    return DscClosedForm(beta, omega).mean_photon(t);
}

double dsc_photon_distribution(int n, double t, double beta, double omega) {
    return DscClosedForm(beta, omega).photon_distribution(n, t);
}

double dsc_revival_probability(double t, double beta, double omega) {
    return DscClosedForm(beta, omega).revival_probability(t);
}

std::pair<double, double> dsc_populations(double t, double beta, double omega) {
    return DscClosedForm(beta, omega).populations(t);
}

double rwa_frequency(int n, double delta, double g) {
    if (n < 0)
        throw std::invalid_argument("rwa_frequency: n must be >= 0");
    return std::sqrt(g * g * (n + 1.0) + delta * delta / 4.0);
}

std::pair<double, double> rwa_rabi(int n, double delta, double g, double t) {
    if (n % 2 != 0)
        throw std::invalid_argument("rwa_rabi: n must be even");
    const double omega_n = rwa_frequency(n, delta, g);
    if (omega_n == 0.0)
        return {1.0, 0.0};
    const double kappa = g * std::sqrt(n + 1.0);
    const double s = std::sin(omega_n * t);
    const double transfer = (kappa * kappa) / (omega_n * omega_n) * s * s;
    return {1.0 - transfer, transfer};
}

VectorXd wannier_stark_energies(int count, double g, double omega) {
    if (count < 1)
        throw std::invalid_argument("wannier_stark_energies: count must be >= 1");
    if (!(omega > 0.0))
        throw std::invalid_argument("wannier_stark_energies: omega must be > 0");
    VectorXd e(count);
    e[0] = -g * g / omega;
    for (int l = 1; l < count; ++l)
        e[l] = e[l - 1] + omega;  // consecutive spacing exactly omega
    return e;
}

}  // namespace jc
