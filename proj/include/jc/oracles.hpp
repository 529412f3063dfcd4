#pragma once

#include <utility>

#include "jc/types.hpp"

namespace jc {

/// Closed-form reference dynamics for the degenerate-qubit (omega0 = 0)
/// regime with the chain-F site-0 initial state. Valid only there; the
/// constructor refuses omega0 != 0.
class DscClosedForm {
public:
    DscClosedForm(double g_over_omega, double omega);
    explicit DscClosedForm(const JCParams& params);

    double beta() const { return beta_; }
    double omega() const { return omega_; }

    double mean_photon(double t) const;            // 4 beta^2 sin^2(omega t / 2)
    double photon_distribution(int n, double t) const;  // Poisson at mean_photon(t)
    double revival_probability(double t) const;    // exp(-mean_photon(t))
    std::pair<double, double> populations(double t) const;  // (P_g, P_e)

private:
    double beta_;
    double omega_;
};

double dsc_mean_photon(double t, double beta, double omega);
double dsc_photon_distribution(int n, double t, double beta, double omega);
double dsc_revival_probability(double t, double beta, double omega);
std::pair<double, double> dsc_populations(double t, double beta, double omega);

/// Two-site Rabi solution in the rotating wave approximation, for the pair
/// of states |e>|n> and |g>|n+1> (chain-C labeling, n even) starting from
/// theta_n(0) = 1. Returns (|theta_n|^2, |theta_{n+1}|^2) with
/// Omega_n = sqrt(g^2 (n+1) + (Delta/2)^2), Delta = omega - omega0.
std::pair<double, double> rwa_rabi(int n, double delta, double g, double t);

/// Rabi frequency Omega_n of the pair (n, n+1).
double rwa_frequency(int n, double delta, double g);

/// Wannier-Stark ladder E_l = l omega - g^2 / omega, l = 0..L-1
/// (omega0 = 0 chain spectrum).
VectorXd wannier_stark_energies(int count, double g, double omega);

}  // namespace jc
