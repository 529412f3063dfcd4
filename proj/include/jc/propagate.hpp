#pragma once

#include <optional>
#include <vector>

#include "jc/types.hpp"

namespace jc {

/// Uniform output sampling, endpoints included.
struct TimeGrid {
    double t_start = 0.0;
    double t_end = 1.0;
    int n_samples = 2;

    void validate() const {
        if (!(t_end > t_start))
            throw std::invalid_argument("TimeGrid: t_end must exceed t_start");
        if (n_samples < 2)
            throw std::invalid_argument("TimeGrid: n_samples must be >= 2");
    }

    VectorXd times() const {
        validate();
        return VectorXd::LinSpaced(n_samples, t_start, t_end);
    }
};

struct Trajectory {
    TimeGrid grid;
    std::vector<VectorXcd> states;
    Basis basis = Basis::Chain;
    std::optional<ChainId> chain;  // set when evolved under a ChainHamiltonian
};

/// Full eigendecomposition of a real symmetric operator, reusable across
/// many initial states. Immutable once computed.
class SpectralDecomposition {
public:
    explicit SpectralDecomposition(const ChainHamiltonian& h);
    explicit SpectralDecomposition(const MatrixXd& h);

    const VectorXd& eigenvalues() const { return evals_; }
    const MatrixXd& eigenvectors() const { return evecs_; }

    /// psi(t) = sum_k exp(-i E_k t) <v_k|psi0> v_k
    VectorXcd evolve(const VectorXcd& psi0, double t) const;

private:
    VectorXd evals_;
    MatrixXd evecs_;
};

Trajectory spectral_propagate(const ChainHamiltonian& h, const StateVector& psi0,
                              const TimeGrid& grid);
Trajectory spectral_propagate(const MatrixXd& h, const StateVector& psi0,
                              const TimeGrid& grid);

/// Fixed-step RK4 integration of dpsi/dt = -i H psi, step <= dt_max.
/// Independent cross-check of the spectral route.
Trajectory stepper_propagate(const ChainHamiltonian& h, const StateVector& psi0,
                             const TimeGrid& grid, double dt_max);
Trajectory stepper_propagate(const MatrixXd& h, const StateVector& psi0,
                             const TimeGrid& grid, double dt_max);

/// Smallest tested truncation N (successive doubling from 16, cap 2^14)
/// such that doubling changes no observable sample by tail_tol or more and
/// the top 10% of sites stay below tail_tol population. Evolves chain F
/// from site 0 over [0, horizon].
int choose_truncation(const JCParams& params, double horizon, double tail_tol);

struct ObservableSeries {
    VectorXd times;
    VectorXd p_g;
    VectorXd p_e;
    VectorXd p_rev;
    MatrixXd photon_dist;  // n_samples x N, row per sample
};

/// Qubit populations, photon distribution and revival probability along a
/// trajectory. On chain F even sites are |g> components and odd sites |e>;
/// on chain C the assignment is reversed. Product-basis trajectories use
/// P_g = sum |b_n|^2, P_e = sum |a_n|^2, P_rev = |<psi(0)|psi(t)>|^2.
ObservableSeries extract_observables(const Trajectory& traj, ChainId chain);

/// <n>(t) from a photon distribution row.
double mean_photon_number(const Eigen::Ref<const VectorXd>& dist_row);

}  // namespace jc
