#include "jc/propagate.hpp"

#include <cmath>
#include <cstdint>

#include "jc/model.hpp"

namespace jc {

namespace {

constexpr double kNormTol = 1e-9;
constexpr std::int64_t kMaxSteps = 100'000'000;

VectorXcd real_mat_apply(const MatrixXd& m, const VectorXcd& v) {
    VectorXcd out(m.rows());
    out.real() = m * v.real();
    out.imag() = m * v.imag();
    return out;
}

void check_normalized(const StateVector& psi0) {
    if (std::abs(psi0.norm() - 1.0) > kNormTol)
        throw std::invalid_argument("propagate: initial state is not normalized");
}

// y = H x for a real symmetric tridiagonal operator, O(N)
VectorXcd tridiag_apply(const ChainHamiltonian& h, const VectorXcd& x) {
    const int n = h.size();
    VectorXcd y = h.diag.array() * x.array();
    y.head(n - 1) += (h.offdiag.array() * x.tail(n - 1).array()).matrix();
    y.tail(n - 1) += (h.offdiag.array() * x.head(n - 1).array()).matrix();
    return y;
}

template <typename ApplyH>
Trajectory rk4_propagate(ApplyH&& apply_h, const StateVector& psi0,
                         const TimeGrid& grid, double dt_max) {
    grid.validate();
    check_normalized(psi0);
    if (!(dt_max > 0.0))
        throw std::invalid_argument("stepper_propagate: dt_max must be > 0");

    const VectorXd times = grid.times();
    const double span = grid.t_end - grid.t_start;
    if (static_cast<double>(std::ceil(span / dt_max)) > static_cast<double>(kMaxSteps))
        throw ConvergenceError("stepper_propagate: step count would exceed 1e8");

    const complexd minus_i(0.0, -1.0);
    auto rhs = [&](const VectorXcd& psi) -> VectorXcd { return minus_i * apply_h(psi); };

    Trajectory traj;
    traj.grid = grid;
    traj.basis = psi0.basis;
    traj.states.reserve(grid.n_samples);
    traj.states.push_back(psi0.amps);

    VectorXcd psi = psi0.amps;
    for (int s = 1; s < grid.n_samples; ++s) {
        const double seg = times[s] - times[s - 1];
        const int n_steps = std::max(1, static_cast<int>(std::ceil(seg / dt_max)));
        const double dt = seg / n_steps;
        for (int k = 0; k < n_steps; ++k) {
            const VectorXcd k1 = rhs(psi);
            const VectorXcd k2 = rhs(psi + 0.5 * dt * k1);
            const VectorXcd k3 = rhs(psi + 0.5 * dt * k2);
            const VectorXcd k4 = rhs(psi + dt * k3);
            psi += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        }
        traj.states.push_back(psi);
    }
    return traj;
}

Trajectory sample_spectral(const SpectralDecomposition& eig, const StateVector& psi0,
                           const TimeGrid& grid) {
    grid.validate();
    check_normalized(psi0);
    const VectorXd times = grid.times();

    Trajectory traj;
    traj.grid = grid;
    traj.basis = psi0.basis;
    traj.states.reserve(grid.n_samples);
    for (int s = 0; s < grid.n_samples; ++s)
        traj.states.push_back(eig.evolve(psi0.amps, times[s]));
    return traj;
}

}  // namespace

SpectralDecomposition::SpectralDecomposition(const ChainHamiltonian& h) {
    Eigen::SelfAdjointEigenSolver<MatrixXd> solver;
    solver.computeFromTridiagonal(h.diag, h.offdiag, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success)
        throw ConvergenceError("SpectralDecomposition: tridiagonal eigensolver failed");
    evals_ = solver.eigenvalues();
    evecs_ = solver.eigenvectors();
}

SpectralDecomposition::SpectralDecomposition(const MatrixXd& h) {
    if (h.rows() != h.cols())
        throw std::invalid_argument("SpectralDecomposition: operator not square");
    Eigen::SelfAdjointEigenSolver<MatrixXd> solver(h);
    if (solver.info() != Eigen::Success)
        throw ConvergenceError("SpectralDecomposition: eigensolver failed");
    evals_ = solver.eigenvalues();
    evecs_ = solver.eigenvectors();
}

VectorXcd SpectralDecomposition::evolve(const VectorXcd& psi0, double t) const {
    if (psi0.size() != evals_.size())
        throw std::invalid_argument("SpectralDecomposition::evolve: dimension mismatch");
    VectorXcd coeff(evals_.size());
    coeff.real() = evecs_.transpose() * psi0.real();
    coeff.imag() = evecs_.transpose() * psi0.imag();
    for (int k = 0; k < coeff.size(); ++k)
        coeff[k] *= std::exp(complexd(0.0, -evals_[k] * t));
    return real_mat_apply(evecs_, coeff);
}

Trajectory spectral_propagate(const ChainHamiltonian& h, const StateVector& psi0,
                              const TimeGrid& grid) {
    if (psi0.basis != Basis::Chain || psi0.amps.size() != h.size())
        throw std::invalid_argument("spectral_propagate: state/operator mismatch");
    SpectralDecomposition eig(h);
    Trajectory traj = sample_spectral(eig, psi0, grid);
    traj.chain = h.chain;
    return traj;
}

Trajectory spectral_propagate(const MatrixXd& h, const StateVector& psi0,
                              const TimeGrid& grid) {
    if (psi0.amps.size() != h.rows())
        throw std::invalid_argument("spectral_propagate: state/operator mismatch");
    SpectralDecomposition eig(h);
    return sample_spectral(eig, psi0, grid);
}

Trajectory stepper_propagate(const ChainHamiltonian& h, const StateVector& psi0,
                             const TimeGrid& grid, double dt_max) {
    if (psi0.basis != Basis::Chain || psi0.amps.size() != h.size())
        throw std::invalid_argument("stepper_propagate: state/operator mismatch");
    Trajectory traj = rk4_propagate([&](const VectorXcd& x) { return tridiag_apply(h, x); },
                                    psi0, grid, dt_max);
    traj.chain = h.chain;
    return traj;
}

Trajectory stepper_propagate(const MatrixXd& h, const StateVector& psi0,
                             const TimeGrid& grid, double dt_max) {
    if (psi0.amps.size() != h.rows())
        throw std::invalid_argument("stepper_propagate: state/operator mismatch");
    return rk4_propagate([&](const VectorXcd& x) { return real_mat_apply(h, x); },
                         psi0, grid, dt_max);
}

ObservableSeries extract_observables(const Trajectory& traj, ChainId chain) {
    if (traj.states.empty())
        throw std::invalid_argument("extract_observables: empty trajectory");
    if (traj.basis == Basis::Chain && traj.chain && *traj.chain != chain)
        throw std::invalid_argument("extract_observables: chain tag mismatch");

    const int n_samples = static_cast<int>(traj.states.size());
    ObservableSeries obs;
    obs.times = traj.grid.times();

    if (traj.basis == Basis::Chain) {
        const int n = static_cast<int>(traj.states.front().size());
        obs.p_g.resize(n_samples);
        obs.p_e.resize(n_samples);
        obs.p_rev.resize(n_samples);
        obs.photon_dist.resize(n_samples, n);
        // chain F: even sites |g>, odd |e>; chain C reversed
        const int g_parity = (chain == ChainId::F) ? 0 : 1;
        const VectorXcd& psi0 = traj.states.front();
        for (int s = 0; s < n_samples; ++s) {
            const VectorXcd& psi = traj.states[s];
            double pg = 0.0, pe = 0.0;
            for (int i = 0; i < n; ++i) {
                const double p = std::norm(psi[i]);
                obs.photon_dist(s, i) = p;
                (i % 2 == g_parity ? pg : pe) += p;
            }
            obs.p_g[s] = pg;
            obs.p_e[s] = pe;
            obs.p_rev[s] = std::norm(psi0.dot(psi));
        }
    } else {
        const int n = static_cast<int>(traj.states.front().size()) / 2;
        obs.p_g.resize(n_samples);
        obs.p_e.resize(n_samples);
        obs.p_rev.resize(n_samples);
        obs.photon_dist.resize(n_samples, n);
        const VectorXcd& psi0 = traj.states.front();
        for (int s = 0; s < n_samples; ++s) {
            const VectorXcd& psi = traj.states[s];
            double pg = 0.0, pe = 0.0;
            for (int i = 0; i < n; ++i) {
                const double pa = std::norm(psi[2 * i]);      // |e>|i>
                const double pb = std::norm(psi[2 * i + 1]);  // |g>|i>
                pe += pa;
                pg += pb;
                obs.photon_dist(s, i) = pa + pb;
            }
            obs.p_g[s] = pg;
            obs.p_e[s] = pe;
            obs.p_rev[s] = std::norm(psi0.dot(psi));
        }
    }
    return obs;
}

double mean_photon_number(const Eigen::Ref<const VectorXd>& dist_row) {
    double mean = 0.0;
    for (int i = 0; i < dist_row.size(); ++i)
        mean += i * dist_row[i];
    return mean;
}

int choose_truncation(const JCParams& params, double horizon, double tail_tol) {
    params.validate();
    if (!(tail_tol > 0.0 && tail_tol < 1.0))
        throw std::invalid_argument("choose_truncation: tail_tol must lie in (0,1)");
    if (!(horizon > 0.0))
        throw std::invalid_argument("choose_truncation: horizon must be > 0");

    constexpr int kStartN = 16;
    constexpr int kCapN = 1 << 14;
    constexpr int kSamples = 129;
    const TimeGrid grid{0.0, horizon, kSamples};

    auto run = [&](int n) {
        JCParams p = params;
        p.n_sites = n;
        const ChainHamiltonian h = build_chain_hamiltonian(p, ChainId::F);
        const Trajectory traj = spectral_propagate(h, chain_site_state(n, 0), grid);
        return extract_observables(traj, ChainId::F);
    };

    ObservableSeries at_n = run(kStartN);
    for (int n = kStartN; n <= kCapN; n *= 2) {
        ObservableSeries at_2n = run(2 * n);

        double max_diff = 0.0;
        max_diff = std::max(max_diff, (at_n.p_g - at_2n.p_g).cwiseAbs().maxCoeff());
        max_diff = std::max(max_diff, (at_n.p_e - at_2n.p_e).cwiseAbs().maxCoeff());
        max_diff = std::max(max_diff, (at_n.p_rev - at_2n.p_rev).cwiseAbs().maxCoeff());
        max_diff = std::max(max_diff, (at_n.photon_dist - at_2n.photon_dist.leftCols(n))
                                          .cwiseAbs()
                                          .maxCoeff());

        const int top_start = (9 * n) / 10;
        const double top_mass =
            at_n.photon_dist.rightCols(n - top_start).rowwise().sum().maxCoeff();

        if (max_diff < tail_tol && top_mass < tail_tol)
            return n;
        at_n = std::move(at_2n);
    }
    throw ConvergenceError("choose_truncation: not converged at N = 16384");
}

}  // namespace jc
