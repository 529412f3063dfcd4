#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace jc {

using Eigen::MatrixXd;
using Eigen::MatrixXcd;
using Eigen::VectorXd;
using Eigen::VectorXcd;
using complexd = std::complex<double>;

/// Numerical non-convergence (truncation search hit its cap, step-count
/// overflow, eigensolver failure).
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A requested waveguide geometry cannot be fabricated (non-positive spacing).
struct InfeasibleDesignError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid scenario configuration (bad key, unparsable value, failed
/// cross-field validation).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Dimensionless model parameters. All three frequencies share one unit;
/// the ratios g/omega and omega0/omega determine the dynamics, with time
/// measured in units of 1/omega.
struct JCParams {
    double omega = 1.0;   // oscillator frequency
    double omega0 = 0.0;  // qubit transition frequency
    double g = 0.0;       // coupling strength
    int n_sites = 2;      // Fock truncation N (levels 0..N-1)

    void validate() const {
        if (!(omega > 0.0))
            throw std::invalid_argument("JCParams: omega must be > 0");
        if (omega0 < 0.0)
            throw std::invalid_argument("JCParams: omega0 must be >= 0");
        if (g < 0.0)
            throw std::invalid_argument("JCParams: g must be >= 0");
        if (n_sites < 2)
            throw std::invalid_argument("JCParams: n_sites must be >= 2");
    }
};

/// Selects one of the two decoupled parity chains. They differ only by the
/// sign of the alternating omega0 diagonal: chain C carries +(-1)^n omega0/2,
/// chain F carries -(-1)^n omega0/2.
enum class ChainId { C, F };

inline const char* to_string(ChainId c) { return c == ChainId::C ? "C" : "F"; }

/// Real symmetric tridiagonal operator for one parity chain.
/// diag[n] = +/-(-1)^n omega0/2 + n omega, offdiag[n] = g sqrt(n+1).
struct ChainHamiltonian {
    ChainId chain = ChainId::F;
    VectorXd diag;     // length N
    VectorXd offdiag;  // length N-1

    int size() const { return static_cast<int>(diag.size()); }
};

enum class Basis {
    Product,  // length 2N, interleaved [a_0, b_0, a_1, b_1, ...]
    Chain     // length N, one parity chain
};

/// Complex amplitudes over a truncated basis.
struct StateVector {
    VectorXcd amps;
    Basis basis = Basis::Chain;

    double norm() const { return amps.norm(); }
};

/// Unit amplitude at one chain site.
inline StateVector chain_site_state(int n_sites, int site) {
    if (site < 0 || site >= n_sites)
        throw std::invalid_argument("chain_site_state: site out of range");
    StateVector s;
    s.amps = VectorXcd::Zero(n_sites);
    s.amps[site] = 1.0;
    s.basis = Basis::Chain;
    return s;
}

}  // namespace jc
