#include "jc/model.hpp"

#include <cmath>

namespace jc {

double coupling(int n, double g) {
    if (n < 0)
        throw std::invalid_argument("coupling: site index must be >= 0");
    if (g < 0.0)
        throw std::invalid_argument("coupling: g must be >= 0");
    return g * std::sqrt(static_cast<double>(n) + 1.0);
}

ChainHamiltonian build_chain_hamiltonian(const JCParams& params, ChainId chain) {
    params.validate();
    const int n = params.n_sites;
    const double sign = (chain == ChainId::C) ? +1.0 : -1.0;

    ChainHamiltonian h;
    h.chain = chain;
    h.diag.resize(n);
    h.offdiag.resize(n - 1);
    for (int i = 0; i < n; ++i) {
        const double parity = (i % 2 == 0) ? 1.0 : -1.0;
        h.diag[i] = sign * parity * params.omega0 / 2.0 + i * params.omega;
    }
    for (int i = 0; i + 1 < n; ++i)
        h.offdiag[i] = coupling(i, params.g);
    return h;
}

MatrixXd build_product_hamiltonian(const JCParams& params) {
    params.validate();
    const int n = params.n_sites;
    MatrixXd h = MatrixXd::Zero(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        h(2 * i, 2 * i) = params.omega0 / 2.0 + i * params.omega;          // |e>|i>
        h(2 * i + 1, 2 * i + 1) = -params.omega0 / 2.0 + i * params.omega; // |g>|i>
    }
    // g (sigma_+ + sigma_-)(a + a^dag), truncated at i = n-1
    for (int i = 0; i + 1 < n; ++i) {
        const double k = coupling(i, params.g);
        h(2 * i, 2 * (i + 1) + 1) = k;  // <e,i|H|g,i+1>
        h(2 * (i + 1) + 1, 2 * i) = k;
        h(2 * (i + 1), 2 * i + 1) = k;  // <e,i+1|H|g,i>
        h(2 * i + 1, 2 * (i + 1)) = k;
    }
    return h;
}

int product_index(ChainId chain, int site) {
    if (site < 0)
        throw std::invalid_argument("product_index: site must be >= 0");
    const bool even = (site % 2 == 0);
    const bool take_a = (chain == ChainId::C) ? even : !even;
    return take_a ? 2 * site : 2 * site + 1;
}

std::pair<StateVector, StateVector> product_to_chains(const StateVector& psi) {
    if (psi.basis != Basis::Product)
        throw std::invalid_argument("product_to_chains: state not in product basis");
    if (psi.amps.size() % 2 != 0)
        throw std::invalid_argument("product_to_chains: odd-length product state");
    const int n = static_cast<int>(psi.amps.size()) / 2;

    StateVector c, f;
    c.basis = f.basis = Basis::Chain;
    c.amps.resize(n);
    f.amps.resize(n);
    for (int i = 0; i < n; ++i) {
        c.amps[i] = psi.amps[product_index(ChainId::C, i)];
        f.amps[i] = psi.amps[product_index(ChainId::F, i)];
    }
    return {std::move(c), std::move(f)};
}

StateVector chains_to_product(const StateVector& chain_c, const StateVector& chain_f) {
    if (chain_c.basis != Basis::Chain || chain_f.basis != Basis::Chain)
        throw std::invalid_argument("chains_to_product: inputs must be chain states");
    if (chain_c.amps.size() != chain_f.amps.size())
        throw std::invalid_argument("chains_to_product: length mismatch");
    const int n = static_cast<int>(chain_c.amps.size());

    StateVector psi;
    psi.basis = Basis::Product;
    psi.amps.resize(2 * n);
    for (int i = 0; i < n; ++i) {
        psi.amps[product_index(ChainId::C, i)] = chain_c.amps[i];
        psi.amps[product_index(ChainId::F, i)] = chain_f.amps[i];
    }
    return psi;
}

}  // namespace jc
