#pragma once

#include <utility>

#include "jc/types.hpp"

namespace jc {

/// Inter-site hopping rate kappa_n = g sqrt(n+1).
double coupling(int n, double g);

ChainHamiltonian build_chain_hamiltonian(const JCParams& params, ChainId chain);

/// Dense 2N x 2N Hermitian (real symmetric) operator in the interleaved
/// product ordering [a_0, b_0, a_1, b_1, ...], where a_n multiplies |e>|n>
/// and b_n multiplies |g>|n>. Ladder operators are hard-truncated at
/// n = N-1 (the kappa_{N-1} bond is dropped).
MatrixXd build_product_hamiltonian(const JCParams& params);

/// Product index of chain site n. Chain C collects a_n for even n and b_n
/// for odd n; chain F is the complement.
int product_index(ChainId chain, int site);

/// Split an interleaved product state into its two parity-chain projections.
/// The combined squared norm is preserved exactly and chains_to_product
/// inverts the mapping bit-exactly.
std::pair<StateVector, StateVector> product_to_chains(const StateVector& psi);

StateVector chains_to_product(const StateVector& chain_c, const StateVector& chain_f);

}  // namespace jc
