#pragma once

#include <array>

#include "qic/states.hpp"

namespace qic {

// Eigenvalues lambda_i of (sqrt(g) g~ sqrt(g))^(1/2) in descending order,
// the concurrence max(0, l1 - l2 - l3 - l4) and the entanglement of
// formation in bits.
struct ConcurrenceReport {
  std::array<double, 4> lambdas;
  double concurrence;
  double eof_bits;
};

// g~ = (sigma_y x sigma_y) g* (sigma_y x sigma_y), conjugation taken in the
// computational basis.
DensityMatrix spin_flip(const DensityMatrix &g);

// Spin flip of a raw two-qubit state vector.
std::vector<cxd> spin_flip_vec(const std::vector<cxd> &v);

ConcurrenceReport concurrence(const DensityMatrix &g);

// Pure-state decomposition of g in which every member carries entanglement
// equal to the EoF of g.
struct OptimalDecomposition {
  Ensemble ensemble;                        // <= 4 pure members, dims (2,2)
  std::vector<double> per_member_concurrence;
  std::vector<DensityMatrix> reduced_matrices; // omega_k = Tr_B member_k
  double eof_bits;
};

// Deterministic construction: subnormalized eigenvectors of g, the symmetric
// matrix tau_ij = <v_i|v~_j>, its Takagi factorization, a phase alignment of
// the subdominant states, then closed-form 2x2 rotations until all member
// concurrences agree with the concurrence of g. Throws std::runtime_error if
// the construction cannot meet the OptimalDecomposition tolerances.
OptimalDecomposition optimal_decomposition(const DensityMatrix &g);

// Tr_B |psi><psi| for a two-qubit pure state.
DensityMatrix reduced_density(const PureState &psi);

struct SchmidtCheck {
  bool diagonal;    // reduction diagonal in the computational basis (1e-8)
  double residual;  // modulus of the off-diagonal entry of the reduction
};

SchmidtCheck schmidt_diagonality_check(const PureState &psi);

// Takagi factorization tau = U diag(values) U^T of a complex symmetric
// matrix, values descending and non-negative, U unitary. Exposed for tests.
struct TakagiFactorization {
  std::vector<double> values;
  ComplexMatrix u;
};

TakagiFactorization takagi(const ComplexMatrix &tau);

} // namespace qic
