#pragma once

#include <array>
#include <variant>
#include <vector>

#include "qic/matrix.hpp"

namespace qic {

// Validated density operator, optionally carrying a bipartite split
// (dim_a, dim_b) with the B factor on the fast index. Construction enforces
// hermiticity (1e-10 max-abs), positivity (eigenvalues >= -1e-10) and unit
// trace (1e-10); violations throw std::invalid_argument.
class DensityMatrix {
public:
  DensityMatrix(ComplexMatrix m, std::size_t dim_a, std::size_t dim_b = 1);
  explicit DensityMatrix(ComplexMatrix m);

  const ComplexMatrix &matrix() const { return mat_; }
  std::size_t dim() const { return mat_.rows(); }
  std::size_t dim_a() const { return dim_a_; }
  std::size_t dim_b() const { return dim_b_; }

private:
  ComplexMatrix mat_;
  std::size_t dim_a_;
  std::size_t dim_b_;
};

// Unit-norm state vector (norm within 1e-10 of 1, else throws).
class PureState {
public:
  PureState(std::vector<cxd> amplitudes, std::size_t dim_a,
            std::size_t dim_b = 1);
  explicit PureState(std::vector<cxd> amplitudes);

  const std::vector<cxd> &amplitudes() const { return amps_; }
  std::size_t dim() const { return amps_.size(); }
  std::size_t dim_a() const { return dim_a_; }
  std::size_t dim_b() const { return dim_b_; }

private:
  std::vector<cxd> amps_;
  std::size_t dim_a_;
  std::size_t dim_b_;
};

// |psi><psi| as a DensityMatrix with the same bipartite split.
DensityMatrix projector(const PureState &psi);

using EnsembleMember = std::variant<DensityMatrix, PureState>;

DensityMatrix member_density(const EnsembleMember &m);

// Weighted mixture of states. Weights must be non-negative and sum to 1
// within 1e-10; members must share dimensions.
struct Ensemble {
  std::vector<double> weights;
  std::vector<EnsembleMember> members;

  std::size_t size() const { return weights.size(); }
  DensityMatrix average() const;
};

void validate_ensemble(const Ensemble &e);

// Two-qubit Bell states on index 0 -> (|00>+|11>)/sqrt(2) and
// index 3 -> (|00>-|11>)/sqrt(2). Other indices throw.
PureState bell_state(int index);

// S(rho) = -Tr rho log2 rho, in bits. Eigenvalues below 1e-15 are treated as
// exact zeros (0 log 0 = 0).
double von_neumann_entropy(const DensityMatrix &rho);

// h(x) = -(1+x)/2 log2((1+x)/2) - (1-x)/2 log2((1-x)/2) for x in [-1, 1].
// h(0) = 1, h(+-1) = 0.
double binary_entropy(double x);

// H(omega, rho) = Tr omega (log2 omega - log2 rho), in bits. Returns
// +infinity when the support condition fails: any omega eigenvector with
// eigenvalue > 1e-12 whose projection onto the support of rho leaves a
// residual > 1e-8.
double relative_entropy(const DensityMatrix &omega, const DensityMatrix &rho);

// S(avg) - sum_k pi_k S(rho_k) for the ensemble, in bits.
double holevo_quantity(const Ensemble &e);

// | S(avg) - sum pi_k S(rho_k) - sum pi_k H(rho_k, avg) |, the defect of the
// entropy mixing identity. Zero in exact arithmetic whenever finite.
double mixing_identity_residual(const Ensemble &e);

// Bloch vector (x, y, z) of a qubit density matrix and its inverse map.
// qubit_from_bloch requires |r| <= 1 + 1e-12.
std::array<double, 3> bloch_from_qubit(const DensityMatrix &rho);
DensityMatrix qubit_from_bloch(double x, double y, double z);

} // namespace qic
