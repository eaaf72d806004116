#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qic/states.hpp"

namespace qic {

// Completely positive trace-preserving qubit map as a Kraus list,
// Phi(rho) = sum_k A_k rho A_k^dag with sum_k A_k^dag A_k = I.
class KrausChannel {
public:
  explicit KrausChannel(std::vector<ComplexMatrix> kraus_ops,
                        std::string label = "");

  const std::vector<ComplexMatrix> &kraus_ops() const { return ops_; }
  const std::string &label() const { return label_; }
  std::size_t size() const { return ops_.size(); }

private:
  std::vector<ComplexMatrix> ops_;
  std::string label_;
};

DensityMatrix apply(const KrausChannel &ch, const DensityMatrix &rho);

// Output-environment state of the canonical dilation: gamma = V rho V^dag
// with V = sum_j A_j (x) |j>, so Tr_B gamma = Phi(rho).
struct LiftedState {
  DensityMatrix gamma_ab;
  DensityMatrix input;
};

LiftedState lift(const KrausChannel &ch, const DensityMatrix &rho);

struct SolverConfig {
  int restarts = 32;
  std::uint64_t seed = 0;
  int max_nm_iterations = 4000;   // per restart
  int polish_rounds = 60;         // weight/member refinement passes
  double objective_tol = 1e-13;   // simplex value-spread stopping rule
  double certificate_tol = 1e-4;  // equidistance and radius-gap bound
  std::size_t radius_grid = 20000;
};

struct CapacityResult {
  double capacity_bits = 0.0;
  Ensemble optimal_ensemble;            // pure qubit inputs
  DensityMatrix optimal_avg_output;     // Phi of the average input
  double equidistance_deviation = 0.0;
  double radius_gap = 0.0;              // capacity minus verified radius
  long long iterations = 0;             // objective evaluations spent
};

// Maximizes S(Phi(avg)) - sum_i pi_i S(Phi(rho_i)) over ensembles of up to
// four pure qubit inputs. Throws std::runtime_error when the optimality
// certificates fail to reach config.certificate_tol.
CapacityResult holevo_capacity(const KrausChannel &ch,
                               const SolverConfig &config = {});

// Largest relative entropy H(Phi(omega), center) over pure inputs omega,
// scanned on a Fibonacci sphere of `grid` points and locally refined.
double relative_entropy_radius(const KrausChannel &ch,
                               const DensityMatrix &center,
                               std::size_t grid = 20000);

// max_k |H(Phi(rho_k), center) - C| with C the ensemble's Holevo quantity
// through the channel.
double equidistance_check(const KrausChannel &ch, const Ensemble &e,
                          const DensityMatrix &center);

struct MswReport {
  double sup_value = 0.0;        // best S(Tr_B gamma) - EoF(gamma) found
  DensityMatrix argmax_input;
  double gap_vs_capacity = 0.0;  // sup_value minus solver capacity
  double eq5_residual = 0.0;     // |EoF(gamma*) - S(Phi(rho_opt)) + C|
  double marginal_residual = 0.0; // ||Tr_B gamma* - Phi(rho_opt)||_F
};

// Sweeps the input Bloch ball (axis resolution `grid`, locally refined) and
// compares sup { S(Tr_B gamma) - EoF(gamma) } against the capacity solver.
// Requires at most two Kraus operators so the lifted state is two-qubit.
MswReport msw_crosscheck(const KrausChannel &ch, std::size_t grid = 50,
                         const SolverConfig &config = {});

struct RepresentabilityReport {
  std::vector<double> values;  // Tr[Phi(rho_k) log2 Phi(rho_opt)] per member
  double spread = 0.0;         // max minus min of values
  bool holds = false;          // necessary condition within tolerance
};

// Checks whether Tr[Phi(rho_k) log2 Phi(rho_opt)] is member-independent,
// the necessary condition for a qubit-environment dilation to reproduce
// the state as an optimal lift.
RepresentabilityReport representability_probe(const KrausChannel &ch,
                                              const CapacityResult &result,
                                              double tol = 1e-4);

} // namespace qic
