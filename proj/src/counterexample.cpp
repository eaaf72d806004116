#include "qic/counterexample.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qic {

namespace {

const double kPi = 3.14159265358979323846;

std::vector<cxd> computational_from_bell(const std::array<cxd, 4> &c) {
  // Basis order of c: {beta0, beta3, |01>, |10>}.
  const double inv = 1.0 / std::sqrt(2.0);
  return {inv * (c[0] + c[1]), c[2], c[3], inv * (c[0] - c[1])};
}

std::vector<cxd> normalized(std::vector<cxd> v) {
  double n2 = 0.0;
  for (const cxd &a : v)
    n2 += std::norm(a);
  const double inv = 1.0 / std::sqrt(n2);
  for (cxd &a : v)
    a *= inv;
  return v;
}

} // namespace

DensityMatrix paper_state() {
  const PureState b0 = bell_state(0);
  const PureState b3 = bell_state(3);
  const std::vector<cxd> k01 = {cxd(0, 0), cxd(1, 0), cxd(0, 0), cxd(0, 0)};
  const std::vector<cxd> k10 = {cxd(0, 0), cxd(0, 0), cxd(1, 0), cxd(0, 0)};
  ComplexMatrix g =
      (5.0 / 8.0) * outer(b0.amplitudes(), b0.amplitudes()) +
      (1.0 / 16.0) * outer(b3.amplitudes(), b3.amplitudes()) +
      (1.0 / 4.0) * outer(k01, k01) + (1.0 / 16.0) * outer(k10, k10);
  return DensityMatrix(std::move(g), 2, 2);
}

PaperEnsemble paper_ensemble() {
  PaperEnsemble pe;
  pe.weights = {0.1527, 0.2824, 0.2824, 0.2824};
  pe.phases = {0.0, kPi, kPi / 3.0, -kPi / 3.0};

  const cxd p3 = std::polar(1.0, kPi / 3.0);   // e^{+i pi/3}
  const cxd m3 = std::polar(1.0, -kPi / 3.0);  // e^{-i pi/3}
  pe.coefficients = {{
      {cxd(0.8101, 0), cxd(0.5863, 0), cxd(0, 0), cxd(0, 0)},
      {cxd(-0.7870, 0), cxd(0.1087, 0), cxd(0.5432, 0), cxd(0.2716, 0)},
      {cxd(0.7870, 0), cxd(-0.1087, 0), 0.5432 * p3, 0.2716 * m3},
      {cxd(-0.7870, 0), cxd(0.1087, 0), -0.5432 * m3, -0.2716 * p3},
  }};

  double wsum = 0.0;
  for (double w : pe.weights)
    wsum += w;
  for (std::size_t k = 0; k < 4; ++k) {
    pe.ensemble.weights.push_back(pe.weights[k] / wsum);
    pe.ensemble.members.push_back(PureState(
        normalized(computational_from_bell(pe.coefficients[k])), 2, 2));
  }
  validate_ensemble(pe.ensemble);
  return pe;
}

double trace_log_form(double d, double x) {
  if (std::abs(d) > 1.0 + 1e-12)
    throw std::invalid_argument("trace_log_form: |d| must be at most 1");
  if (std::abs(x) >= 1.0)
    throw std::domain_error("trace_log_form: diverges at |x| = 1");
  return 0.5 * (1.0 + d) * std::log2(0.5 * (1.0 + x)) +
         0.5 * (1.0 - d) * std::log2(0.5 * (1.0 - x));
}

QuestionOneVerdict question_one_test(const DensityMatrix &g,
                                     DecompositionSource source,
                                     double margin) {
  if (g.dim() != 4)
    throw std::invalid_argument("question_one_test: expected two-qubit state");

  const DensityMatrix gamma_a(partial_trace_b(g.matrix(), 2, 2), 2, 1);
  const double eof = concurrence(g).eof_bits;

  std::vector<DensityMatrix> reduced;
  double entropy_tol = 1e-6;
  if (source == DecompositionSource::PAPER) {
    if (max_abs_diff(g.matrix(), paper_state().matrix()) > 1e-9)
      throw std::invalid_argument(
          "question_one_test: printed decomposition only fits its own state");
    const PaperEnsemble pe = paper_ensemble();
    for (const EnsembleMember &m : pe.ensemble.members)
      reduced.push_back(reduced_density(std::get<PureState>(m)));
    entropy_tol = 2e-3; // four-decimal table
  } else {
    const OptimalDecomposition d = optimal_decomposition(g);
    reduced = d.reduced_matrices;
  }

  // Support-aware member values Tr[omega_k log2 gamma_A].
  const Spectrum sp = hermitian_eig(gamma_a.matrix());
  ComplexMatrix proj(2, 2);
  for (std::size_t k = 0; k < 2; ++k) {
    if (sp.eigenvalues[k] <= 1e-12)
      continue;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        proj(i, j) += sp.eigenvectors(i, k) * std::conj(sp.eigenvectors(j, k));
  }
  const ComplexMatrix logm = matrix_log2(gamma_a.matrix(), 1e-12);

  QuestionOneVerdict out;
  bool leaked = false;
  for (const DensityMatrix &w : reduced) {
    const double inside = trace(proj * w.matrix()).real();
    if (1.0 - inside > 1e-10) {
      out.values.push_back(-std::numeric_limits<double>::infinity());
      leaked = true;
    } else {
      out.values.push_back(trace(w.matrix() * logm).real());
    }
    out.entropies.push_back(von_neumann_entropy(w));
  }

  if (leaked) {
    out.spread = std::numeric_limits<double>::infinity();
  } else {
    const auto [lo, hi] =
        std::minmax_element(out.values.begin(), out.values.end());
    out.spread = *hi - *lo;
  }

  bool entropies_match = true;
  for (double s : out.entropies)
    if (std::abs(s - eof) > entropy_tol)
      entropies_match = false;

  out.verdict = (out.spread > margin && entropies_match)
                    ? QuestionOneOutcome::NEGATIVE
                    : QuestionOneOutcome::INCONCLUSIVE;
  return out;
}

DiagonalityCensus diagonality_census(const std::vector<DensityMatrix> &reduced,
                                     const DensityMatrix &gamma_a,
                                     double off_tol) {
  const Spectrum sp = hermitian_eig(gamma_a.matrix());
  DiagonalityCensus census;
  for (const DensityMatrix &w : reduced) {
    const ComplexMatrix rotated =
        adjoint(sp.eigenvectors) * w.matrix() * sp.eigenvectors;
    if (std::abs(rotated(0, 1)) <= off_tol)
      ++census.diagonal;
    else
      ++census.off_diagonal;
  }
  return census;
}

DiagonalityCensus diagonality_census(const OptimalDecomposition &d,
                                     const DensityMatrix &gamma_a,
                                     double off_tol) {
  return diagonality_census(d.reduced_matrices, gamma_a, off_tol);
}

} // namespace qic
