#include "qic/states.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qic {

namespace {

void validate_density(const ComplexMatrix &m, std::size_t dim_a,
                      std::size_t dim_b) {
  if (!m.square())
    throw std::invalid_argument("DensityMatrix: matrix not square");
  if (m.rows() != dim_a * dim_b)
    throw std::invalid_argument("DensityMatrix: split does not match dimension");
  if (!m.finite())
    throw std::invalid_argument("DensityMatrix: non-finite entries");
  if (hermiticity_defect(m) > 1e-10)
    throw std::invalid_argument("DensityMatrix: matrix not Hermitian");
  if (std::abs(trace(m) - cxd(1.0, 0.0)) > 1e-10)
    throw std::invalid_argument("DensityMatrix: trace not 1");
  Spectrum sp = hermitian_eig(m);
  for (double lam : sp.eigenvalues)
    if (lam < -1e-10)
      throw std::invalid_argument("DensityMatrix: negative eigenvalue");
}

} // namespace

DensityMatrix::DensityMatrix(ComplexMatrix m, std::size_t dim_a,
                             std::size_t dim_b)
    : mat_(std::move(m)), dim_a_(dim_a), dim_b_(dim_b) {
  validate_density(mat_, dim_a_, dim_b_);
}

DensityMatrix::DensityMatrix(ComplexMatrix m)
    : mat_(std::move(m)), dim_a_(mat_.rows()), dim_b_(1) {
  validate_density(mat_, dim_a_, dim_b_);
}

namespace {

void validate_pure(const std::vector<cxd> &amps, std::size_t dim_a,
                   std::size_t dim_b) {
  if (amps.empty() || amps.size() != dim_a * dim_b)
    throw std::invalid_argument("PureState: split does not match dimension");
  double n2 = 0.0;
  for (const auto &a : amps) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
      throw std::invalid_argument("PureState: non-finite amplitude");
    n2 += std::norm(a);
  }
  if (std::abs(std::sqrt(n2) - 1.0) > 1e-10)
    throw std::invalid_argument("PureState: not unit norm");
}

} // namespace

PureState::PureState(std::vector<cxd> amplitudes, std::size_t dim_a,
                     std::size_t dim_b)
    : amps_(std::move(amplitudes)), dim_a_(dim_a), dim_b_(dim_b) {
  validate_pure(amps_, dim_a_, dim_b_);
}

PureState::PureState(std::vector<cxd> amplitudes)
    : amps_(std::move(amplitudes)), dim_a_(amps_.size()), dim_b_(1) {
  validate_pure(amps_, dim_a_, dim_b_);
}

DensityMatrix projector(const PureState &psi) {
  return DensityMatrix(outer(psi.amplitudes(), psi.amplitudes()), psi.dim_a(),
                       psi.dim_b());
}

DensityMatrix member_density(const EnsembleMember &m) {
  if (std::holds_alternative<DensityMatrix>(m))
    return std::get<DensityMatrix>(m);
  return projector(std::get<PureState>(m));
}

DensityMatrix Ensemble::average() const {
  validate_ensemble(*this);
  DensityMatrix first = member_density(members[0]);
  ComplexMatrix acc(first.dim(), first.dim());
  for (std::size_t k = 0; k < size(); ++k)
    acc = acc + weights[k] * member_density(members[k]).matrix();
  return DensityMatrix(std::move(acc), first.dim_a(), first.dim_b());
}

void validate_ensemble(const Ensemble &e) {
  if (e.weights.size() != e.members.size() || e.weights.empty())
    throw std::invalid_argument("Ensemble: weights/members mismatch");
  double sum = 0.0;
  for (double w : e.weights) {
    if (!(w >= 0.0))
      throw std::invalid_argument("Ensemble: negative weight");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-10)
    throw std::invalid_argument("Ensemble: weights do not sum to 1");
  const std::size_t d = member_density(e.members[0]).dim();
  for (const auto &m : e.members)
    if (member_density(m).dim() != d)
      throw std::invalid_argument("Ensemble: member dimension mismatch");
}

PureState bell_state(int index) {
  const double r = 1.0 / std::sqrt(2.0);
  if (index == 0)
    return PureState({r, 0.0, 0.0, r}, 2, 2);
  if (index == 3)
    return PureState({r, 0.0, 0.0, -r}, 2, 2);
  throw std::invalid_argument("bell_state: only indices 0 and 3 are defined");
}

double von_neumann_entropy(const DensityMatrix &rho) {
  Spectrum sp = hermitian_eig(rho.matrix());
  double s = 0.0;
  for (double lam : sp.eigenvalues)
    if (lam > 1e-15)
      s -= lam * std::log2(lam);
  return s;
}

double binary_entropy(double x) {
  if (!(x >= -1.0 - 1e-12 && x <= 1.0 + 1e-12))
    throw std::domain_error("binary_entropy: argument outside [-1, 1]");
  x = std::min(1.0, std::max(-1.0, x));
  const double p = 0.5 * (1.0 + x);
  const double q = 0.5 * (1.0 - x);
  double s = 0.0;
  if (p > 0.0)
    s -= p * std::log2(p);
  if (q > 0.0)
    s -= q * std::log2(q);
  return s;
}

double relative_entropy(const DensityMatrix &omega, const DensityMatrix &rho) {
  if (omega.dim() != rho.dim())
    throw std::invalid_argument("relative_entropy: dimension mismatch");
  Spectrum so = hermitian_eig(omega.matrix());
  Spectrum sr = hermitian_eig(rho.matrix());
  const std::size_t n = omega.dim();
  const double support_cut = 1e-12;

  // Support condition: every omega eigenvector with weight > 1e-12 must lie
  // in the support of rho up to a 1e-8 projection residual.
  for (std::size_t i = 0; i < n; ++i) {
    if (so.eigenvalues[i] <= support_cut)
      continue;
    double inside = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (sr.eigenvalues[j] <= support_cut)
        continue;
      cxd ov(0.0, 0.0);
      for (std::size_t r = 0; r < n; ++r)
        ov += std::conj(sr.eigenvectors(r, j)) * so.eigenvectors(r, i);
      inside += std::norm(ov);
    }
    if (1.0 - inside > 1e-8)
      return std::numeric_limits<double>::infinity();
  }

  // Tr omega log2 omega.
  double t1 = 0.0;
  for (double lam : so.eigenvalues)
    if (lam > 1e-15)
      t1 += lam * std::log2(lam);

  // Tr omega log2 rho via overlaps with rho's support eigenvectors.
  double t2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (so.eigenvalues[i] <= 1e-15)
      continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (sr.eigenvalues[j] <= support_cut)
        continue;
      cxd ov(0.0, 0.0);
      for (std::size_t r = 0; r < n; ++r)
        ov += std::conj(sr.eigenvectors(r, j)) * so.eigenvectors(r, i);
      t2 += so.eigenvalues[i] * std::norm(ov) * std::log2(sr.eigenvalues[j]);
    }
  }
  return t1 - t2;
}

double holevo_quantity(const Ensemble &e) {
  validate_ensemble(e);
  double s_members = 0.0;
  for (std::size_t k = 0; k < e.size(); ++k)
    s_members += e.weights[k] * von_neumann_entropy(member_density(e.members[k]));
  return von_neumann_entropy(e.average()) - s_members;
}

double mixing_identity_residual(const Ensemble &e) {
  validate_ensemble(e);
  DensityMatrix avg = e.average();
  double lhs = von_neumann_entropy(avg);
  double rhs = 0.0;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e.weights[k] == 0.0)
      continue;
    DensityMatrix rk = member_density(e.members[k]);
    rhs += e.weights[k] * (von_neumann_entropy(rk) + relative_entropy(rk, avg));
  }
  return std::abs(lhs - rhs);
}

std::array<double, 3> bloch_from_qubit(const DensityMatrix &rho) {
  if (rho.dim() != 2)
    throw std::invalid_argument("bloch_from_qubit: not a qubit state");
  const ComplexMatrix &m = rho.matrix();
  return {2.0 * m(0, 1).real(), -2.0 * m(0, 1).imag(),
          (m(0, 0) - m(1, 1)).real()};
}

DensityMatrix qubit_from_bloch(double x, double y, double z) {
  const double r = std::sqrt(x * x + y * y + z * z);
  if (r > 1.0 + 1e-12)
    throw std::invalid_argument("qubit_from_bloch: Bloch vector outside ball");
  ComplexMatrix m(2, 2);
  m(0, 0) = 0.5 * (1.0 + z);
  m(1, 1) = 0.5 * (1.0 - z);
  m(0, 1) = 0.5 * cxd(x, -y);
  m(1, 0) = 0.5 * cxd(x, y);
  return DensityMatrix(std::move(m), 2, 1);
}

} // namespace qic
