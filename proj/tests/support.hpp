#pragma once

// Seeded random generators shared by the test suites. Everything is driven
// by an explicit mt19937_64 so failures reproduce from the seed alone.

#include <cmath>
#include <random>
#include <vector>

#include "qic/channels.hpp"
#include "qic/matrix.hpp"
#include "qic/states.hpp"

namespace testsupport {

using qic::cxd;

inline qic::ComplexMatrix ginibre(std::size_t rows, std::size_t cols,
                                  std::mt19937_64 &rng) {
  std::normal_distribution<double> n01(0.0, 1.0);
  qic::ComplexMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = cxd(n01(rng), n01(rng));
  return m;
}

inline qic::PureState random_pure(std::size_t dim_a, std::size_t dim_b,
                                  std::mt19937_64 &rng) {
  std::normal_distribution<double> n01(0.0, 1.0);
  std::vector<cxd> amps(dim_a * dim_b);
  double norm2 = 0.0;
  for (cxd &a : amps) {
    a = cxd(n01(rng), n01(rng));
    norm2 += std::norm(a);
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (cxd &a : amps)
    a *= inv;
  return qic::PureState(amps, dim_a, dim_b);
}

// Ginibre construction: G G^dag normalized to unit trace has full rank
// (or the requested rank) almost surely.
inline qic::DensityMatrix random_density(std::size_t dim_a, std::size_t dim_b,
                                         std::size_t rank,
                                         std::mt19937_64 &rng) {
  const std::size_t dim = dim_a * dim_b;
  const qic::ComplexMatrix g = ginibre(dim, rank, rng);
  qic::ComplexMatrix m = g * qic::adjoint(g);
  const double tr = qic::trace(m).real();
  m = (1.0 / tr) * m;
  return qic::DensityMatrix(m, dim_a, dim_b);
}

// Gram-Schmidt on the columns of a square Ginibre sample; the diagonal
// sign fix keeps the distribution Haar.
inline qic::ComplexMatrix random_unitary(std::size_t n, std::mt19937_64 &rng) {
  qic::ComplexMatrix g = ginibre(n, n, rng);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      cxd overlap(0.0, 0.0);
      for (std::size_t i = 0; i < n; ++i)
        overlap += std::conj(g(i, j)) * g(i, k);
      for (std::size_t i = 0; i < n; ++i)
        g(i, k) -= overlap * g(i, j);
    }
    double norm2 = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      norm2 += std::norm(g(i, k));
    const double inv = 1.0 / std::sqrt(norm2);
    for (std::size_t i = 0; i < n; ++i)
      g(i, k) *= inv;
  }
  return g;
}

// Random qubit channel with `n_kraus` operators: orthonormalize the columns
// of a (2 n_kraus) x 2 Ginibre sample into an isometry and slice it into
// 2x2 blocks. Completeness holds by construction.
inline qic::KrausChannel random_channel(std::size_t n_kraus,
                                        std::mt19937_64 &rng) {
  const std::size_t rows = 2 * n_kraus;
  qic::ComplexMatrix v = ginibre(rows, 2, rng);
  for (std::size_t k = 0; k < 2; ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      cxd overlap(0.0, 0.0);
      for (std::size_t i = 0; i < rows; ++i)
        overlap += std::conj(v(i, j)) * v(i, k);
      for (std::size_t i = 0; i < rows; ++i)
        v(i, k) -= overlap * v(i, j);
    }
    double norm2 = 0.0;
    for (std::size_t i = 0; i < rows; ++i)
      norm2 += std::norm(v(i, k));
    const double inv = 1.0 / std::sqrt(norm2);
    for (std::size_t i = 0; i < rows; ++i)
      v(i, k) *= inv;
  }
  std::vector<qic::ComplexMatrix> kraus;
  for (std::size_t k = 0; k < n_kraus; ++k) {
    qic::ComplexMatrix a(2, 2);
    a(0, 0) = v(2 * k, 0);
    a(0, 1) = v(2 * k, 1);
    a(1, 0) = v(2 * k + 1, 0);
    a(1, 1) = v(2 * k + 1, 1);
    kraus.push_back(std::move(a));
  }
  return qic::KrausChannel(std::move(kraus));
}

// Bloch translation of a channel: the Bloch vector of the image of I/2.
inline std::array<double, 3> bloch_translation(const qic::KrausChannel &ch) {
  const qic::DensityMatrix half(0.5 * qic::ComplexMatrix::identity(2), 2, 1);
  return qic::bloch_from_qubit(qic::apply(ch, half));
}

} // namespace testsupport
