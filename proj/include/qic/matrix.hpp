#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace qic {

using cxd = std::complex<double>;

// Dense row-major complex matrix. Small fixed sizes (2..8) are the intended
// regime; nothing here is tuned for large dimensions.
class ComplexMatrix {
public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, cxd(0.0, 0.0)) {}

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix from_rows(
      std::initializer_list<std::initializer_list<cxd>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  cxd &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cxd &operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  const std::vector<cxd> &data() const { return data_; }

  // True when every entry is finite (no NaN, no infinity).
  bool finite() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cxd> data_;
};

ComplexMatrix operator+(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix operator-(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix operator*(const cxd &s, const ComplexMatrix &a);
ComplexMatrix operator*(double s, const ComplexMatrix &a);

// Matrix product; throws std::invalid_argument on inner-dimension mismatch.
ComplexMatrix multiply(const ComplexMatrix &a, const ComplexMatrix &b);
inline ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
  return multiply(a, b);
}

// Conjugate transpose.
ComplexMatrix adjoint(const ComplexMatrix &a);

// Entry-wise complex conjugate (no transpose).
ComplexMatrix conjugate(const ComplexMatrix &a);

// Plain transpose (no conjugation).
ComplexMatrix transpose(const ComplexMatrix &a);

// Kronecker product with the first factor on the slow (row-major outer) index:
// kron(a, b)[(i*rb + k), (j*cb + l)] = a(i,j) * b(k,l).
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

// Matrix-vector product.
std::vector<cxd> mat_vec(const ComplexMatrix &a, const std::vector<cxd> &v);

// |u><v| = u * v^dagger as a matrix.
ComplexMatrix outer(const std::vector<cxd> &u, const std::vector<cxd> &v);

cxd trace(const ComplexMatrix &a);
double frobenius_norm(const ComplexMatrix &a);
double max_abs(const ComplexMatrix &a);
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

// Max-abs norm of (a - a^dagger); zero for exactly Hermitian input.
double hermiticity_defect(const ComplexMatrix &a);

// Eigensystem of a Hermitian matrix. Eigenvalues are sorted descending;
// eigenvectors(:, k) is the unit eigenvector for eigenvalues[k], with the
// phase fixed so the largest-magnitude component is real and positive.
struct Spectrum {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;
};

// Cyclic Jacobi diagonalization. Requires hermiticity_defect(a) <= herm_tol
// (throws std::invalid_argument otherwise); iterates sweeps until the
// off-diagonal Frobenius norm is <= off_tol.
Spectrum hermitian_eig(const ComplexMatrix &a, double herm_tol = 1e-10,
                       double off_tol = 1e-13);

// Principal square root of a positive semi-definite Hermitian matrix.
// Eigenvalues in [-1e-10, 0) are clipped to zero; below that throws
// std::domain_error.
ComplexMatrix matrix_sqrt(const ComplexMatrix &a);

// Base-2 logarithm on the support of a PSD Hermitian matrix: eigenvalues
// below the support cutoff contribute nothing (projected log).
ComplexMatrix matrix_log2(const ComplexMatrix &a, double support_cutoff = 1e-15);

// Partial trace over the second (fast-index) factor of a (da*db) x (da*db)
// operator on a bipartite space.
ComplexMatrix partial_trace_b(const ComplexMatrix &g, std::size_t dim_a,
                              std::size_t dim_b);

// Pauli matrices and the 2x2 / 4x4 identities used throughout.
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

} // namespace qic
