#include "qic/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qic {

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<cxd>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows.begin()->size() : 0;
  ComplexMatrix m(r, c);
  std::size_t i = 0;
  for (const auto &row : rows) {
    if (row.size() != c)
      throw std::invalid_argument("from_rows: ragged rows");
    std::size_t j = 0;
    for (const auto &v : row)
      m(i, j++) = v;
    ++i;
  }
  return m;
}

bool ComplexMatrix::finite() const {
  for (const auto &v : data_)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      return false;
  return true;
}

static void require_same_shape(const ComplexMatrix &a, const ComplexMatrix &b,
                               const char *who) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument(std::string(who) + ": shape mismatch");
}

ComplexMatrix operator+(const ComplexMatrix &a, const ComplexMatrix &b) {
  require_same_shape(a, b, "operator+");
  ComplexMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      r(i, j) = a(i, j) + b(i, j);
  return r;
}

ComplexMatrix operator-(const ComplexMatrix &a, const ComplexMatrix &b) {
  require_same_shape(a, b, "operator-");
  ComplexMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      r(i, j) = a(i, j) - b(i, j);
  return r;
}

ComplexMatrix operator*(const cxd &s, const ComplexMatrix &a) {
  ComplexMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      r(i, j) = s * a(i, j);
  return r;
}

ComplexMatrix operator*(double s, const ComplexMatrix &a) {
  return cxd(s, 0.0) * a;
}

ComplexMatrix multiply(const ComplexMatrix &a, const ComplexMatrix &b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("multiply: inner dimension mismatch");
  ComplexMatrix r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const cxd aik = a(i, k);
      if (aik == cxd(0.0, 0.0))
        continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        r(i, j) += aik * b(k, j);
    }
  return r;
}

ComplexMatrix adjoint(const ComplexMatrix &a) {
  ComplexMatrix r(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      r(j, i) = std::conj(a(i, j));
  return r;
}

ComplexMatrix conjugate(const ComplexMatrix &a) {
  ComplexMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      r(i, j) = std::conj(a(i, j));
  return r;
}

ComplexMatrix transpose(const ComplexMatrix &a) {
  ComplexMatrix r(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      r(j, i) = a(i, j);
  return r;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
  ComplexMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const cxd aij = a(i, j);
      if (aij == cxd(0.0, 0.0))
        continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          r(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return r;
}

std::vector<cxd> mat_vec(const ComplexMatrix &a, const std::vector<cxd> &v) {
  if (a.cols() != v.size())
    throw std::invalid_argument("mat_vec: dimension mismatch");
  std::vector<cxd> r(a.rows(), cxd(0.0, 0.0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      r[i] += a(i, j) * v[j];
  return r;
}

ComplexMatrix outer(const std::vector<cxd> &u, const std::vector<cxd> &v) {
  ComplexMatrix r(u.size(), v.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      r(i, j) = u[i] * std::conj(v[j]);
  return r;
}

cxd trace(const ComplexMatrix &a) {
  if (!a.square())
    throw std::invalid_argument("trace: matrix not square");
  cxd t(0.0, 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    t += a(i, i);
  return t;
}

double frobenius_norm(const ComplexMatrix &a) {
  double s = 0.0;
  for (const auto &v : a.data())
    s += std::norm(v);
  return std::sqrt(s);
}

double max_abs(const ComplexMatrix &a) {
  double m = 0.0;
  for (const auto &v : a.data())
    m = std::max(m, std::abs(v));
  return m;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
  require_same_shape(a, b, "max_abs_diff");
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

double hermiticity_defect(const ComplexMatrix &a) {
  if (!a.square())
    throw std::invalid_argument("hermiticity_defect: matrix not square");
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      m = std::max(m, std::abs(a(i, j) - std::conj(a(j, i))));
  return m;
}

namespace {

double offdiag_norm(const ComplexMatrix &a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j)
        s += std::norm(a(i, j));
  return std::sqrt(s);
}

// Multiply column phases so the largest-magnitude component of each column is
// real positive; ties in magnitude resolve to the lowest row index.
void fix_column_phases(ComplexMatrix &v) {
  const std::size_t n = v.rows();
  for (std::size_t j = 0; j < v.cols(); ++j) {
    std::size_t imax = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double m = std::abs(v(i, j));
      if (m > best + 1e-15) {
        best = m;
        imax = i;
      }
    }
    const cxd z = v(imax, j);
    if (std::abs(z) == 0.0)
      continue;
    const cxd ph = std::conj(z) / std::abs(z);
    for (std::size_t i = 0; i < n; ++i)
      v(i, j) *= ph;
  }
}

// Strict ordering for equal-eigenvalue columns: lexicographic on (Re, Im)
// component pairs, larger first. Any fixed rule works; this one is cheap and
// reproducible.
bool column_lex_greater(const ComplexMatrix &v, std::size_t a, std::size_t b) {
  for (std::size_t i = 0; i < v.rows(); ++i) {
    const cxd &x = v(i, a);
    const cxd &y = v(i, b);
    if (x.real() != y.real())
      return x.real() > y.real();
    if (x.imag() != y.imag())
      return x.imag() > y.imag();
  }
  return false;
}

} // namespace

Spectrum hermitian_eig(const ComplexMatrix &a, double herm_tol,
                       double off_tol) {
  if (!a.square())
    throw std::invalid_argument("hermitian_eig: matrix not square");
  if (!a.finite())
    throw std::invalid_argument("hermitian_eig: non-finite entries");
  if (hermiticity_defect(a) > herm_tol)
    throw std::invalid_argument("hermitian_eig: matrix not Hermitian");

  const std::size_t n = a.rows();

  // Work on the exactly-Hermitian part so roundoff in the input cannot leak
  // imaginary components onto the diagonal.
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));

  ComplexMatrix v = ComplexMatrix::identity(n);

  const int max_sweeps = 100;
  int sweep = 0;
  while (offdiag_norm(m) > off_tol) {
    if (++sweep > max_sweeps)
      throw std::runtime_error("hermitian_eig: Jacobi sweeps did not converge");
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cxd apq = m(p, q);
        const double beta = std::abs(apq);
        if (beta <= 0.25 * off_tol / static_cast<double>(n * n))
          continue;
        const cxd ph = apq / beta;
        const double app = m(p, p).real();
        const double aqq = m(q, q).real();
        // tan(theta) solving t^2 - 2*zeta*t - 1 = 0, smaller-|t| root.
        const double zeta = (aqq - app) / (2.0 * beta);
        const double sgn = zeta >= 0.0 ? 1.0 : -1.0;
        const double t = -1.0 / (zeta + sgn * std::sqrt(zeta * zeta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (std::size_t i = 0; i < n; ++i) {
          if (i == p || i == q)
            continue;
          const cxd aip = m(i, p);
          const cxd aiq = m(i, q);
          m(i, p) = c * aip + s * std::conj(ph) * aiq;
          m(i, q) = -s * ph * aip + c * aiq;
          m(p, i) = std::conj(m(i, p));
          m(q, i) = std::conj(m(i, q));
        }
        m(p, p) = app * c * c + aqq * s * s + 2.0 * s * c * beta;
        m(q, q) = app * s * s + aqq * c * c - 2.0 * s * c * beta;
        m(p, q) = 0.0;
        m(q, p) = 0.0;

        for (std::size_t i = 0; i < n; ++i) {
          const cxd vip = v(i, p);
          const cxd viq = v(i, q);
          v(i, p) = c * vip + s * std::conj(ph) * viq;
          v(i, q) = -s * ph * vip + c * viq;
        }
      }
    }
  }

  fix_column_phases(v);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) {
                     const double lx = m(x, x).real();
                     const double ly = m(y, y).real();
                     if (lx != ly)
                       return lx > ly;
                     return column_lex_greater(v, x, y);
                   });

  Spectrum sp;
  sp.eigenvalues.resize(n);
  sp.eigenvectors = ComplexMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    sp.eigenvalues[k] = m(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i)
      sp.eigenvectors(i, k) = v(i, order[k]);
  }
  return sp;
}

namespace {

ComplexMatrix rebuild_from_spectrum(const Spectrum &sp,
                                    const std::vector<double> &f) {
  const std::size_t n = sp.eigenvalues.size();
  ComplexMatrix r(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    if (f[k] == 0.0)
      continue;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        r(i, j) += f[k] * sp.eigenvectors(i, k) *
                   std::conj(sp.eigenvectors(j, k));
  }
  return r;
}

} // namespace

ComplexMatrix matrix_sqrt(const ComplexMatrix &a) {
  Spectrum sp = hermitian_eig(a);
  std::vector<double> f(sp.eigenvalues.size());
  for (std::size_t k = 0; k < f.size(); ++k) {
    double lam = sp.eigenvalues[k];
    if (lam < -1e-10)
      throw std::domain_error("matrix_sqrt: matrix not positive semi-definite");
    if (lam < 0.0)
      lam = 0.0;
    f[k] = std::sqrt(lam);
  }
  return rebuild_from_spectrum(sp, f);
}

ComplexMatrix matrix_log2(const ComplexMatrix &a, double support_cutoff) {
  Spectrum sp = hermitian_eig(a);
  std::vector<double> f(sp.eigenvalues.size());
  for (std::size_t k = 0; k < f.size(); ++k) {
    const double lam = sp.eigenvalues[k];
    if (lam < -1e-10)
      throw std::domain_error("matrix_log2: matrix not positive semi-definite");
    f[k] = (lam > support_cutoff) ? std::log2(lam) : 0.0;
  }
  return rebuild_from_spectrum(sp, f);
}

ComplexMatrix partial_trace_b(const ComplexMatrix &g, std::size_t dim_a,
                              std::size_t dim_b) {
  if (!g.square() || g.rows() != dim_a * dim_b)
    throw std::invalid_argument("partial_trace_b: dimension mismatch");
  ComplexMatrix r(dim_a, dim_a);
  for (std::size_t i = 0; i < dim_a; ++i)
    for (std::size_t j = 0; j < dim_a; ++j)
      for (std::size_t m = 0; m < dim_b; ++m)
        r(i, j) += g(i * dim_b + m, j * dim_b + m);
  return r;
}

ComplexMatrix pauli_x() {
  return ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
}

ComplexMatrix pauli_y() {
  return ComplexMatrix::from_rows({{0.0, cxd(0.0, -1.0)}, {cxd(0.0, 1.0), 0.0}});
}

ComplexMatrix pauli_z() {
  return ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}});
}

} // namespace qic
