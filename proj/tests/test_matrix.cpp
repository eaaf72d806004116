#include <doctest.h>

#include <cmath>
#include <random>

#include "qic/matrix.hpp"
#include "support.hpp"

using qic::ComplexMatrix;
using qic::cxd;

namespace {

ComplexMatrix random_hermitian(std::size_t n, std::mt19937_64 &rng) {
  const ComplexMatrix g = testsupport::ginibre(n, n, rng);
  return 0.5 * (g + qic::adjoint(g));
}

} // namespace

TEST_CASE("identity and element access") {
  const ComplexMatrix eye = ComplexMatrix::identity(3);
  CHECK(eye.rows() == 3);
  CHECK(eye(0, 0) == cxd(1.0, 0.0));
  CHECK(eye(0, 1) == cxd(0.0, 0.0));
  CHECK(qic::trace(eye) == cxd(3.0, 0.0));
}

TEST_CASE("arithmetic and adjoint") {
  const ComplexMatrix a = ComplexMatrix::from_rows({{cxd(1, 2), cxd(0, -1)},
                                                    {cxd(3, 0), cxd(0, 4)}});
  const ComplexMatrix b = qic::adjoint(a);
  CHECK(b(0, 0) == cxd(1, -2));
  CHECK(b(0, 1) == cxd(3, 0));
  CHECK(b(1, 0) == cxd(0, 1));
  CHECK(b(1, 1) == cxd(0, -4));

  const ComplexMatrix s = a - a;
  CHECK(qic::max_abs(s) == 0.0);
  CHECK(qic::max_abs_diff(2.0 * a, a + a) == 0.0);
}

TEST_CASE("multiplication against hand result") {
  const ComplexMatrix a = ComplexMatrix::from_rows({{cxd(0, 1), cxd(2, 0)},
                                                    {cxd(1, 0), cxd(0, 0)}});
  const ComplexMatrix b = ComplexMatrix::from_rows({{cxd(1, 0), cxd(0, 1)},
                                                    {cxd(0, -1), cxd(3, 0)}});
  const ComplexMatrix c = a * b;
  CHECK(c(0, 0) == cxd(0, -1));
  CHECK(c(0, 1) == cxd(5, 0));
  CHECK(c(1, 0) == cxd(1, 0));
  CHECK(c(1, 1) == cxd(0, 1));
}

TEST_CASE("pauli algebra") {
  const ComplexMatrix x = qic::pauli_x();
  const ComplexMatrix y = qic::pauli_y();
  const ComplexMatrix z = qic::pauli_z();
  CHECK(y(0, 1) == cxd(0, -1));
  CHECK(y(1, 0) == cxd(0, 1));
  // sigma_x sigma_y = i sigma_z
  CHECK(qic::max_abs_diff(x * y, cxd(0, 1) * z) == 0.0);
  CHECK(qic::max_abs_diff(x * x, ComplexMatrix::identity(2)) == 0.0);
}

TEST_CASE("kron places the first factor on the slow index") {
  const ComplexMatrix a = ComplexMatrix::from_rows({{cxd(1, 0), cxd(2, 0)},
                                                    {cxd(3, 0), cxd(4, 0)}});
  const ComplexMatrix b = ComplexMatrix::from_rows({{cxd(0, 0), cxd(5, 0)},
                                                    {cxd(6, 0), cxd(7, 0)}});
  const ComplexMatrix k = qic::kron(a, b);
  REQUIRE(k.rows() == 4);
  CHECK(k(0, 1) == cxd(5, 0));   // a(0,0) b(0,1)
  CHECK(k(0, 3) == cxd(10, 0));  // a(0,1) b(0,1)
  CHECK(k(2, 0) == cxd(0, 0));   // a(1,0) b(0,0)
  CHECK(k(3, 3) == cxd(28, 0));  // a(1,1) b(1,1)
}

TEST_CASE("sigma_z on the slow qubit swaps the two Bell states") {
  const std::vector<cxd> b0 = {cxd(1 / std::sqrt(2.0), 0), cxd(0, 0),
                               cxd(0, 0), cxd(1 / std::sqrt(2.0), 0)};
  const ComplexMatrix op = qic::kron(qic::pauli_z(),
                                     ComplexMatrix::identity(2));
  const std::vector<cxd> out = qic::mat_vec(op, b0);
  CHECK(std::abs(out[0] - b0[0]) < 1e-15);
  CHECK(std::abs(out[3] + b0[3]) < 1e-15);
  CHECK(std::abs(out[1]) == 0.0);
  CHECK(std::abs(out[2]) == 0.0);
}

TEST_CASE("outer product") {
  const std::vector<cxd> u = {cxd(1, 0), cxd(0, 1)};
  const std::vector<cxd> v = {cxd(0, 0), cxd(2, 0)};
  const ComplexMatrix m = qic::outer(u, v);
  CHECK(m(0, 1) == cxd(2, 0));
  CHECK(m(1, 1) == cxd(0, 2));
  CHECK(m(0, 0) == cxd(0, 0));
}

TEST_CASE("hermitian eigensolve of a 2x2 with known spectrum") {
  const ComplexMatrix a = ComplexMatrix::from_rows({{cxd(2, 0), cxd(0, 1)},
                                                    {cxd(0, -1), cxd(2, 0)}});
  const qic::Spectrum sp = qic::hermitian_eig(a);
  CHECK(sp.eigenvalues[0] == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(sp.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("hermitian eigensolve reconstructs random matrices") {
  std::mt19937_64 rng(7001);
  for (int t = 0; t < 25; ++t) {
    const std::size_t n = 2 + static_cast<std::size_t>(t % 4);
    const ComplexMatrix a = random_hermitian(n, rng);
    const qic::Spectrum sp = qic::hermitian_eig(a);
    ComplexMatrix d(n, n);
    for (std::size_t i = 0; i < n; ++i)
      d(i, i) = sp.eigenvalues[i];
    const ComplexMatrix rebuilt =
        sp.eigenvectors * d * qic::adjoint(sp.eigenvectors);
    CHECK(qic::max_abs_diff(rebuilt, a) < 1e-10);
    const ComplexMatrix gram =
        qic::adjoint(sp.eigenvectors) * sp.eigenvectors;
    CHECK(qic::max_abs_diff(gram, ComplexMatrix::identity(n)) < 1e-11);
    for (std::size_t i = 0; i + 1 < n; ++i)
      CHECK(sp.eigenvalues[i] >= sp.eigenvalues[i + 1]);
  }
}

TEST_CASE("hermitian eigensolve handles degenerate spectra") {
  std::mt19937_64 rng(7002);
  const ComplexMatrix u = testsupport::random_unitary(4, rng);
  ComplexMatrix d(4, 4);
  d(0, 0) = 1.0;
  d(1, 1) = 1.0;
  const ComplexMatrix p = u * d * qic::adjoint(u);
  const qic::Spectrum sp = qic::hermitian_eig(p);
  CHECK(sp.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-11));
  CHECK(sp.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-11));
  CHECK(std::abs(sp.eigenvalues[2]) < 1e-11);
  CHECK(std::abs(sp.eigenvalues[3]) < 1e-11);
  ComplexMatrix dd(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    dd(i, i) = sp.eigenvalues[i];
  CHECK(qic::max_abs_diff(sp.eigenvectors * dd * qic::adjoint(sp.eigenvectors),
                          p) < 1e-10);
}

TEST_CASE("hermitian eigensolve rejects non-hermitian input") {
  const ComplexMatrix a = ComplexMatrix::from_rows({{cxd(0, 0), cxd(1, 0)},
                                                    {cxd(0, 0), cxd(0, 0)}});
  CHECK_THROWS_AS((void)qic::hermitian_eig(a), std::invalid_argument);
}

TEST_CASE("matrix square root") {
  std::mt19937_64 rng(7003);
  const ComplexMatrix g = testsupport::ginibre(3, 3, rng);
  const ComplexMatrix a = g * qic::adjoint(g);
  const ComplexMatrix r = qic::matrix_sqrt(a);
  CHECK(qic::max_abs_diff(r * r, a) < 1e-9);
}

TEST_CASE("base-2 matrix logarithm on full support") {
  const ComplexMatrix half = 0.5 * ComplexMatrix::identity(2);
  const ComplexMatrix l = qic::matrix_log2(half);
  CHECK(qic::max_abs_diff(l, -1.0 * ComplexMatrix::identity(2)) < 1e-12);
}

TEST_CASE("base-2 matrix logarithm projects away the kernel") {
  ComplexMatrix m(2, 2);
  m(0, 0) = 1.0;
  const ComplexMatrix l = qic::matrix_log2(m);
  // log2(1) = 0 on the support, and the kernel block is dropped.
  CHECK(qic::max_abs(l) < 1e-12);
}

TEST_CASE("partial trace over the fast factor") {
  std::mt19937_64 rng(7004);
  const ComplexMatrix a = random_hermitian(2, rng);
  const ComplexMatrix b = random_hermitian(3, rng);
  const ComplexMatrix joint = qic::kron(a, b);
  const ComplexMatrix reduced = qic::partial_trace_b(joint, 2, 3);
  CHECK(qic::max_abs_diff(reduced, qic::trace(b).real() * a) < 1e-12);
}

TEST_CASE("partial trace of a Bell projector is maximally mixed") {
  const double s = 1 / std::sqrt(2.0);
  const std::vector<cxd> b0 = {cxd(s, 0), cxd(0, 0), cxd(0, 0), cxd(s, 0)};
  const ComplexMatrix proj = qic::outer(b0, b0);
  const ComplexMatrix reduced = qic::partial_trace_b(proj, 2, 2);
  CHECK(qic::max_abs_diff(reduced, 0.5 * ComplexMatrix::identity(2)) < 1e-15);
}

TEST_CASE("frobenius norm and hermiticity defect") {
  const ComplexMatrix a = ComplexMatrix::from_rows({{cxd(3, 0), cxd(0, 4)},
                                                    {cxd(0, 0), cxd(0, 0)}});
  CHECK(qic::frobenius_norm(a) == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(qic::hermiticity_defect(ComplexMatrix::identity(2)) == 0.0);
  CHECK(qic::hermiticity_defect(a) > 1.0);
}
