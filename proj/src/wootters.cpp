#include "qic/wootters.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qic {

namespace {

const double kRankCutoff = 1e-12;

std::vector<cxd> column(const ComplexMatrix &m, std::size_t j, double scale) {
  std::vector<cxd> v(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    v[i] = scale * m(i, j);
  return v;
}

cxd inner(const std::vector<cxd> &a, const std::vector<cxd> &b) {
  cxd s(0.0, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    s += std::conj(a[i]) * b[i];
  return s;
}

double norm2(const std::vector<cxd> &a) { return inner(a, a).real(); }

// Real symmetric embedding of a complex symmetric tau = R + iJ:
//   M = [[R, J], [J, -R]].
// An eigenpair M (x; y) = s (x; y) is the con-eigenvector relation
// tau conj(w) = s w with w = x + iy, and (-y; x) pairs with it at -s, so
// the spectrum of M is the con-eigenvalue set with both signs.
ComplexMatrix real_embedding(const ComplexMatrix &tau) {
  const std::size_t n = tau.rows();
  ComplexMatrix m(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double re = 0.5 * (tau(i, j) + tau(j, i)).real();
      const double im = 0.5 * (tau(i, j) + tau(j, i)).imag();
      m(i, j) = re;
      m(i, j + n) = im;
      m(i + n, j) = im;
      m(i + n, j + n) = -re;
    }
  return m;
}

// Non-negative con-eigenvalues of a complex symmetric matrix, descending.
// The embedding keeps the error linear in the eigensolver tolerance; there
// is no square-root amplification near zero, unlike the product-spectrum
// route.
std::vector<double> takagi_values(const ComplexMatrix &tau) {
  const std::size_t n = tau.rows();
  const Spectrum sp = hermitian_eig(real_embedding(tau));
  std::vector<double> vals(n);
  for (std::size_t k = 0; k < n; ++k)
    vals[k] = std::max(0.0, sp.eigenvalues[k]);
  return vals;
}

} // namespace

DensityMatrix spin_flip(const DensityMatrix &g) {
  if (g.dim() != 4)
    throw std::invalid_argument("spin_flip: expected a two-qubit state");
  const ComplexMatrix yy = kron(pauli_y(), pauli_y());
  ComplexMatrix flipped = yy * conjugate(g.matrix()) * yy;
  return DensityMatrix(std::move(flipped), 2, 2);
}

std::vector<cxd> spin_flip_vec(const std::vector<cxd> &v) {
  if (v.size() != 4)
    throw std::invalid_argument("spin_flip_vec: expected a two-qubit vector");
  // (sigma_y x sigma_y) conj(v) in closed form.
  return {-std::conj(v[3]), std::conj(v[2]), std::conj(v[1]),
          -std::conj(v[0])};
}

ConcurrenceReport concurrence(const DensityMatrix &g) {
  if (g.dim() != 4)
    throw std::invalid_argument("concurrence: expected a two-qubit state");

  // The lambdas are the con-eigenvalues of the symmetric overlap matrix
  // tau_ij = <v_i | v~_j> built on subnormalized eigenvectors of g. This is
  // equivalent to the spectrum of sqrt(sqrt(g) g~ sqrt(g)) but loses no
  // precision for vanishing lambdas: a pure state comes out exactly
  // (lambda_1, 0, 0, 0) instead of picking up sqrt-of-noise terms.
  const Spectrum sp = hermitian_eig(g.matrix());
  std::vector<std::vector<cxd>> v(4);
  for (std::size_t k = 0; k < 4; ++k)
    v[k] = column(sp.eigenvectors, k,
                  std::sqrt(std::max(0.0, sp.eigenvalues[k])));
  ComplexMatrix tau(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i; j < 4; ++j) {
      const cxd tij = inner(v[i], spin_flip_vec(v[j]));
      tau(i, j) = tij;
      tau(j, i) = tij;
    }
  const std::vector<double> lam = takagi_values(tau);

  ConcurrenceReport rep{};
  for (std::size_t k = 0; k < 4; ++k)
    rep.lambdas[k] = lam[k];
  rep.concurrence = std::max(
      0.0, rep.lambdas[0] - rep.lambdas[1] - rep.lambdas[2] - rep.lambdas[3]);
  rep.eof_bits = binary_entropy(
      std::sqrt(std::max(0.0, 1.0 - rep.concurrence * rep.concurrence)));
  return rep;
}

// ---------------------------------------------------------------------------
// Takagi factorization via the real symmetric embedding (see real_embedding
// above). For a value s > 0 of multiplicity m the +s eigenspace of the
// embedding has real dimension exactly m and the extracted directions come
// out complex-orthonormal on their own; only the kernel doubles up (w and iw
// both sit at 0), which the projection step below deduplicates. The route
// stays exact for degenerate Takagi values, which occur in the states this
// library cares about.
// ---------------------------------------------------------------------------
TakagiFactorization takagi(const ComplexMatrix &tau) {
  if (!tau.square())
    throw std::invalid_argument("takagi: matrix not square");
  const std::size_t n = tau.rows();
  double sym_defect = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      sym_defect = std::max(sym_defect, std::abs(tau(i, j) - tau(j, i)));
  if (sym_defect > 1e-10)
    throw std::invalid_argument("takagi: matrix not symmetric");

  Spectrum sp = hermitian_eig(real_embedding(tau));

  std::vector<std::vector<cxd>> vecs;
  std::vector<double> vals;
  for (std::size_t k = 0; k < 2 * n && vecs.size() < n; ++k) {
    const double s = sp.eigenvalues[k];
    if (s < -1e-10)
      break; // negative half of the paired spectrum
    // Real eigenvector (x; y) of the embedding maps to w = x + iy.
    std::vector<cxd> w(n);
    for (std::size_t i = 0; i < n; ++i)
      w[i] = cxd(sp.eigenvectors(i, k).real(),
                 sp.eigenvectors(i + n, k).real());
    // Positive-value eigenvectors arrive complex-orthogonal already; inside
    // the kernel (value 0) the basis overcounts by a factor of two, so
    // project out claimed lines and keep only genuinely new directions.
    for (std::size_t j = 0; j < vecs.size(); ++j) {
      const cxd ov = inner(vecs[j], w);
      for (std::size_t i = 0; i < n; ++i)
        w[i] -= ov * vecs[j][i];
    }
    const double nn = std::sqrt(norm2(w));
    if (nn < 1e-6)
      continue;
    for (auto &c : w)
      c /= nn;
    vecs.push_back(std::move(w));
    vals.push_back(std::max(0.0, s));
  }
  if (vecs.size() != n)
    throw std::runtime_error("takagi: eigenspace pairing failed");

  TakagiFactorization out;
  out.values = std::move(vals);
  out.u = ComplexMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    // Only a real sign is gauge here: w -> e^{ia} w keeps the con-eigen
    // relation only for a in {0, pi}. Flip so the largest-magnitude
    // component leans positive, lowest index breaking ties.
    std::size_t imax = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < n; ++i)
      if (std::abs(vecs[j][i]) > best + 1e-15) {
        best = std::abs(vecs[j][i]);
        imax = i;
      }
    const cxd lead = vecs[j][imax];
    double sign = 1.0;
    if (lead.real() < -1e-12 ||
        (std::abs(lead.real()) <= 1e-12 && lead.imag() < 0.0))
      sign = -1.0;
    for (std::size_t i = 0; i < n; ++i)
      out.u(i, j) = sign * vecs[j][i];
  }

  // Verify the factorization before returning it.
  ComplexMatrix rebuilt(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      cxd s(0.0, 0.0);
      for (std::size_t k = 0; k < n; ++k)
        s += out.values[k] * out.u(i, k) * out.u(j, k);
      rebuilt(i, j) = s;
    }
  if (max_abs_diff(rebuilt, tau) > 1e-9)
    throw std::runtime_error("takagi: reconstruction check failed");
  return out;
}

namespace {

// Pre-concurrence matrix entry T_ab = <z_a | z~_b>; symmetric in (a, b).
cxd pre_t(const std::vector<std::vector<cxd>> &z, std::size_t a,
          std::size_t b) {
  return inner(z[a], spin_flip_vec(z[b]));
}

// Deterministic closed-form rotation pass driving every T_kk / G_kk to mu.
void equalize_to_mu(std::vector<std::vector<cxd>> &z, double mu) {
  const std::size_t r = z.size();
  auto member_dev = [&]() {
    double dev = 0.0;
    for (std::size_t k = 0; k < r; ++k) {
      const double g = norm2(z[k]);
      if (g < 1e-14)
        continue;
      dev = std::max(dev, std::abs(std::abs(pre_t(z, k, k)) / g - mu));
    }
    return dev;
  };

  for (int pass = 0; pass < 64; ++pass) {
    if (member_dev() <= 1e-12)
      return;
    for (std::size_t k = 0; k + 1 < r; ++k) {
      const double fk = pre_t(z, k, k).real() - mu * norm2(z[k]);
      if (std::abs(fk) <= 1e-15)
        continue;
      // Partners: opposite-sign deviations, smallest magnitude first. The
      // sum of deviations is zero throughout, so one exists while any
      // deviation persists; later candidates only matter when the best one
      // yields a degenerate rotation equation.
      std::vector<std::size_t> cand;
      for (std::size_t j = k + 1; j < r; ++j) {
        const double fj = pre_t(z, j, j).real() - mu * norm2(z[j]);
        if (fj * fk <= 0.0)
          cand.push_back(j);
      }
      std::sort(cand.begin(), cand.end(), [&](std::size_t a, std::size_t b) {
        const double fa = std::abs(pre_t(z, a, a).real() - mu * norm2(z[a]));
        const double fb = std::abs(pre_t(z, b, b).real() - mu * norm2(z[b]));
        if (fa != fb)
          return fa < fb;
        return a < b;
      });
      for (std::size_t j : cand) {
        const double fj = pre_t(z, j, j).real() - mu * norm2(z[j]);
        const double w = pre_t(z, k, j).real() - mu * inner(z[k], z[j]).real();
        const double disc = w * w - fk * fj;
        if (disc < 0.0)
          continue;
        double t;
        if (std::abs(fj) < 1e-18) {
          if (std::abs(w) < 1e-18)
            continue;
          t = -fk / (2.0 * w);
        } else {
          // Citardauq form of the smaller root of fj t^2 + 2 w t + fk = 0.
          const double sgn = w >= 0.0 ? 1.0 : -1.0;
          t = fk / (-(w + sgn * std::sqrt(disc)));
        }
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (std::size_t i = 0; i < z[k].size(); ++i) {
          const cxd zk = z[k][i];
          const cxd zj = z[j][i];
          z[k][i] = c * zk + s * zj;
          z[j][i] = -s * zk + c * zj;
        }
        break;
      }
    }
  }
  if (member_dev() > 1e-10)
    throw std::runtime_error(
        "optimal_decomposition: concurrence equalization did not converge");
}

// Directions e^{2 i theta_j} closing a polygon with sides s (descending,
// s_1 <= sum of the rest). Sides beyond the second share one direction.
std::vector<cxd> closure_directions(const std::vector<double> &s) {
  const std::size_t r = s.size();
  std::vector<cxd> u(r, cxd(1.0, 0.0));
  if (r == 1) {
    return u; // s_1 must be ~0 here; any direction closes
  }
  if (r == 2) {
    u[1] = cxd(-1.0, 0.0);
    return u;
  }
  double a = s[0];
  double b = s[1];
  double c = 0.0;
  for (std::size_t j = 2; j < r; ++j)
    c += s[j];
  if (c <= 0.0) {
    u[1] = cxd(-1.0, 0.0); // degenerate: behaves like the two-side case
    return u;
  }
  double cos1 = (a * a + b * b - c * c) / (2.0 * a * b);
  cos1 = std::min(1.0, std::max(-1.0, cos1));
  const double sin1 = std::sqrt(std::max(0.0, 1.0 - cos1 * cos1));
  const cxd ub(-cos1, sin1);
  cxd uc = -(a * cxd(1.0, 0.0) + b * ub);
  uc /= std::abs(uc);
  u[1] = ub;
  for (std::size_t j = 2; j < r; ++j)
    u[j] = uc;
  return u;
}

void rotate_pair(std::vector<std::vector<cxd>> &z, std::size_t a,
                 std::size_t b) {
  const double inv = 1.0 / std::sqrt(2.0);
  for (std::size_t i = 0; i < z[a].size(); ++i) {
    const cxd za = z[a][i];
    const cxd zb = z[b][i];
    z[a][i] = inv * (za + zb);
    z[b][i] = inv * (zb - za);
  }
}

} // namespace

OptimalDecomposition optimal_decomposition(const DensityMatrix &g) {
  if (g.dim() != 4)
    throw std::invalid_argument(
        "optimal_decomposition: expected a two-qubit state");

  const ConcurrenceReport rep = concurrence(g);

  Spectrum sp = hermitian_eig(g.matrix());
  std::size_t r = 0;
  while (r < 4 && sp.eigenvalues[r] > kRankCutoff)
    ++r;
  if (r == 0)
    throw std::runtime_error("optimal_decomposition: zero-rank input");

  // Subnormalized eigenvectors of g.
  std::vector<std::vector<cxd>> v(r);
  for (std::size_t k = 0; k < r; ++k)
    v[k] = column(sp.eigenvectors, k, std::sqrt(sp.eigenvalues[k]));

  // tau_ij = <v_i | v~_j> is complex symmetric.
  ComplexMatrix tau(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i; j < r; ++j) {
      const cxd tij = inner(v[i], spin_flip_vec(v[j]));
      tau(i, j) = tij;
      tau(j, i) = tij;
    }
  }

  TakagiFactorization tf = takagi(tau);

  // x_i = sum_a U(a,i) v_a satisfies <x_i | x~_j> = value_i delta_ij.
  std::vector<std::vector<cxd>> x(r, std::vector<cxd>(4, cxd(0.0, 0.0)));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t c = 0; c < 4; ++c)
        x[i][c] += tf.u(a, i) * v[a][c];

  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      const cxd tij = inner(x[i], spin_flip_vec(x[j]));
      const cxd want = (i == j) ? cxd(tf.values[i], 0.0) : cxd(0.0, 0.0);
      if (std::abs(tij - want) > 1e-8)
        throw std::runtime_error(
            "optimal_decomposition: Takagi alignment check failed");
    }

  double m = tf.values[0];
  for (std::size_t j = 1; j < r; ++j)
    m -= tf.values[j];

  std::vector<std::vector<cxd>> z;
  if (m > 0.0) {
    // Phase subdominant states by i: pre-concurrences (l1, -l2, -l3, -l4).
    z = x;
    for (std::size_t j = 1; j < r; ++j)
      for (auto &c : z[j])
        c *= cxd(0.0, 1.0);
    equalize_to_mu(z, m);
  } else {
    // Zero-concurrence branch: pick phases whose pre-concurrences close a
    // polygon, then average them pairwise with pi/4 rotations so every
    // member lands on pre-concurrence 0.
    const std::vector<cxd> u = closure_directions(
        std::vector<double>(tf.values.begin(), tf.values.begin() + r));
    z = x;
    for (std::size_t j = 0; j < r; ++j) {
      const cxd phase = std::sqrt(u[j]);
      for (auto &c : z[j])
        c *= phase;
    }
    if (r == 2) {
      rotate_pair(z, 0, 1);
    } else if (r >= 3) {
      if (r == 3)
        z.push_back(std::vector<cxd>(4, cxd(0.0, 0.0)));
      rotate_pair(z, 0, 1);
      rotate_pair(z, 2, 3);
      rotate_pair(z, 0, 2);
      rotate_pair(z, 1, 3);
    }
  }

  // Assemble the ensemble: weights are the subnormalized norms.
  struct Entry {
    double weight;
    std::vector<cxd> state;
  };
  std::vector<Entry> entries;
  for (auto &zk : z) {
    const double wgt = norm2(zk);
    if (wgt < 1e-12)
      continue;
    const double inv = 1.0 / std::sqrt(wgt);
    for (auto &c : zk)
      c *= inv;
    entries.push_back({wgt, std::move(zk)});
  }
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry &a, const Entry &b) {
                     if (a.weight != b.weight)
                       return a.weight > b.weight;
                     for (std::size_t i = 0; i < a.state.size(); ++i) {
                       if (a.state[i].real() != b.state[i].real())
                         return a.state[i].real() > b.state[i].real();
                       if (a.state[i].imag() != b.state[i].imag())
                         return a.state[i].imag() > b.state[i].imag();
                     }
                     return false;
                   });

  OptimalDecomposition out;
  out.eof_bits = rep.eof_bits;
  ComplexMatrix recon(4, 4);
  for (const Entry &e : entries) {
    out.ensemble.weights.push_back(e.weight);
    PureState psi(e.state, 2, 2);
    out.ensemble.members.push_back(psi);
    const double pc = std::abs(inner(e.state, spin_flip_vec(e.state)));
    out.per_member_concurrence.push_back(pc);
    out.reduced_matrices.push_back(reduced_density(psi));
    recon = recon + e.weight * projector(psi).matrix();
  }

  // Normalize the weight sum drift before the Ensemble validity check.
  double wsum = std::accumulate(out.ensemble.weights.begin(),
                                out.ensemble.weights.end(), 0.0);
  for (auto &w : out.ensemble.weights)
    w /= wsum;
  validate_ensemble(out.ensemble);

  if (max_abs_diff(recon, g.matrix()) > 1e-9)
    throw std::runtime_error("optimal_decomposition: reconstruction failed");
  for (double pc : out.per_member_concurrence)
    if (std::abs(pc - rep.concurrence) > 1e-8)
      throw std::runtime_error(
          "optimal_decomposition: member concurrence off target");
  for (const DensityMatrix &w : out.reduced_matrices)
    if (std::abs(von_neumann_entropy(w) - rep.eof_bits) > 1e-8)
      throw std::runtime_error(
          "optimal_decomposition: member entropy off target");
  return out;
}

DensityMatrix reduced_density(const PureState &psi) {
  if (psi.dim() != 4 || psi.dim_a() != 2 || psi.dim_b() != 2)
    throw std::invalid_argument("reduced_density: expected dims (2,2)");
  const ComplexMatrix p = outer(psi.amplitudes(), psi.amplitudes());
  return DensityMatrix(partial_trace_b(p, 2, 2), 2, 1);
}

SchmidtCheck schmidt_diagonality_check(const PureState &psi) {
  const DensityMatrix w = reduced_density(psi);
  const double res = std::abs(w.matrix()(0, 1));
  return {res <= 1e-8, res};
}

} // namespace qic
