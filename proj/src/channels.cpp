#include "qic/channels.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>
#include <utility>

#include "qic/wootters.hpp"

namespace qic {

namespace {

const double kPi = 3.14159265358979323846;

// --------------------------------------------------------------------------
// Flat 2x2 helpers for the optimizer hot path (no heap traffic).
// --------------------------------------------------------------------------
using M2 = std::array<cxd, 4>; // row-major

M2 to_m2(const ComplexMatrix &m) {
  return {m(0, 0), m(0, 1), m(1, 0), m(1, 1)};
}

ComplexMatrix from_m2(const M2 &m) {
  ComplexMatrix out(2, 2);
  out(0, 0) = m[0];
  out(0, 1) = m[1];
  out(1, 0) = m[2];
  out(1, 1) = m[3];
  return out;
}

// Channel image of the pure input with polar angle theta, azimuth phi.
M2 output_of(const std::vector<M2> &ops, double theta, double phi) {
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  const cxd a0(c, 0.0);
  const cxd a1(s * std::cos(phi), s * std::sin(phi));
  M2 out{};
  for (const M2 &a : ops) {
    const cxd v0 = a[0] * a0 + a[1] * a1;
    const cxd v1 = a[2] * a0 + a[3] * a1;
    out[0] += v0 * std::conj(v0);
    out[1] += v0 * std::conj(v1);
    out[2] += v1 * std::conj(v0);
    out[3] += v1 * std::conj(v1);
  }
  return out;
}

void eig2(const M2 &m, double &lo, double &hi) {
  const double t = m[0].real() + m[3].real();
  const double det = (m[0] * m[3] - m[1] * m[2]).real();
  const double disc = std::sqrt(std::max(0.0, 0.25 * t * t - det));
  hi = 0.5 * t + disc;
  lo = 0.5 * t - disc;
}

double entropy2_bits(const M2 &m) {
  double lo, hi;
  eig2(m, lo, hi);
  auto term = [](double l) { return l > 1e-15 ? -l * std::log2(l) : 0.0; };
  return term(lo) + term(hi);
}

// log2 of a full-rank Hermitian 2x2 via its spectral projectors; false when
// the matrix is too close to singular for this fast path.
bool log2_herm2(const M2 &m, M2 &out) {
  double lo, hi;
  eig2(m, lo, hi);
  if (lo < 1e-14)
    return false;
  if (hi - lo < 1e-15) {
    const double l = std::log2(0.5 * (lo + hi));
    out = {cxd(l, 0.0), cxd(0.0, 0.0), cxd(0.0, 0.0), cxd(l, 0.0)};
    return true;
  }
  const double inv = 1.0 / (hi - lo);
  M2 phi{}; // projector on the upper eigenvalue
  phi[0] = (m[0] - lo) * inv;
  phi[1] = m[1] * inv;
  phi[2] = m[2] * inv;
  phi[3] = (m[3] - lo) * inv;
  const double lh = std::log2(hi);
  const double ll = std::log2(lo);
  out[0] = lh * phi[0] + ll * (1.0 - phi[0]);
  out[1] = (lh - ll) * phi[1];
  out[2] = (lh - ll) * phi[2];
  out[3] = lh * phi[3] + ll * (1.0 - phi[3]);
  return true;
}

double trace_prod_re(const M2 &a, const M2 &b) {
  return (a[0] * b[0] + a[1] * b[2] + a[2] * b[1] + a[3] * b[3]).real();
}

// --------------------------------------------------------------------------
// Derivative-free simplex minimizer (reflection 1, expansion 2,
// contraction 1/2, shrink 1/2), stopping on value spread or iteration cap.
// --------------------------------------------------------------------------
struct NmOutcome {
  std::vector<double> x;
  double value = 0.0;
  long long evals = 0;
};

NmOutcome nelder_mead(const std::function<double(const std::vector<double> &)> &f,
                      const std::vector<double> &x0,
                      const std::vector<double> &step, int max_iter,
                      double tol) {
  const std::size_t n = x0.size();
  std::vector<std::vector<double>> pts(n + 1, x0);
  for (std::size_t i = 0; i < n; ++i)
    pts[i + 1][i] += step[i];
  std::vector<double> fv(n + 1);
  long long evals = 0;
  for (std::size_t i = 0; i <= n; ++i) {
    fv[i] = f(pts[i]);
    ++evals;
  }
  std::vector<std::size_t> idx(n + 1);
  for (int it = 0; it < max_iter; ++it) {
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
    const std::size_t best = idx[0];
    const std::size_t second = idx[n - 1];
    const std::size_t worst = idx[n];
    if (fv[worst] - fv[best] < tol)
      break;

    std::vector<double> centroid(n, 0.0);
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == worst)
        continue;
      for (std::size_t d = 0; d < n; ++d)
        centroid[d] += pts[i][d];
    }
    for (double &c : centroid)
      c /= static_cast<double>(n);

    auto blend = [&](double coef) {
      std::vector<double> x(n);
      for (std::size_t d = 0; d < n; ++d)
        x[d] = centroid[d] + coef * (centroid[d] - pts[worst][d]);
      return x;
    };

    std::vector<double> xr = blend(1.0);
    const double fr = f(xr);
    ++evals;
    bool shrink = false;
    if (fr < fv[best]) {
      std::vector<double> xe = blend(2.0);
      const double fe = f(xe);
      ++evals;
      if (fe < fr) {
        pts[worst] = std::move(xe);
        fv[worst] = fe;
      } else {
        pts[worst] = std::move(xr);
        fv[worst] = fr;
      }
    } else if (fr < fv[second]) {
      pts[worst] = std::move(xr);
      fv[worst] = fr;
    } else if (fr < fv[worst]) {
      std::vector<double> xc = blend(0.5);
      const double fc = f(xc);
      ++evals;
      if (fc <= fr) {
        pts[worst] = std::move(xc);
        fv[worst] = fc;
      } else {
        shrink = true;
      }
    } else {
      std::vector<double> xc = blend(-0.5);
      const double fc = f(xc);
      ++evals;
      if (fc < fv[worst]) {
        pts[worst] = std::move(xc);
        fv[worst] = fc;
      } else {
        shrink = true;
      }
    }
    if (shrink) {
      for (std::size_t i = 0; i <= n; ++i) {
        if (i == best)
          continue;
        for (std::size_t d = 0; d < n; ++d)
          pts[i][d] = pts[best][d] + 0.5 * (pts[i][d] - pts[best][d]);
        fv[i] = f(pts[i]);
        ++evals;
      }
    }
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i <= n; ++i)
    if (fv[i] < fv[best])
      best = i;
  return {pts[best], fv[best], evals};
}

// --------------------------------------------------------------------------
// Capacity solver internals.
// --------------------------------------------------------------------------
struct Working {
  std::vector<double> theta;
  std::vector<double> phi;
  std::vector<double> w;
  std::size_t size() const { return w.size(); }
};

double holevo_of(const std::vector<M2> &ops, const Working &wk) {
  M2 avg{};
  double mean_entropy = 0.0;
  for (std::size_t k = 0; k < wk.size(); ++k) {
    const M2 out = output_of(ops, wk.theta[k], wk.phi[k]);
    for (std::size_t i = 0; i < 4; ++i)
      avg[i] += wk.w[k] * out[i];
    mean_entropy += wk.w[k] * entropy2_bits(out);
  }
  return entropy2_bits(avg) - mean_entropy;
}

std::array<double, 3> bloch_of(double theta, double phi) {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
          std::cos(theta)};
}

void prune_weights(Working &wk, double cutoff) {
  Working out;
  for (std::size_t k = 0; k < wk.size(); ++k) {
    if (wk.w[k] < cutoff)
      continue;
    out.theta.push_back(wk.theta[k]);
    out.phi.push_back(wk.phi[k]);
    out.w.push_back(wk.w[k]);
  }
  double sum = std::accumulate(out.w.begin(), out.w.end(), 0.0);
  for (double &w : out.w)
    w /= sum;
  wk = std::move(out);
}

void merge_members(Working &wk, double bloch_tol) {
  Working out;
  for (std::size_t k = 0; k < wk.size(); ++k) {
    const std::array<double, 3> b = bloch_of(wk.theta[k], wk.phi[k]);
    bool merged = false;
    for (std::size_t j = 0; j < out.size(); ++j) {
      const std::array<double, 3> c = bloch_of(out.theta[j], out.phi[j]);
      const double d = std::sqrt((b[0] - c[0]) * (b[0] - c[0]) +
                                 (b[1] - c[1]) * (b[1] - c[1]) +
                                 (b[2] - c[2]) * (b[2] - c[2]));
      if (d < bloch_tol) {
        out.w[j] += wk.w[k];
        merged = true;
        break;
      }
    }
    if (!merged) {
      out.theta.push_back(wk.theta[k]);
      out.phi.push_back(wk.phi[k]);
      out.w.push_back(wk.w[k]);
    }
  }
  wk = std::move(out);
}

// Relative entropies to the weighted average built from fixed outputs; the
// projected general log kicks in only near a singular average, where the
// mixture support still dominates every component's support.
std::vector<double> distances_to_average(const std::vector<M2> &outs,
                                         const std::vector<double> &w) {
  M2 avg{};
  for (std::size_t k = 0; k < outs.size(); ++k)
    for (std::size_t i = 0; i < 4; ++i)
      avg[i] += w[k] * outs[k][i];
  M2 logavg;
  if (!log2_herm2(avg, logavg))
    logavg = to_m2(matrix_log2(from_m2(avg), 1e-14));
  std::vector<double> d(outs.size());
  for (std::size_t k = 0; k < outs.size(); ++k)
    d[k] = -entropy2_bits(outs[k]) - trace_prod_re(outs[k], logavg);
  return d;
}

// Multiplicative weight fixed point: w_k <- w_k 2^{D_k} / Z. At the fixed
// point every supported member sits at distance exactly the capacity from
// the average output.
long long balance_weights(const std::vector<M2> &outs,
                          std::vector<double> &w) {
  const int cap = 20000;
  for (int it = 0; it < cap; ++it) {
    const std::vector<double> d = distances_to_average(outs, w);
    double z = 0.0;
    std::vector<double> next(w.size());
    for (std::size_t k = 0; k < w.size(); ++k) {
      next[k] = w[k] * std::exp2(d[k]);
      z += next[k];
    }
    double delta = 0.0;
    for (std::size_t k = 0; k < w.size(); ++k) {
      next[k] /= z;
      delta = std::max(delta, std::abs(next[k] - w[k]));
    }
    w = std::move(next);
    if (delta < 1e-13)
      return it + 1;
  }
  return cap;
}

DensityMatrix pure_input(double theta, double phi) {
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  std::vector<cxd> amps = {cxd(c, 0.0),
                           cxd(s * std::cos(phi), s * std::sin(phi))};
  const PureState psi(std::move(amps), 2);
  return projector(psi);
}

} // namespace

KrausChannel::KrausChannel(std::vector<ComplexMatrix> kraus_ops,
                           std::string label)
    : ops_(std::move(kraus_ops)), label_(std::move(label)) {
  if (ops_.empty() || ops_.size() > 4)
    throw std::invalid_argument("KrausChannel: needs 1 to 4 operators");
  for (const ComplexMatrix &a : ops_) {
    if (a.rows() != 2 || a.cols() != 2)
      throw std::invalid_argument("KrausChannel: operators must be 2x2");
    if (!a.finite())
      throw std::invalid_argument("KrausChannel: non-finite operator entry");
  }
  ComplexMatrix sum(2, 2);
  for (const ComplexMatrix &a : ops_)
    sum = sum + adjoint(a) * a;
  if (max_abs_diff(sum, ComplexMatrix::identity(2)) > 1e-10)
    throw std::invalid_argument(
        "KrausChannel: completeness relation violated");
}

DensityMatrix apply(const KrausChannel &ch, const DensityMatrix &rho) {
  if (rho.dim() != 2)
    throw std::invalid_argument("apply: expected a qubit state");
  ComplexMatrix out(2, 2);
  for (const ComplexMatrix &a : ch.kraus_ops())
    out = out + a * rho.matrix() * adjoint(a);
  return DensityMatrix(std::move(out), 2, 1);
}

LiftedState lift(const KrausChannel &ch, const DensityMatrix &rho) {
  if (rho.dim() != 2)
    throw std::invalid_argument("lift: expected a qubit state");
  const std::size_t n = ch.size();
  // Isometry V = sum_j A_j (x) |j>, output index slow, environment fast.
  ComplexMatrix v(2 * n, 2);
  for (std::size_t j = 0; j < n; ++j) {
    const ComplexMatrix &a = ch.kraus_ops()[j];
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 2; ++c)
        v(r * n + j, c) = a(r, c);
  }
  ComplexMatrix gamma = v * rho.matrix() * adjoint(v);
  return {DensityMatrix(std::move(gamma), 2, n), rho};
}

CapacityResult holevo_capacity(const KrausChannel &ch,
                               const SolverConfig &config) {
  if (config.restarts < 1)
    throw std::invalid_argument("holevo_capacity: restarts must be >= 1");
  std::vector<M2> ops;
  for (const ComplexMatrix &a : ch.kraus_ops())
    ops.push_back(to_m2(a));

  // 12 parameters: four (theta, phi) pairs plus four squared raw weights.
  auto unpack = [](const std::vector<double> &p) {
    Working wk;
    double sum = 0.0;
    for (int i = 0; i < 4; ++i) {
      wk.theta.push_back(p[i]);
      wk.phi.push_back(p[4 + i]);
      wk.w.push_back(p[8 + i] * p[8 + i] + 1e-12);
      sum += wk.w.back();
    }
    for (double &w : wk.w)
      w /= sum;
    return wk;
  };
  auto objective = [&](const std::vector<double> &p) {
    return -holevo_of(ops, unpack(p));
  };

  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  long long evals = 0;
  double best_value = std::numeric_limits<double>::infinity();
  std::vector<double> best_params;
  for (int r = 0; r < config.restarts; ++r) {
    std::vector<double> x0(12);
    for (int i = 0; i < 4; ++i) {
      x0[i] = std::acos(1.0 - 2.0 * u01(rng));
      x0[4 + i] = 2.0 * kPi * u01(rng);
      x0[8 + i] = 0.5 + u01(rng);
    }
    std::vector<double> step(12);
    for (int i = 0; i < 4; ++i) {
      step[i] = 0.5;
      step[4 + i] = 1.0;
      step[8 + i] = 0.3;
    }
    const NmOutcome nm = nelder_mead(objective, x0, step,
                                     config.max_nm_iterations,
                                     config.objective_tol);
    evals += nm.evals;
    if (nm.value < best_value) {
      best_value = nm.value;
      best_params = nm.x;
    }
  }

  Working wk = unpack(best_params);
  prune_weights(wk, 1e-8);
  merge_members(wk, 1e-6);

  // Alternate member refinement with the weight fixed point; the weight
  // step runs last so the equidistance certificate is tight on exit.
  double prev = holevo_of(ops, wk);
  for (int round = 0; round < config.polish_rounds; ++round) {
    for (std::size_t k = 0; k < wk.size(); ++k) {
      auto member_obj = [&](const std::vector<double> &p) {
        Working probe = wk;
        probe.theta[k] = p[0];
        probe.phi[k] = p[1];
        return -holevo_of(ops, probe);
      };
      const NmOutcome nm =
          nelder_mead(member_obj, {wk.theta[k], wk.phi[k]}, {0.05, 0.05},
                      400, 1e-15);
      evals += nm.evals;
      wk.theta[k] = nm.x[0];
      wk.phi[k] = nm.x[1];
    }
    std::vector<M2> outs;
    for (std::size_t k = 0; k < wk.size(); ++k)
      outs.push_back(output_of(ops, wk.theta[k], wk.phi[k]));
    evals += balance_weights(outs, wk.w);
    prune_weights(wk, 1e-12);
    const double cur = holevo_of(ops, wk);
    const bool done = cur - prev < 1e-13;
    prev = cur;
    if (done && round > 0)
      break;
  }
  merge_members(wk, 1e-6);

  Ensemble inputs;
  inputs.weights = wk.w;
  for (std::size_t k = 0; k < wk.size(); ++k) {
    const double c = std::cos(0.5 * wk.theta[k]);
    const double s = std::sin(0.5 * wk.theta[k]);
    inputs.members.push_back(PureState(
        {cxd(c, 0.0), cxd(s * std::cos(wk.phi[k]), s * std::sin(wk.phi[k]))},
        2));
  }
  validate_ensemble(inputs);

  const DensityMatrix avg_out = apply(ch, inputs.average());
  Ensemble outputs;
  outputs.weights = wk.w;
  for (std::size_t k = 0; k < wk.size(); ++k)
    outputs.members.push_back(apply(ch, pure_input(wk.theta[k], wk.phi[k])));
  const double capacity = holevo_quantity(outputs);

  const double deviation = equidistance_check(ch, inputs, avg_out);
  const double radius = relative_entropy_radius(ch, avg_out, config.radius_grid);
  const double gap = capacity - radius;
  if (deviation > config.certificate_tol ||
      std::abs(gap) > config.certificate_tol)
    throw std::runtime_error(
        "holevo_capacity: optimality certification failed (deviation " +
        std::to_string(deviation) + ", radius gap " + std::to_string(gap) +
        ")");

  return {capacity, std::move(inputs), avg_out, deviation, gap, evals};
}

double relative_entropy_radius(const KrausChannel &ch,
                               const DensityMatrix &center,
                               std::size_t grid) {
  if (grid < 16)
    throw std::invalid_argument("relative_entropy_radius: grid too coarse");
  auto distance = [&](double theta, double phi) {
    return relative_entropy(apply(ch, pure_input(theta, phi)), center);
  };
  // Fibonacci sphere scan, then a local simplex refinement of the best hit.
  const double golden = kPi * (3.0 - std::sqrt(5.0));
  double best = -std::numeric_limits<double>::infinity();
  double best_theta = 0.0;
  double best_phi = 0.0;
  for (std::size_t i = 0; i < grid; ++i) {
    const double z = 1.0 - 2.0 * (static_cast<double>(i) + 0.5) /
                               static_cast<double>(grid);
    const double theta = std::acos(std::min(1.0, std::max(-1.0, z)));
    const double phi = golden * static_cast<double>(i);
    const double d = distance(theta, phi);
    if (d > best) {
      best = d;
      best_theta = theta;
      best_phi = phi;
    }
  }
  if (!std::isfinite(best))
    return best;
  const NmOutcome nm = nelder_mead(
      [&](const std::vector<double> &p) { return -distance(p[0], p[1]); },
      {best_theta, best_phi}, {0.03, 0.03}, 400, 1e-15);
  return std::max(best, -nm.value);
}

double equidistance_check(const KrausChannel &ch, const Ensemble &e,
                          const DensityMatrix &center) {
  validate_ensemble(e);
  Ensemble outputs;
  outputs.weights = e.weights;
  for (const EnsembleMember &m : e.members)
    outputs.members.push_back(apply(ch, member_density(m)));
  const double c = holevo_quantity(outputs);
  double dev = 0.0;
  for (const EnsembleMember &m : outputs.members)
    dev = std::max(dev,
                   std::abs(relative_entropy(member_density(m), center) - c));
  return dev;
}

MswReport msw_crosscheck(const KrausChannel &ch, std::size_t grid,
                         const SolverConfig &config) {
  if (ch.size() > 2)
    throw std::invalid_argument(
        "msw_crosscheck: lifted state must be two-qubit (at most 2 Kraus "
        "operators)");
  if (grid < 8)
    throw std::invalid_argument("msw_crosscheck: grid too coarse");

  const CapacityResult cap = holevo_capacity(ch, config);

  auto two_qubit_lift = [&](const DensityMatrix &rho) {
    const LiftedState ls = lift(ch, rho);
    if (ls.gamma_ab.dim() == 4)
      return ls.gamma_ab;
    // Single Kraus operator: append a fixed pure environment qubit.
    ComplexMatrix g(4, 4);
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t b = 0; b < 2; ++b)
        g(2 * a, 2 * b) = ls.gamma_ab.matrix()(a, b);
    return DensityMatrix(std::move(g), 2, 2);
  };
  auto value_at = [&](double x, double y, double z) {
    const double r = std::sqrt(x * x + y * y + z * z);
    if (r > 1.0) {
      const double s = (1.0 - 1e-15) / r;
      x *= s;
      y *= s;
      z *= s;
    }
    const DensityMatrix rho = qubit_from_bloch(x, y, z);
    const double s_out = von_neumann_entropy(apply(ch, rho));
    const double eof = concurrence(two_qubit_lift(rho)).eof_bits;
    return s_out - eof;
  };

  double best = -std::numeric_limits<double>::infinity();
  std::array<double, 3> at{0.0, 0.0, 0.0};
  for (std::size_t i = 0; i < grid; ++i) {
    const double r = (static_cast<double>(i) + 1.0) / static_cast<double>(grid);
    for (std::size_t j = 0; j < grid; ++j) {
      const double theta =
          kPi * (static_cast<double>(j) + 0.5) / static_cast<double>(grid);
      for (std::size_t k = 0; k < grid; ++k) {
        const double phi =
            2.0 * kPi * static_cast<double>(k) / static_cast<double>(grid);
        const double x = r * std::sin(theta) * std::cos(phi);
        const double y = r * std::sin(theta) * std::sin(phi);
        const double z = r * std::cos(theta);
        const double v = value_at(x, y, z);
        if (v > best) {
          best = v;
          at = {x, y, z};
        }
      }
    }
  }
  const NmOutcome nm = nelder_mead(
      [&](const std::vector<double> &p) { return -value_at(p[0], p[1], p[2]); },
      {at[0], at[1], at[2]}, {0.02, 0.02, 0.02}, 600, 1e-15);
  if (-nm.value > best) {
    best = -nm.value;
    at = {nm.x[0], nm.x[1], nm.x[2]};
  }

  double r = std::sqrt(at[0] * at[0] + at[1] * at[1] + at[2] * at[2]);
  if (r > 1.0) {
    const double s = (1.0 - 1e-15) / r;
    at = {at[0] * s, at[1] * s, at[2] * s};
  }
  const DensityMatrix argmax = qubit_from_bloch(at[0], at[1], at[2]);
  const DensityMatrix gamma_star = two_qubit_lift(argmax);
  const double eof_star = concurrence(gamma_star).eof_bits;
  const double s_opt = von_neumann_entropy(cap.optimal_avg_output);

  MswReport rep{best,
                argmax,
                best - cap.capacity_bits,
                std::abs(eof_star - s_opt + cap.capacity_bits),
                frobenius_norm(apply(ch, argmax).matrix() -
                               cap.optimal_avg_output.matrix())};
  return rep;
}

RepresentabilityReport representability_probe(const KrausChannel &ch,
                                              const CapacityResult &result,
                                              double tol) {
  const ComplexMatrix &avg = result.optimal_avg_output.matrix();
  const Spectrum sp = hermitian_eig(avg);
  const double support_cutoff = 1e-12;
  ComplexMatrix proj(2, 2); // onto the support of the average output
  for (std::size_t k = 0; k < 2; ++k) {
    if (sp.eigenvalues[k] <= support_cutoff)
      continue;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        proj(i, j) += sp.eigenvectors(i, k) * std::conj(sp.eigenvectors(j, k));
  }
  const ComplexMatrix logavg = matrix_log2(avg, support_cutoff);

  RepresentabilityReport rep;
  bool leaked = false;
  for (const EnsembleMember &m : result.optimal_ensemble.members) {
    const DensityMatrix out = apply(ch, member_density(m));
    const double inside = trace(proj * out.matrix()).real();
    if (1.0 - inside > 1e-10) {
      rep.values.push_back(-std::numeric_limits<double>::infinity());
      leaked = true;
      continue;
    }
    rep.values.push_back(trace(out.matrix() * logavg).real());
  }
  if (leaked) {
    rep.spread = std::numeric_limits<double>::infinity();
    rep.holds = false;
    return rep;
  }
  const auto [lo, hi] = std::minmax_element(rep.values.begin(),
                                            rep.values.end());
  rep.spread = *hi - *lo;
  rep.holds = rep.spread <= tol;
  return rep;
}

} // namespace qic
