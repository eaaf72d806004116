#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "qic/channels.hpp"
#include "qic/wootters.hpp"
#include "support.hpp"

using qic::ComplexMatrix;
using qic::cxd;
using qic::DensityMatrix;
using qic::KrausChannel;
using qic::PureState;

namespace {

KrausChannel identity_channel() {
  return KrausChannel({ComplexMatrix::identity(2)}, "identity");
}

KrausChannel depolarizing(double p) {
  const double s0 = std::sqrt(1.0 - 3.0 * p / 4.0);
  const double s = std::sqrt(p / 4.0);
  return KrausChannel({s0 * ComplexMatrix::identity(2), s * qic::pauli_x(),
                       s * qic::pauli_y(), s * qic::pauli_z()});
}

KrausChannel amplitude_damping(double eta) {
  ComplexMatrix a0(2, 2);
  a0(0, 0) = 1.0;
  a0(1, 1) = std::sqrt(1.0 - eta);
  ComplexMatrix a1(2, 2);
  a1(0, 1) = std::sqrt(eta);
  return KrausChannel({a0, a1});
}

KrausChannel dephasing(double q) {
  return KrausChannel({std::sqrt(1.0 - q) * ComplexMatrix::identity(2),
                       std::sqrt(q) * qic::pauli_z()});
}

// Ignores the input entirely and emits diag(0.7, 0.3).
KrausChannel constant_channel() {
  std::vector<ComplexMatrix> ops(4, ComplexMatrix(2, 2));
  ops[0](0, 0) = std::sqrt(0.7);
  ops[1](0, 1) = std::sqrt(0.7);
  ops[2](1, 0) = std::sqrt(0.3);
  ops[3](1, 1) = std::sqrt(0.3);
  return KrausChannel(ops);
}

DensityMatrix excited() {
  ComplexMatrix m(2, 2);
  m(1, 1) = 1.0;
  return DensityMatrix(m, 2);
}

} // namespace

TEST_CASE("channel construction validates the Kraus list") {
  CHECK_NOTHROW(identity_channel());

  // empty list
  CHECK_THROWS_AS(KrausChannel(std::vector<ComplexMatrix>{}),
                  std::invalid_argument);

  // five operators exceed the qubit-environment budget
  std::vector<ComplexMatrix> five(5, std::sqrt(0.2) *
                                         ComplexMatrix::identity(2));
  CHECK_THROWS_AS((void)KrausChannel(five), std::invalid_argument);

  // wrong shape
  CHECK_THROWS_AS(KrausChannel({ComplexMatrix::identity(3)}),
                  std::invalid_argument);

  // completeness failure
  CHECK_THROWS_AS(KrausChannel({0.9 * ComplexMatrix::identity(2)}),
                  std::invalid_argument);

  CHECK(depolarizing(0.5).size() == 4);
  CHECK(identity_channel().label() == "identity");
}

TEST_CASE("apply reference points") {
  std::mt19937_64 rng(7301);
  const DensityMatrix rho = testsupport::random_density(2, 1, 2, rng);

  CHECK(qic::max_abs_diff(qic::apply(identity_channel(), rho).matrix(),
                          rho.matrix()) < 1e-15);

  // depolarizing at p shrinks the Bloch vector by 1-p
  const auto before = qic::bloch_from_qubit(rho);
  const auto after = qic::bloch_from_qubit(qic::apply(depolarizing(0.3), rho));
  for (int i = 0; i < 3; ++i)
    CHECK(after[i] == doctest::Approx(0.7 * before[i]).epsilon(1e-12));

  // amplitude damping moves the excited population down
  const DensityMatrix dec = qic::apply(amplitude_damping(0.36), excited());
  CHECK(dec.matrix()(0, 0).real() == doctest::Approx(0.36).epsilon(1e-15));
  CHECK(dec.matrix()(1, 1).real() == doctest::Approx(0.64).epsilon(1e-15));

  // constant channel ignores its input
  const DensityMatrix out = qic::apply(constant_channel(), rho);
  CHECK(out.matrix()(0, 0).real() == doctest::Approx(0.7).epsilon(1e-12));
  CHECK(std::abs(out.matrix()(0, 1)) < 1e-12);
}

TEST_CASE("apply rejects non-qubit input") {
  const DensityMatrix big(0.25 * ComplexMatrix::identity(4), 2, 2);
  CHECK_THROWS_AS((void)qic::apply(identity_channel(), big),
                  std::invalid_argument);
}

TEST_CASE("lift of a single-Kraus channel is the input itself") {
  std::mt19937_64 rng(7302);
  const DensityMatrix rho = testsupport::random_density(2, 1, 2, rng);
  const qic::LiftedState ls = qic::lift(identity_channel(), rho);
  CHECK(ls.gamma_ab.dim_b() == 1);
  CHECK(qic::max_abs_diff(ls.gamma_ab.matrix(), rho.matrix()) < 1e-15);
}

TEST_CASE("lift of a pure input through a two-Kraus channel stays pure") {
  const qic::LiftedState ls = qic::lift(amplitude_damping(0.4), excited());
  REQUIRE(ls.gamma_ab.dim() == 4);
  CHECK(ls.gamma_ab.dim_b() == 2);
  // explicit dilation of |1>: sqrt(0.6)|1>|0> + sqrt(0.4)|0>|1>
  CHECK(ls.gamma_ab.matrix()(1, 1).real() ==
        doctest::Approx(0.4).epsilon(1e-14));
  CHECK(ls.gamma_ab.matrix()(2, 2).real() ==
        doctest::Approx(0.6).epsilon(1e-14));
  CHECK(ls.gamma_ab.matrix()(1, 2).real() ==
        doctest::Approx(std::sqrt(0.24)).epsilon(1e-12));
  const double purity =
      qic::trace(ls.gamma_ab.matrix() * ls.gamma_ab.matrix()).real();
  CHECK(purity == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("tracing out the environment of a lift reproduces the channel") {
  std::mt19937_64 rng(7303);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n_kraus = 1 + static_cast<std::size_t>(t % 4);
    const KrausChannel ch = testsupport::random_channel(n_kraus, rng);
    const DensityMatrix rho = testsupport::random_density(2, 1, 2, rng);
    const qic::LiftedState ls = qic::lift(ch, rho);
    const ComplexMatrix marginal = qic::partial_trace_b(
        ls.gamma_ab.matrix(), 2, ls.gamma_ab.dim_b());
    CHECK(qic::max_abs_diff(marginal, qic::apply(ch, rho).matrix()) < 1e-12);
  }
}

TEST_CASE("capacity of the identity channel is one bit") {
  const qic::CapacityResult res = qic::holevo_capacity(identity_channel());
  CHECK(res.capacity_bits == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(res.equidistance_deviation <= 1e-4);
  CHECK(std::abs(res.radius_gap) <= 1e-4);
  CHECK(qic::max_abs_diff(res.optimal_avg_output.matrix(),
                          0.5 * ComplexMatrix::identity(2)) < 1e-6);
}

TEST_CASE("capacity of a constant channel is zero") {
  const qic::CapacityResult res = qic::holevo_capacity(constant_channel());
  CHECK(std::abs(res.capacity_bits) <= 1e-9);
}

TEST_CASE("capacity of the half-depolarizing channel") {
  // outputs live on a Bloch ball of radius 1/2: 1 - h(1/2)
  const qic::CapacityResult res = qic::holevo_capacity(depolarizing(0.5));
  CHECK(res.capacity_bits ==
        doctest::Approx(1.0 - qic::binary_entropy(0.5)).epsilon(1e-6));
  CHECK(res.equidistance_deviation <= 1e-4);
  CHECK(std::abs(res.radius_gap) <= 1e-4);
}

TEST_CASE("capacity of dephasing is one bit for any strength") {
  for (double q : {0.1, 0.25}) {
    const qic::CapacityResult res = qic::holevo_capacity(dephasing(q));
    CHECK(res.capacity_bits == doctest::Approx(1.0).epsilon(1e-6));
  }
}

TEST_CASE("amplitude damping capacity endpoints and monotonicity") {
  const qic::CapacityResult low = qic::holevo_capacity(amplitude_damping(0.2));
  const qic::CapacityResult high =
      qic::holevo_capacity(amplitude_damping(0.6));
  CHECK(low.capacity_bits > high.capacity_bits);
  CHECK(low.capacity_bits < 1.0);
  CHECK(high.capacity_bits > 0.0);

  const qic::CapacityResult dead = qic::holevo_capacity(amplitude_damping(1.0));
  CHECK(std::abs(dead.capacity_bits) <= 1e-9);
}

TEST_CASE("capacity result is reproducible for a fixed seed") {
  qic::SolverConfig cfg;
  cfg.seed = 42;
  const double a = qic::holevo_capacity(amplitude_damping(0.3), cfg)
                       .capacity_bits;
  const double b = qic::holevo_capacity(amplitude_damping(0.3), cfg)
                       .capacity_bits;
  CHECK(a == b);
}

TEST_CASE("equidistance check on a hand-built optimal ensemble") {
  qic::Ensemble e{{0.5, 0.5},
                  {PureState({cxd(1, 0), cxd(0, 0)}, 2),
                   PureState({cxd(0, 0), cxd(1, 0)}, 2)}};
  const DensityMatrix center(0.5 * ComplexMatrix::identity(2), 2);
  CHECK(qic::equidistance_check(identity_channel(), e, center) < 1e-12);
}

TEST_CASE("relative entropy radius reference points") {
  const DensityMatrix half(0.5 * ComplexMatrix::identity(2), 2);
  CHECK(qic::relative_entropy_radius(identity_channel(), half, 4000) ==
        doctest::Approx(1.0).epsilon(1e-6));

  // off-center: the farthest pure output from diag(3/4, 1/4) is |1><1|
  ComplexMatrix t(2, 2);
  t(0, 0) = 0.75;
  t(1, 1) = 0.25;
  CHECK(qic::relative_entropy_radius(identity_channel(),
                                     DensityMatrix(t, 2), 4000) ==
        doctest::Approx(2.0).epsilon(1e-4));

  // constant channel: single output, zero radius about itself
  ComplexMatrix s(2, 2);
  s(0, 0) = 0.7;
  s(1, 1) = 0.3;
  CHECK(qic::relative_entropy_radius(constant_channel(),
                                     DensityMatrix(s, 2), 1000) < 1e-10);

  CHECK_THROWS_AS((void)qic::relative_entropy_radius(identity_channel(),
                                                     half, 4),
                  std::invalid_argument);
}

TEST_CASE("lifted-state capacity sweep matches the solver") {
  const qic::MswReport rep = qic::msw_crosscheck(dephasing(0.25), 24);
  CHECK(std::abs(rep.gap_vs_capacity) <= 1e-3);
  CHECK(rep.eq5_residual <= 2e-3);
  CHECK(rep.marginal_residual <= 1e-3);
}

TEST_CASE("lifted-state sweep rejects larger environments") {
  CHECK_THROWS_AS((void)qic::msw_crosscheck(depolarizing(0.5), 16),
                  std::invalid_argument);
}

TEST_CASE("output representability probe") {
  const qic::CapacityResult id_res = qic::holevo_capacity(identity_channel());
  const qic::RepresentabilityReport id_probe =
      qic::representability_probe(identity_channel(), id_res);
  CHECK(id_probe.holds);
  CHECK(id_probe.spread <= 1e-6);

  const qic::CapacityResult deph_res = qic::holevo_capacity(dephasing(0.25));
  const qic::RepresentabilityReport deph_probe =
      qic::representability_probe(dephasing(0.25), deph_res);
  CHECK(deph_probe.holds);
  CHECK(deph_probe.spread <= 1e-6);

  // amplitude damping is non-unital yet its optimal pair is mirror
  // symmetric about the z axis, so the output entropies agree and the
  // condition still holds
  const KrausChannel ad = amplitude_damping(0.4);
  const qic::CapacityResult ad_res = qic::holevo_capacity(ad);
  const qic::RepresentabilityReport ad_probe =
      qic::representability_probe(ad, ad_res);
  CHECK(ad_probe.holds);

  // a generic translated channel has no such symmetry and fails it
  std::mt19937_64 rng(7304);
  for (int t = 0; t < 50; ++t) {
    const KrausChannel ch = testsupport::random_channel(3, rng);
    const auto tr = testsupport::bloch_translation(ch);
    const double tnorm =
        std::sqrt(tr[0] * tr[0] + tr[1] * tr[1] + tr[2] * tr[2]);
    if (tnorm < 0.2)
      continue;
    const qic::CapacityResult res = qic::holevo_capacity(ch);
    const qic::RepresentabilityReport probe =
        qic::representability_probe(ch, res);
    if (!probe.holds && probe.spread > 1e-3)
      return; // found the expected violator
  }
  FAIL("no translated channel violated the output condition");
}
