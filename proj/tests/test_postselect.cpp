#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numbers>
#include <numeric>

#include "photonprop/postselect.hpp"
#include "test_helpers.hpp"

using namespace photonprop;
using photonprop::testing::random_state;

namespace {

const double kPi = std::numbers::pi;
const double kSqrt2 = std::numbers::sqrt2;

/// Independent assignment-enumeration oracle: explicit triple loop over
/// detector outcomes, emitter-to-detector assignments, and initial basis
/// strings.
Eigen::VectorXcd brute_force_detected(const Scene& scene,
                                      const PureState& initial) {
  const int n = scene.size();
  const Eigen::Index dim = initial.dim();
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(dim);

  std::vector<int> assignment(static_cast<std::size_t>(n));
  std::iota(assignment.begin(), assignment.end(), 0);
  for (Eigen::Index outcome = 0; outcome < dim; ++outcome) {
    Complex total = 0.0;
    std::vector<int> sigma = assignment;
    do {
      for (Eigen::Index basis = 0; basis < dim; ++basis) {
        Complex path = initial.amp(basis);
        for (int j = 0; j < n; ++j) {
          const int emitter = sigma[static_cast<std::size_t>(j)];
          const int pol_out = PureState::bit(
              static_cast<std::uint64_t>(outcome), n, j);
          const int pol_in = PureState::bit(
              static_cast<std::uint64_t>(basis), n, emitter);
          path *= transfer_block(scene, emitter, j)(pol_out, pol_in);
        }
        total += path;
      }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    out(outcome) = total;
  }
  return out;
}

PureState state_xy() { return PureState::basis(2, 0b01); }

PureState state_xy_iyx() {
  Eigen::VectorXcd a(4);
  a << 0.0, 1.0 / kSqrt2, Complex(0.0, 1.0 / kSqrt2), 0.0;
  return PureState(2, std::move(a));
}

double concurrence2(const PureState& s) {
  return 2.0 * std::abs(s.amp(0) * s.amp(3) - s.amp(1) * s.amp(2));
}

}  // namespace

TEST_CASE("two dipoles in |xy>: far-field detected state") {
  for (double kd : {1.7, 4.0, 9.2}) {
    for (double theta : {0.3, kPi / 4.0, 1.2}) {
      const Scene scene = build_two_source_scene(kd, 1e5, theta);
      const DetectedState detected = detected_state(scene, state_xy());
      CHECK(concurrence2(detected.state) ==
            doctest::Approx(1.0).epsilon(1e-3));
      const Complex ratio = detected.state.amp(2) / detected.state.amp(1);
      CHECK(std::abs(ratio) == doctest::Approx(1.0).epsilon(1e-3));
      const Complex expected =
          std::exp(Complex(0.0, 2.0 * kd * std::sin(theta)));
      CHECK(std::min(std::abs(ratio - expected),
                     std::abs(ratio - std::conj(expected))) < 1e-3);
    }
  }
}

TEST_CASE("(|xy> + i|yx>)/sqrt(2) far-field concurrence is |cos(2 kd sin t)|") {
  const Scene scene = build_two_source_scene(7.0, 1e5, kPi / 4.0);
  const DetectedState detected = detected_state(scene, state_xy_iyx());
  CHECK(concurrence2(detected.state) ==
        doctest::Approx(std::abs(std::cos(2.0 * 7.0 * std::sin(kPi / 4.0))))
            .epsilon(1e-3));
}

TEST_CASE("|xy> near the origin: complete mixing restores unit concurrence") {
  const double kd = 4.0;
  const Scene scene = build_two_source_scene(kd, 1e-3 * kd, kPi / 4.0);
  const DetectedState detected = detected_state(scene, state_xy());
  CHECK(concurrence2(detected.state) == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("pinhole |HV> reproduces the two-term interference state") {
  const Scene scene =
      build_two_source_scene(3.45, 1e6, 0.61, EmitterModel::kPinhole);
  const DetectedState detected = detected_state(scene, state_xy());
  const double phi = farfield_phase(scene);
  CHECK(std::abs(detected.state.amp(1)) ==
        doctest::Approx(1.0 / kSqrt2).epsilon(1e-6));
  // the residual radial-magnitude imbalance is O(kd sin(theta) / kr)
  const Complex ratio = detected.state.amp(2) / detected.state.amp(1);
  CHECK(std::abs(ratio - std::exp(Complex(0.0, 2.0 * phi))) < 1e-5);
}

TEST_CASE("detected_state validates its inputs") {
  const Scene scene = build_two_source_scene(2.0, 10.0, 0.5);
  CHECK_THROWS_AS(detected_state(scene, PureState::basis(3, 0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(detected_state(scene, state_xy(), 1),
                  std::invalid_argument);
}

TEST_CASE("brute-force oracle matches detected_state") {
  std::mt19937 rng(43);
  std::uniform_real_distribution<double> unif(0.5, 8.0);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);
    Scene scene;
    if (n == 2 && trial % 2 == 0) {
      scene = build_two_source_scene(unif(rng), unif(rng) * 10.0,
                                     unif(rng) / 8.0,
                                     trial % 4 == 0 ? EmitterModel::kPinhole
                                                    : EmitterModel::kDipole);
    } else {
      scene = build_array_scene(n, unif(rng), unif(rng) * 10.0);
    }
    const PureState initial = random_state(n, rng);
    const DetectedState detected = detected_state(scene, initial);
    const Eigen::VectorXcd oracle = brute_force_detected(scene, initial);
    const Eigen::VectorXcd raw = detected.weight * detected.state.amps();
    const double scale = oracle.cwiseAbs().maxCoeff();
    CHECK((raw - oracle).cwiseAbs().maxCoeff() / scale < 1e-12);
  }
}

TEST_CASE("detected_state is linear in the initial amplitudes") {
  std::mt19937 rng(47);
  const Scene scene = build_array_scene(3, 3.0, 20.0);
  const PureState d1 = random_state(3, rng);
  const PureState d2 = random_state(3, rng);
  const Complex a(0.3, -1.1), b(-0.7, 0.2);

  const PureState mixed(3, a * d1.amps() + b * d2.amps());
  const DetectedState out = detected_state(scene, mixed);
  const DetectedState out1 = detected_state(scene, d1);
  const DetectedState out2 = detected_state(scene, d2);
  const Eigen::VectorXcd lhs = out.weight * out.state.amps();
  const Eigen::VectorXcd rhs = a * out1.weight * out1.state.amps() +
                               b * out2.weight * out2.state.amps();
  CHECK((lhs - rhs).cwiseAbs().maxCoeff() / lhs.cwiseAbs().maxCoeff() <
        1e-12);
}

TEST_CASE("far-field dipole array matches symmetrization") {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 2);
    const double kd = 2.0 + 3.0 * (trial % 3);
    // n^2 d^2 / (2 z^2) < 1e-8
    const double kz = std::sqrt(n * n * kd * kd / 2.0 * 1e8) * 1.5;
    const Scene scene = build_array_scene(n, kd, kz);
    const PureState initial = random_state(n, rng);
    PureState symmetrized(1, Eigen::VectorXcd::Ones(2));
    try {
      symmetrized = farfield_symmetrize(initial);
    } catch (const ZeroStateError&) {
      continue;
    }
    const DetectedState detected = detected_state(scene, initial);
    CHECK(fidelity_upto_phase(detected.state, symmetrized) >= 1.0 - 1e-6);
  }
}

TEST_CASE("symmetrization of |HHV> yields the W state") {
  const PureState w = farfield_symmetrize(PureState::basis(3, 0b001));
  const double s = 1.0 / std::sqrt(3.0);
  CHECK(std::abs(w.amp(0b001) - Complex(s)) < 1e-12);
  CHECK(std::abs(w.amp(0b010) - Complex(s)) < 1e-12);
  CHECK(std::abs(w.amp(0b100) - Complex(s)) < 1e-12);
  CHECK(std::abs(w.amp(0b000)) < 1e-15);
  CHECK(std::abs(w.amp(0b111)) < 1e-15);
}

TEST_CASE("symmetrization fixes symmetric states and kills antisymmetric ones") {
  const PureState hh = farfield_symmetrize(PureState::basis(2, 0b00));
  CHECK(std::abs(hh.amp(0) - Complex(1.0)) < 1e-15);

  Eigen::VectorXcd singlet(4);
  singlet << 0.0, 1.0 / kSqrt2, -1.0 / kSqrt2, 0.0;
  CHECK_THROWS_AS(farfield_symmetrize(PureState(2, singlet)),
                  ZeroStateError);
}

TEST_CASE("symmetrized output is invariant under qubit permutations") {
  std::mt19937 rng(59);
  for (int trial = 0; trial < 20; ++trial) {
    const PureState psi = random_state(3, rng);
    const Eigen::VectorXcd raw = symmetrize_raw(psi);
    // swapping any pair of subscripts leaves every amplitude unchanged
    for (Eigen::Index i = 0; i < raw.size(); ++i) {
      const auto b = [&](int q) {
        return PureState::bit(static_cast<std::uint64_t>(i), 3, q);
      };
      const Eigen::Index swapped01 =
          (b(1) << 2) | (b(0) << 1) | b(2);
      const Eigen::Index swapped12 =
          (b(0) << 2) | (b(2) << 1) | b(1);
      CHECK(std::abs(raw(i) - raw(swapped01)) < 1e-12);
      CHECK(std::abs(raw(i) - raw(swapped12)) < 1e-12);
    }
  }
}

TEST_CASE("three-photon magic state symmetrizes to +-3/2 classes") {
  std::vector<PureState> factors;
  for (int l = 1; l <= 3; ++l) {
    const double x = l * kPi / 3.0;
    factors.push_back(PureState::single(std::sin(x), std::cos(x)));
  }
  const Eigen::VectorXcd raw = symmetrize_raw(tensor_product(factors));
  CHECK(raw(0b001).real() == doctest::Approx(-1.5).epsilon(1e-12));
  CHECK(raw(0b010).real() == doctest::Approx(-1.5).epsilon(1e-12));
  CHECK(raw(0b100).real() == doctest::Approx(-1.5).epsilon(1e-12));
  CHECK(raw(0b111).real() == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(std::abs(raw(0b000)) < 1e-12);
  CHECK(std::abs(raw(0b011)) < 1e-12);
}

TEST_CASE("pinhole far-field state from a product pair") {
  const PureState bell = pinhole_farfield_state(PinholePair{1, 0, 0, 1}, 0.0);
  CHECK(std::abs(bell.amp(1) - Complex(1.0 / kSqrt2)) < 1e-14);
  CHECK(std::abs(bell.amp(2) - Complex(1.0 / kSqrt2)) < 1e-14);

  const PureState hh = pinhole_farfield_state(PinholePair{1, 0, 1, 0}, 1.234);
  CHECK(std::abs(std::abs(hh.amp(0)) - 1.0) < 1e-14);

  const PureState tilted =
      pinhole_farfield_state(PinholePair{1, 0, 0, 1}, kPi / 4.0);
  CHECK(std::abs(tilted.amp(1) -
                 std::exp(Complex(0, -kPi / 4.0)) / kSqrt2) < 1e-14);
  CHECK(std::abs(tilted.amp(2) -
                 std::exp(Complex(0, kPi / 4.0)) / kSqrt2) < 1e-14);
  CHECK(concurrence2(tilted) == doctest::Approx(1.0));
}

TEST_CASE("pinhole far-field concurrence matches the closed form") {
  std::mt19937 rng(61);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, 2 * kPi);
  for (int trial = 0; trial < 1000; ++trial) {
    Complex a(gauss(rng), gauss(rng)), b(gauss(rng), gauss(rng));
    Complex c(gauss(rng), gauss(rng)), d(gauss(rng), gauss(rng));
    const double n1 = std::sqrt(std::norm(a) + std::norm(b));
    const double n2 = std::sqrt(std::norm(c) + std::norm(d));
    a /= n1; b /= n1; c /= n2; d /= n2;
    const double phi = angle(rng);
    try {
      const PureState chi = pinhole_farfield_state(PinholePair{a, b, c, d},
                                                   phi);
      CHECK(concurrence2(chi) ==
            doctest::Approx(concurrence_pinhole({a, b, c, d}, phi))
                .epsilon(1e-10));
    } catch (const ZeroStateError&) {
    } catch (const DegenerateError&) {
    }
  }
}

TEST_CASE("beam splitter: triplet convention") {
  const BeamSplitterResult triplet = beamsplitter_postselect(
      {0, 1, 0, 0}, BeamSplitterConvention::kTriplet);
  REQUIRE_FALSE(triplet.no_coincidence());
  CHECK(std::abs(triplet.state->amp(1) - Complex(1.0 / kSqrt2)) < 1e-14);
  CHECK(std::abs(triplet.state->amp(2) - Complex(1.0 / kSqrt2)) < 1e-14);
  CHECK(triplet.weight == doctest::Approx(1.0 / kSqrt2));

  const double s = 1.0 / kSqrt2;
  const BeamSplitterResult balanced = beamsplitter_postselect(
      {0, s, s, 0}, BeamSplitterConvention::kTriplet);
  REQUIRE_FALSE(balanced.no_coincidence());
  CHECK(std::abs(balanced.state->amp(1) - Complex(1.0 / kSqrt2)) < 1e-14);

  const BeamSplitterResult bunched = beamsplitter_postselect(
      {1, 0, 0, 0}, BeamSplitterConvention::kTriplet);
  CHECK(bunched.no_coincidence());
  CHECK(bunched.weight < 1e-14);

  // beta = -gamma cancels entirely under the triplet convention
  const BeamSplitterResult cancelled = beamsplitter_postselect(
      {0, s, -s, 0}, BeamSplitterConvention::kTriplet);
  CHECK(cancelled.no_coincidence());
}

TEST_CASE("beam splitter: symmetric convention") {
  const double s = 1.0 / kSqrt2;
  const BeamSplitterResult singlet = beamsplitter_postselect(
      {0, s, -s, 0}, BeamSplitterConvention::kSymmetric);
  REQUIRE_FALSE(singlet.no_coincidence());
  CHECK(concurrence2(*singlet.state) == doctest::Approx(1.0));

  const BeamSplitterResult bunched = beamsplitter_postselect(
      {0, s, s, 0}, BeamSplitterConvention::kSymmetric);
  CHECK(bunched.no_coincidence());

  CHECK(beamsplitter_postselect({0, 0, 0, 1},
                                BeamSplitterConvention::kSymmetric)
            .no_coincidence());
}
