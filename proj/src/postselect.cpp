#include "photonprop/postselect.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace photonprop {

DetectedState detected_state(const Scene& scene, const PureState& initial,
                             int max_photons) {
  const int n = scene.size();
  if (initial.qubits() != n) {
    throw std::invalid_argument(
        "detected_state: initial state must have one qubit per emitter");
  }
  if (static_cast<int>(scene.detectors.size()) != n) {
    throw std::invalid_argument(
        "detected_state: emitter and detector counts must match");
  }
  if (n > max_photons) {
    throw std::invalid_argument(
        "detected_state: photon count exceeds the permutation cap");
  }

  const Eigen::Index dim = initial.dim();
  Eigen::VectorXcd acc = Eigen::VectorXcd::Zero(dim);

  // Factor the dominant magnitude out of each detector's blocks so the
  // permutation sum stays well-scaled at large distances (raw amplitudes
  // fall off as fast as 1/(kr)^(3n)); the scales fold back into the weight.
  std::vector<Eigen::Matrix2cd> blocks(
      static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  double scale_product = 1.0;
  for (int j = 0; j < n; ++j) {
    double scale = 0.0;
    for (int e = 0; e < n; ++e) {
      blocks[static_cast<std::size_t>(e * n + j)] =
          transfer_block(scene, e, j);
      scale = std::max(scale,
                       blocks[static_cast<std::size_t>(e * n + j)].norm());
    }
    if (scale > 0.0) {
      for (int e = 0; e < n; ++e) {
        blocks[static_cast<std::size_t>(e * n + j)] /= scale;
      }
      scale_product *= scale;
    }
  }

  // sigma[j] = emitter assigned to detector j; lexicographic enumeration
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    PureState v = initial;
    for (int j = 0; j < n; ++j) {
      const int e = sigma[static_cast<std::size_t>(j)];
      v = apply_matrix(v, blocks[static_cast<std::size_t>(e * n + j)], e);
    }
    // route emitter sigma[j]'s outcome bit to detector qubit j
    for (Eigen::Index p = 0; p < dim; ++p) {
      std::uint64_t q = 0;
      for (int j = 0; j < n; ++j) {
        const int e = sigma[static_cast<std::size_t>(j)];
        const std::uint64_t b = (static_cast<std::uint64_t>(p) >>
                                 (n - 1 - j)) & 1u;
        q |= b << (n - 1 - e);
      }
      acc(p) += v.amp(static_cast<Eigen::Index>(q));
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));

  auto [state, weight] = normalize(PureState(n, std::move(acc)));
  return DetectedState{std::move(state), weight * scale_product};
}

Eigen::VectorXcd symmetrize_raw(const PureState& initial) {
  const int n = initial.qubits();
  if (n < 2) {
    throw std::invalid_argument("symmetrize_raw requires n >= 2");
  }
  const Eigen::Index dim = initial.dim();
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(dim);
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    for (Eigen::Index p = 0; p < dim; ++p) {
      std::uint64_t q = 0;
      for (int j = 0; j < n; ++j) {
        const int s = sigma[static_cast<std::size_t>(j)];
        const std::uint64_t b = (static_cast<std::uint64_t>(p) >>
                                 (n - 1 - s)) & 1u;
        q |= b << (n - 1 - j);
      }
      out(p) += initial.amp(static_cast<Eigen::Index>(q));
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

PureState farfield_symmetrize(const PureState& initial) {
  return normalize(PureState(initial.qubits(), symmetrize_raw(initial)))
      .first;
}

PureState pinhole_farfield_state(const TwoPhotonAmplitudes& amps, double phi) {
  const Complex fwd = std::exp(Complex(0.0, -phi));
  const Complex rev = std::exp(Complex(0.0, phi));
  Eigen::VectorXcd a(4);
  a(0) = (fwd + rev) * amps.alpha;
  a(1) = fwd * amps.beta + rev * amps.gamma;
  a(2) = fwd * amps.gamma + rev * amps.beta;
  a(3) = (fwd + rev) * amps.delta;
  return normalize(PureState(2, std::move(a))).first;
}

PureState pinhole_farfield_state(const PinholePair& pair, double phi) {
  return pinhole_farfield_state(
      TwoPhotonAmplitudes{pair.a * pair.c, pair.a * pair.d, pair.b * pair.c,
                          pair.b * pair.d},
      phi);
}

BeamSplitterResult beamsplitter_postselect(const TwoPhotonAmplitudes& amps,
                                           BeamSplitterConvention convention) {
  // Same-polarization inputs bunch (Hong-Ou-Mandel): only beta and gamma
  // feed the coincidence sector under either convention.
  Complex hv, vh;
  if (convention == BeamSplitterConvention::kTriplet) {
    const Complex s = 0.5 * (amps.beta + amps.gamma);
    hv = s;
    vh = s;
  } else {
    const Complex s = 0.5 * (amps.beta - amps.gamma);
    hv = s;
    vh = -s;
  }
  const double weight_sq = std::norm(hv) + std::norm(vh);
  if (std::sqrt(weight_sq) < kZeroNormThreshold) {
    return BeamSplitterResult{std::nullopt, 0.0};
  }
  Eigen::VectorXcd a(4);
  a << 0.0, hv, vh, 0.0;
  auto [state, weight] = normalize(PureState(2, std::move(a)));
  return BeamSplitterResult{std::move(state), weight};
}

}  // namespace photonprop
