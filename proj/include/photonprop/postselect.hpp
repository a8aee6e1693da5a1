#pragma once

#include <optional>

#include "photonprop/entanglement.hpp"
#include "photonprop/qstate.hpp"
#include "photonprop/scene.hpp"

namespace photonprop {

/// Normalized post-selected state at the detectors (detector j <-> qubit j,
/// theta-polarization = H, phi-polarization = V) and the pre-normalization
/// coincidence amplitude norm.
struct DetectedState {
  PureState state;
  double weight;
};

/// Default cap on the photon count of the n!-term assignment sum.
inline constexpr int kDefaultMaxPhotons = 10;

/// Exact post-selected n-photon state: sums over all n! assignments of
/// emitters to detectors, each path weighted by the per-pair transfer
/// blocks, contracted against the initial amplitudes.
DetectedState detected_state(const Scene& scene, const PureState& initial,
                             int max_photons = kDefaultMaxPhotons);

/// Far-field limit: each output amplitude is the sum of the input amplitude
/// over all n! subscript permutations. Raw (unnormalized) variant.
Eigen::VectorXcd symmetrize_raw(const PureState& initial);

/// Normalized permutation-symmetrized state. Throws ZeroStateError when the
/// input is annihilated by symmetrization.
PureState farfield_symmetrize(const PureState& initial);

/// The two-pinhole far-field state e^{-i phi} (a,b)x(c,d) +
/// e^{+i phi} (c,d)x(a,b), normalized.
PureState pinhole_farfield_state(const PinholePair& pair, double phi);

/// General two-photon variant: e^{-i phi} D + e^{+i phi} SWAP(D), normalized.
PureState pinhole_farfield_state(const TwoPhotonAmplitudes& amps, double phi);

enum class BeamSplitterConvention { kTriplet, kSymmetric };

/// Result of post-selecting the one-photon-per-port sector behind a 50/50
/// beam splitter. An empty state means no coincidences (photon bunching).
struct BeamSplitterResult {
  std::optional<PureState> state;
  double weight;

  bool no_coincidence() const { return !state.has_value(); }
};

/// Input amplitudes over |1_H,1_H>, |1_H,1_V>, |1_V,1_H>, |1_V,1_V>.
/// kTriplet keeps the symmetric combination (beta+gamma)/2 in the
/// coincidence sector; kSymmetric uses the unitary [[1,i],[i,1]]/sqrt(2).
BeamSplitterResult beamsplitter_postselect(const TwoPhotonAmplitudes& amps,
                                           BeamSplitterConvention convention);

}  // namespace photonprop
