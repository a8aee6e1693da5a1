#pragma once

#include <stdexcept>

#include "photonprop/qstate.hpp"

namespace photonprop {

/// Thrown when a closed-form concurrence denominator vanishes (total
/// destructive interference of the post-selected sector).
class DegenerateError : public std::runtime_error {
 public:
  DegenerateError() : std::runtime_error("concurrence denominator vanished") {}
};

/// Joint amplitudes of |HH>, |HV>, |VH>, |VV>.
struct TwoPhotonAmplitudes {
  Complex alpha;
  Complex beta;
  Complex gamma;
  Complex delta;

  double squared_norm() const {
    return std::norm(alpha) + std::norm(beta) + std::norm(gamma) +
           std::norm(delta);
  }
};

/// Product input of the two-pinhole setup: photon 1 in a|H>+b|V>,
/// photon 2 in c|H>+d|V>.
struct PinholePair {
  Complex a;
  Complex b;
  Complex c;
  Complex d;
};

struct TangleReport {
  double tau;     ///< three-tangle
  double c_1_23;  ///< concurrence between qubit 1 and the pair (2,3)
  double c_12;
  double c_13;
};

/// 2|alpha*delta - beta*gamma| for a normalized two-qubit pure state.
double concurrence_pure(const PureState& state);

/// Wootters concurrence of a two-qubit density matrix.
double concurrence_mixed(const DensityMatrix& rho);

/// Far-field concurrence of a general two-photon input propagated to two
/// symmetric detectors, as a function of the propagation phase phi.
double concurrence_farfield(const TwoPhotonAmplitudes& amps, double phi);

/// Far-field concurrence for a product (pinhole-pair) input. Equals
/// concurrence_farfield under (alpha,beta,gamma,delta) = (ac,ad,bc,bd).
double concurrence_pinhole(const PinholePair& pair, double phi);

/// Three-tangle of a normalized three-qubit state, with the pairwise and
/// one-vs-rest concurrences that enter it.
TangleReport three_tangle(const PureState& state);

/// Hyperdeterminant route to the three-tangle, 4|d1 - 2 d2 + 4 d3| over the
/// eight amplitudes. Used as the internal cross-check for three_tangle.
double three_tangle_hyperdeterminant(const PureState& state);

}  // namespace photonprop
