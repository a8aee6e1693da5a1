#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace photonprop {

using Complex = std::complex<double>;

/// Pre-normalization norms below this count as a vanished coincidence
/// amplitude rather than round-off.
inline constexpr double kZeroNormThreshold = 1e-14;

/// Density-matrix eigenvalues in [-kPsdClampTolerance, 0) are clamped to 0.
inline constexpr double kPsdClampTolerance = 1e-10;

/// Thrown when an amplitude vector has vanished below kZeroNormThreshold
/// (total destructive interference in a post-selected sector).
class ZeroStateError : public std::runtime_error {
 public:
  ZeroStateError() : std::runtime_error("amplitude norm below 1e-14") {}
  explicit ZeroStateError(const std::string& what) : std::runtime_error(what) {}
};

/// Normalized polarization state of n photons. Basis index i encodes the
/// bit string i1...in with qubit 0 the most significant bit; bit 0 is |H>
/// and bit 1 is |V>.
class PureState {
 public:
  PureState(int n_qubits, Eigen::VectorXcd amps);

  /// Single photon h|H> + v|V>.
  static PureState single(Complex h, Complex v);

  /// Computational basis state |bits> over n qubits.
  static PureState basis(int n_qubits, std::uint64_t bits);

  int qubits() const { return n_; }
  Eigen::Index dim() const { return amps_.size(); }
  const Eigen::VectorXcd& amps() const { return amps_; }
  Complex amp(Eigen::Index i) const { return amps_(i); }
  double norm() const { return amps_.norm(); }

  /// Bit of `qubit` (0 = leftmost tensor factor) within basis index `index`.
  static int bit(std::uint64_t index, int n_qubits, int qubit) {
    return static_cast<int>((index >> (n_qubits - 1 - qubit)) & 1u);
  }

 private:
  int n_;
  Eigen::VectorXcd amps_;
};

/// Single-qubit gate. Named constants: S|H> = |H>, S|V> = i|V>,
/// H|H> = (|H>+|V>)/sqrt(2), H|V> = (|H>-|V>)/sqrt(2).
struct Gate {
  Eigen::Matrix2cd m;
};

const Gate& gate_identity();
const Gate& gate_hadamard();
const Gate& gate_phase();
const Gate& gate_phase_dagger();

/// Hermitian PSD matrix of a reduced subsystem, trace 1.
class DensityMatrix {
 public:
  explicit DensityMatrix(Eigen::MatrixXcd entries);

  Eigen::Index dim() const { return entries_.rows(); }
  const Eigen::MatrixXcd& entries() const { return entries_; }

  double trace_real() const { return entries_.trace().real(); }
  double hermiticity_deviation() const;

  /// Eigenvalues in ascending order with values in [-1e-10, 0) clamped to
  /// zero. Throws std::domain_error if an eigenvalue is below the clamp
  /// tolerance.
  Eigen::VectorXd clamped_eigenvalues() const;

  double purity() const { return (entries_ * entries_).trace().real(); }

 private:
  Eigen::MatrixXcd entries_;
};

/// Tensor product of the given factors in declared qubit order.
PureState tensor_product(const std::vector<PureState>& factors);

/// Apply a single-qubit gate to the addressed tensor factor.
PureState apply_gate(const PureState& state, const Gate& gate, int qubit);

/// Apply the same single-qubit gate to every qubit.
PureState apply_gate_all(const PureState& state, const Gate& gate);

/// Apply an arbitrary (not necessarily unitary) 2x2 matrix to one qubit.
PureState apply_matrix(const PureState& state, const Eigen::Matrix2cd& m,
                       int qubit);

/// Returns the unit-norm state and the pre-normalization norm.
/// Throws ZeroStateError when the norm is below kZeroNormThreshold.
std::pair<PureState, double> normalize(const PureState& state);

/// |<a|b>|^2, invariant under global phases of either input.
double fidelity_upto_phase(const PureState& a, const PureState& b);

/// Reduced density matrix over the kept qubits (0-based, ascending).
DensityMatrix partial_trace(const PureState& state,
                            const std::vector<int>& keep);

}  // namespace photonprop
