#pragma once

#include <vector>

#include "photonprop/postselect.hpp"
#include "photonprop/qstate.hpp"

namespace photonprop {

/// The separable state (x)_{l=1..n} (sin(l pi/n)|H> + cos(l pi/n)|V>)
/// whose symmetrization decodes to a GHZ state.
PureState magic_product_state(int n);

/// (|H>^n - |V>^n)/sqrt(2).
PureState ghz_target(int n);

/// Applies S-dagger then Hadamard to every qubit.
PureState decode_ghz(const PureState& state);

/// Certification of the symmetrized magic-state amplitudes:
/// (a) amplitudes with an even number of V's vanish,
/// (b) odd-weight amplitudes obey C_{n,m}/C_{n,1} = (-1)^{(m-1)/2}.
struct GhzConditionsReport {
  int n = 0;
  /// Representative raw amplitude for each Hamming weight m = 0..n.
  std::vector<double> class_amplitudes;
  /// max |C_m| / max_m |C_m| over even m.
  double even_residual = 0.0;
  /// max |C_m/C_1 - (-1)^{(m-1)/2}| over odd m.
  double ratio_error = 0.0;
  /// max spread within an equal-weight amplitude class, relative to the
  /// largest amplitude.
  double class_spread = 0.0;
  bool even_ok = false;
  bool ratio_ok = false;

  bool ok() const { return even_ok && ratio_ok; }
};

GhzConditionsReport verify_conditions(int n,
                                      int max_photons = kDefaultMaxPhotons);

struct CotangentIdentity {
  double lhs;  ///< elementary symmetric function of the cot^2 roots
  double rhs;  ///< (n-1)! / (m! (n-m)!)
};

/// For odd m, compares e_{(m-1)/2} over {cot^2(i pi/n)} against the
/// binomial-ratio closed form. Odd n sums i = 1..(n-1)/2; even n uses the
/// shifted upper limit n/2 - 1.
CotangentIdentity cotangent_identity(int n, int m);

/// Q(t) = sum_k C(2p+1, 2k+1) (-1)^k t^{p-k}, whose roots are
/// cot^2(r pi / (2p+1)).
struct VietePolynomial {
  int degree = 0;
  std::vector<long long> coefficients;  ///< coefficient of t^{p-k} at index k
  std::vector<double> roots;            ///< t_r, r = 1..p, decreasing in r

  double evaluate(double t) const;
  /// |Q(t_r)| scaled by the magnitude sum of the Horner terms at t_r.
  double residual(int root_index) const;
  double max_residual() const;
};

VietePolynomial viete_polynomial(int p);

/// n-photon coincidence probability P_n = n! eta^n with
/// eta = eta_q * omega / (4 pi n), plus its Stirling-limit form.
struct CoincidenceSpec {
  int n;
  double eta_q;
  double omega;
  double eta;
  double p_n;
  double stirling;
};

CoincidenceSpec coincidence_probability(int n, double eta_q, double omega);

}  // namespace photonprop
