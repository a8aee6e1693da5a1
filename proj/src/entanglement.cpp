#include "photonprop/entanglement.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace photonprop {

namespace {

Eigen::Matrix4cd sigma_y_sigma_y() {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  m(0, 3) = -1.0;
  m(1, 2) = 1.0;
  m(2, 1) = 1.0;
  m(3, 0) = -1.0;
  return m;
}

}  // namespace

double concurrence_pure(const PureState& state) {
  if (state.qubits() != 2) {
    throw std::invalid_argument("concurrence_pure requires a 2-qubit state");
  }
  const auto& a = state.amps();
  return 2.0 * std::abs(a(0) * a(3) - a(1) * a(2));
}

double concurrence_mixed(const DensityMatrix& rho) {
  if (rho.dim() != 4) {
    throw std::invalid_argument("concurrence_mixed requires a 4x4 matrix");
  }
  rho.clamped_eigenvalues();  // rejects non-PSD input beyond the clamp
  static const Eigen::Matrix4cd yy = sigma_y_sigma_y();

  // Hermitian route: lambda_i^2 are the eigenvalues of the PSD matrix
  // sqrt(rho) * rho~ * sqrt(rho), which a self-adjoint solver resolves far
  // more accurately than the non-normal product rho * rho~.
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> rho_es(rho.entries());
  const Eigen::Vector4d rho_evals =
      rho_es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  const Eigen::Matrix4cd sqrt_rho = rho_es.eigenvectors() *
                                    rho_evals.asDiagonal() *
                                    rho_es.eigenvectors().adjoint();
  const Eigen::Matrix4cd rho_tilde =
      yy * rho.entries().conjugate() * yy;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(
      sqrt_rho * rho_tilde * sqrt_rho, Eigen::EigenvaluesOnly);

  // Round-off leaves exact zeros at ~1e-16; clamping before the square root
  // stops them from surfacing as spurious 1e-8 contributions.
  const double floor = 1e-13 * std::max(es.eigenvalues().maxCoeff(), 0.0);
  std::array<double, 4> lambdas{};
  for (int i = 0; i < 4; ++i) {
    const double mu = es.eigenvalues()(i);
    lambdas[static_cast<std::size_t>(i)] =
        mu > floor ? std::sqrt(mu) : 0.0;
  }
  std::sort(lambdas.begin(), lambdas.end(), std::greater<>());
  return std::max(0.0, lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3]);
}

double concurrence_farfield(const TwoPhotonAmplitudes& amps, double phi) {
  const Complex a = amps.alpha, b = amps.beta, g = amps.gamma, d = amps.delta;
  const double c2 = std::cos(2.0 * phi);
  const double c = std::cos(phi);
  const double num =
      std::abs(b * b + g * g + 2.0 * b * g * c2 - 4.0 * a * d * c * c);
  const double den =
      1.0 + c2 * (1.0 - std::norm(b) - std::norm(g) +
                  2.0 * std::real(b * std::conj(g)));
  if (std::abs(den) < 1e-14) {
    throw DegenerateError();
  }
  return num / den;
}

double concurrence_pinhole(const PinholePair& pair, double phi) {
  const Complex ad = pair.a * pair.d;
  const Complex cb = pair.c * pair.b;
  const double c = std::cos(phi);
  const double c2 = std::cos(2.0 * phi);
  const double num = std::abs((ad - cb) * (ad - cb));
  const double den = 2.0 * c * c * (std::norm(pair.a * pair.c) +
                                    std::norm(pair.b * pair.d)) +
                     std::norm(ad) + std::norm(cb) +
                     2.0 * std::real(ad * std::conj(cb)) * c2;
  if (std::abs(den) < 1e-14) {
    throw DegenerateError();
  }
  return num / den;
}

double three_tangle_hyperdeterminant(const PureState& state) {
  if (state.qubits() != 3) {
    throw std::invalid_argument("three-tangle requires a 3-qubit state");
  }
  auto a = [&](int i, int j, int k) {
    return state.amp(4 * i + 2 * j + k);
  };
  const Complex d1 = a(0, 0, 0) * a(0, 0, 0) * a(1, 1, 1) * a(1, 1, 1) +
                     a(0, 0, 1) * a(0, 0, 1) * a(1, 1, 0) * a(1, 1, 0) +
                     a(0, 1, 0) * a(0, 1, 0) * a(1, 0, 1) * a(1, 0, 1) +
                     a(1, 0, 0) * a(1, 0, 0) * a(0, 1, 1) * a(0, 1, 1);
  const Complex d2 =
      a(0, 0, 0) * a(1, 1, 1) * a(0, 1, 1) * a(1, 0, 0) +
      a(0, 0, 0) * a(1, 1, 1) * a(1, 0, 1) * a(0, 1, 0) +
      a(0, 0, 0) * a(1, 1, 1) * a(1, 1, 0) * a(0, 0, 1) +
      a(0, 1, 1) * a(1, 0, 0) * a(1, 0, 1) * a(0, 1, 0) +
      a(0, 1, 1) * a(1, 0, 0) * a(1, 1, 0) * a(0, 0, 1) +
      a(1, 0, 1) * a(0, 1, 0) * a(1, 1, 0) * a(0, 0, 1);
  const Complex d3 = a(0, 0, 0) * a(1, 1, 0) * a(1, 0, 1) * a(0, 1, 1) +
                     a(1, 1, 1) * a(0, 0, 1) * a(0, 1, 0) * a(1, 0, 0);
  return 4.0 * std::abs(d1 - 2.0 * d2 + 4.0 * d3);
}

TangleReport three_tangle(const PureState& state) {
  if (state.qubits() != 3) {
    throw std::invalid_argument("three_tangle requires a 3-qubit state");
  }
  const DensityMatrix rho1 = partial_trace(state, {0});
  const double det1 = (rho1.entries()(0, 0) * rho1.entries()(1, 1) -
                       rho1.entries()(0, 1) * rho1.entries()(1, 0))
                          .real();
  const double c_1_23_sq = std::max(0.0, 4.0 * det1);

  const double c12 = concurrence_mixed(partial_trace(state, {0, 1}));
  const double c13 = concurrence_mixed(partial_trace(state, {0, 2}));

  TangleReport report;
  report.c_1_23 = std::sqrt(c_1_23_sq);
  report.c_12 = c12;
  report.c_13 = c13;
  report.tau = c_1_23_sq - c12 * c12 - c13 * c13;

  const double tau_hd = three_tangle_hyperdeterminant(state);
  if (std::abs(report.tau - tau_hd) > 1e-8) {
    throw std::runtime_error(
        "three_tangle: eigenvalue and hyperdeterminant routes disagree");
  }
  return report;
}

}  // namespace photonprop
