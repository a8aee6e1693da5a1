#include "photonprop/ghz.hpp"

#include <bit>
#include <cmath>
#include <numbers>

namespace photonprop {

namespace {

long long binomial_exact(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;  // exact at every step
  }
  return result;
}

double factorial(int n) {
  if (n <= 20) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return static_cast<double>(f);
  }
  double f = factorial(20);
  for (int i = 21; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

PureState magic_product_state(int n) {
  if (n < 2) {
    throw std::invalid_argument("magic_product_state requires n >= 2");
  }
  std::vector<PureState> factors;
  factors.reserve(static_cast<std::size_t>(n));
  for (int l = 1; l <= n; ++l) {
    const double angle = l * std::numbers::pi / n;
    factors.push_back(PureState::single(std::sin(angle), std::cos(angle)));
  }
  return tensor_product(factors);
}

PureState ghz_target(int n) {
  if (n < 2) {
    throw std::invalid_argument("ghz_target requires n >= 2");
  }
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::VectorXcd a = Eigen::VectorXcd::Zero(dim);
  const double s = 1.0 / std::numbers::sqrt2;
  a(0) = s;
  a(dim - 1) = -s;
  return PureState(n, std::move(a));
}

PureState decode_ghz(const PureState& state) {
  return apply_gate_all(apply_gate_all(state, gate_phase_dagger()),
                        gate_hadamard());
}

GhzConditionsReport verify_conditions(int n, int max_photons) {
  if (n < 2) {
    throw std::invalid_argument("verify_conditions requires n >= 2");
  }
  if (n > max_photons) {
    throw std::invalid_argument(
        "verify_conditions: n exceeds the permutation cap");
  }
  const Eigen::VectorXcd raw = symmetrize_raw(magic_product_state(n));

  GhzConditionsReport report;
  report.n = n;
  report.class_amplitudes.assign(static_cast<std::size_t>(n) + 1, 0.0);
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  const double max_amp = raw.cwiseAbs().maxCoeff();

  for (Eigen::Index i = 0; i < raw.size(); ++i) {
    const int m = std::popcount(static_cast<std::uint64_t>(i));
    const double value = raw(i).real();
    if (!seen[static_cast<std::size_t>(m)]) {
      report.class_amplitudes[static_cast<std::size_t>(m)] = value;
      seen[static_cast<std::size_t>(m)] = true;
    } else {
      const double ref = report.class_amplitudes[static_cast<std::size_t>(m)];
      report.class_spread =
          std::max(report.class_spread, std::abs(value - ref) / max_amp);
    }
  }

  const double c1 = report.class_amplitudes[1];
  for (int m = 0; m <= n; ++m) {
    const double cm = report.class_amplitudes[static_cast<std::size_t>(m)];
    if (m % 2 == 0) {
      report.even_residual =
          std::max(report.even_residual, std::abs(cm) / max_amp);
    } else {
      const double expected = ((m - 1) / 2) % 2 == 0 ? 1.0 : -1.0;
      report.ratio_error =
          std::max(report.ratio_error, std::abs(cm / c1 - expected));
    }
  }
  report.even_ok = report.even_residual <= 1e-12;
  report.ratio_ok = report.ratio_error <= 1e-10;
  return report;
}

CotangentIdentity cotangent_identity(int n, int m) {
  if (n < 2) {
    throw std::invalid_argument("cotangent_identity requires n >= 2");
  }
  if (m % 2 == 0 || m < 1 || m > n) {
    throw std::invalid_argument("cotangent_identity requires odd m <= n");
  }
  const int p = (n % 2 == 1) ? (n - 1) / 2 : n / 2 - 1;
  const int m_prime = (m - 1) / 2;

  // elementary symmetric functions by incremental multiplication of
  // (1 + t_i x); roots enter in descending magnitude
  std::vector<double> e(static_cast<std::size_t>(p) + 1, 0.0);
  e[0] = 1.0;
  for (int i = 1; i <= p; ++i) {
    const double c = std::cos(i * std::numbers::pi / n) /
                     std::sin(i * std::numbers::pi / n);
    const double t = c * c;
    for (int k = i; k >= 1; --k) {
      e[static_cast<std::size_t>(k)] +=
          t * e[static_cast<std::size_t>(k) - 1];
    }
  }

  CotangentIdentity identity;
  identity.lhs = e[static_cast<std::size_t>(m_prime)];
  identity.rhs = static_cast<double>(binomial_exact(n, m)) / n;
  return identity;
}

double VietePolynomial::evaluate(double t) const {
  double acc = 0.0;
  for (const long long c : coefficients) {
    acc = acc * t + static_cast<double>(c);
  }
  return acc;
}

double VietePolynomial::residual(int root_index) const {
  const double t = roots[static_cast<std::size_t>(root_index)];
  double scale = 0.0;
  double acc = 0.0;
  for (const long long c : coefficients) {
    acc = acc * t + static_cast<double>(c);
    scale = scale * t + std::abs(static_cast<double>(c));
  }
  return std::abs(acc) / scale;
}

double VietePolynomial::max_residual() const {
  double worst = 0.0;
  for (int r = 0; r < degree; ++r) {
    worst = std::max(worst, residual(r));
  }
  return worst;
}

VietePolynomial viete_polynomial(int p) {
  if (p < 1) {
    throw std::invalid_argument("viete_polynomial requires p >= 1");
  }
  if (p > 25) {
    throw std::invalid_argument(
        "viete_polynomial: p > 25 would overflow the integer coefficients");
  }
  VietePolynomial q;
  q.degree = p;
  for (int k = 0; k <= p; ++k) {
    const long long c = binomial_exact(2 * p + 1, 2 * k + 1);
    q.coefficients.push_back(k % 2 == 0 ? c : -c);
  }
  for (int r = 1; r <= p; ++r) {
    const double c = std::cos(r * std::numbers::pi / (2 * p + 1)) /
                     std::sin(r * std::numbers::pi / (2 * p + 1));
    q.roots.push_back(c * c);
  }
  return q;
}

CoincidenceSpec coincidence_probability(int n, double eta_q, double omega) {
  if (n < 1) {
    throw std::invalid_argument("coincidence_probability requires n >= 1");
  }
  if (eta_q <= 0.0 || eta_q > 1.0) {
    throw std::invalid_argument("eta_q must lie in (0, 1]");
  }
  if (omega <= 0.0 || omega > 4.0 * std::numbers::pi) {
    throw std::invalid_argument("omega must lie in (0, 4 pi]");
  }
  CoincidenceSpec spec;
  spec.n = n;
  spec.eta_q = eta_q;
  spec.omega = omega;
  spec.eta = eta_q * omega / (4.0 * std::numbers::pi * n);
  spec.p_n = factorial(n) * std::pow(spec.eta, n);
  spec.stirling =
      std::sqrt(2.0 * std::numbers::pi * n) *
      std::pow(eta_q * omega / (4.0 * std::numbers::pi * std::numbers::e), n);
  return spec;
}

}  // namespace photonprop
