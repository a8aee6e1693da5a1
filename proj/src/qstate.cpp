#include "photonprop/qstate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace photonprop {

namespace {

constexpr Complex kI{0.0, 1.0};

}  // namespace

PureState::PureState(int n_qubits, Eigen::VectorXcd amps)
    : n_(n_qubits), amps_(std::move(amps)) {
  if (n_ < 1) {
    throw std::invalid_argument("PureState requires at least one qubit");
  }
  if (amps_.size() != (Eigen::Index{1} << n_)) {
    throw std::invalid_argument("amplitude vector length must be 2^n");
  }
}

PureState PureState::single(Complex h, Complex v) {
  Eigen::VectorXcd a(2);
  a << h, v;
  return PureState(1, std::move(a));
}

PureState PureState::basis(int n_qubits, std::uint64_t bits) {
  Eigen::VectorXcd a = Eigen::VectorXcd::Zero(Eigen::Index{1} << n_qubits);
  a(static_cast<Eigen::Index>(bits)) = 1.0;
  return PureState(n_qubits, std::move(a));
}

const Gate& gate_identity() {
  static const Gate g{Eigen::Matrix2cd::Identity()};
  return g;
}

const Gate& gate_hadamard() {
  static const Gate g = [] {
    Gate h;
    const double s = 1.0 / std::numbers::sqrt2;
    h.m << s, s, s, -s;
    return h;
  }();
  return g;
}

const Gate& gate_phase() {
  static const Gate g = [] {
    Gate s;
    s.m << 1.0, 0.0, 0.0, kI;
    return s;
  }();
  return g;
}

const Gate& gate_phase_dagger() {
  static const Gate g = [] {
    Gate s;
    s.m << 1.0, 0.0, 0.0, -kI;
    return s;
  }();
  return g;
}

DensityMatrix::DensityMatrix(Eigen::MatrixXcd entries)
    : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() < 1) {
    throw std::invalid_argument("density matrix must be square");
  }
}

double DensityMatrix::hermiticity_deviation() const {
  return (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
}

Eigen::VectorXd DensityMatrix::clamped_eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
      entries_, Eigen::EigenvaluesOnly);
  Eigen::VectorXd ev = es.eigenvalues();
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) < -kPsdClampTolerance) {
      throw std::domain_error("density matrix eigenvalue below -1e-10");
    }
    if (ev(i) < 0.0) ev(i) = 0.0;
  }
  return ev;
}

PureState tensor_product(const std::vector<PureState>& factors) {
  if (factors.empty()) {
    throw std::invalid_argument("tensor_product requires at least one factor");
  }
  for (const auto& f : factors) {
    if (f.norm() == 0.0) {
      throw std::invalid_argument("tensor_product factor is the zero vector");
    }
  }
  Eigen::VectorXcd acc = factors.front().amps();
  int n = factors.front().qubits();
  for (std::size_t k = 1; k < factors.size(); ++k) {
    const Eigen::VectorXcd& f = factors[k].amps();
    Eigen::VectorXcd next(acc.size() * f.size());
    for (Eigen::Index i = 0; i < acc.size(); ++i) {
      for (Eigen::Index j = 0; j < f.size(); ++j) {
        next(i * f.size() + j) = acc(i) * f(j);
      }
    }
    acc = std::move(next);
    n += factors[k].qubits();
  }
  return PureState(n, std::move(acc));
}

PureState apply_matrix(const PureState& state, const Eigen::Matrix2cd& m,
                       int qubit) {
  const int n = state.qubits();
  if (qubit < 0 || qubit >= n) {
    throw std::out_of_range("qubit index out of range");
  }
  const Eigen::Index stride = Eigen::Index{1} << (n - 1 - qubit);
  Eigen::VectorXcd out = state.amps();
  for (Eigen::Index base = 0; base < out.size(); base += 2 * stride) {
    for (Eigen::Index off = 0; off < stride; ++off) {
      const Complex a0 = out(base + off);
      const Complex a1 = out(base + off + stride);
      out(base + off) = m(0, 0) * a0 + m(0, 1) * a1;
      out(base + off + stride) = m(1, 0) * a0 + m(1, 1) * a1;
    }
  }
  return PureState(n, std::move(out));
}

PureState apply_gate(const PureState& state, const Gate& gate, int qubit) {
  return apply_matrix(state, gate.m, qubit);
}

PureState apply_gate_all(const PureState& state, const Gate& gate) {
  PureState out = state;
  for (int q = 0; q < state.qubits(); ++q) {
    out = apply_matrix(out, gate.m, q);
  }
  return out;
}

std::pair<PureState, double> normalize(const PureState& state) {
  const double w = state.norm();
  if (w < kZeroNormThreshold) {
    throw ZeroStateError();
  }
  return {PureState(state.qubits(), state.amps() / w), w};
}

double fidelity_upto_phase(const PureState& a, const PureState& b) {
  if (a.qubits() != b.qubits()) {
    throw std::invalid_argument("fidelity_upto_phase: dimension mismatch");
  }
  const Complex ip = a.amps().dot(b.amps());
  return std::norm(ip);
}

DensityMatrix partial_trace(const PureState& state,
                            const std::vector<int>& keep) {
  const int n = state.qubits();
  if (keep.empty()) {
    throw std::invalid_argument("partial_trace: keep set is empty");
  }
  std::vector<int> kept = keep;
  std::sort(kept.begin(), kept.end());
  if (std::unique(kept.begin(), kept.end()) != kept.end() ||
      kept.front() < 0 || kept.back() >= n) {
    throw std::invalid_argument("partial_trace: invalid keep set");
  }
  std::vector<int> traced;
  for (int q = 0; q < n; ++q) {
    if (!std::binary_search(kept.begin(), kept.end(), q)) traced.push_back(q);
  }
  const int nk = static_cast<int>(kept.size());
  const int nt = static_cast<int>(traced.size());
  const Eigen::Index dk = Eigen::Index{1} << nk;
  const Eigen::Index dt = Eigen::Index{1} << nt;

  auto full_index = [&](Eigen::Index k_bits, Eigen::Index t_bits) {
    std::uint64_t idx = 0;
    for (int i = 0; i < nk; ++i) {
      const std::uint64_t b = (k_bits >> (nk - 1 - i)) & 1u;
      idx |= b << (n - 1 - kept[static_cast<std::size_t>(i)]);
    }
    for (int i = 0; i < nt; ++i) {
      const std::uint64_t b = (t_bits >> (nt - 1 - i)) & 1u;
      idx |= b << (n - 1 - traced[static_cast<std::size_t>(i)]);
    }
    return static_cast<Eigen::Index>(idx);
  };

  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dk, dk);
  for (Eigen::Index r = 0; r < dk; ++r) {
    for (Eigen::Index c = 0; c < dk; ++c) {
      Complex sum = 0.0;
      for (Eigen::Index t = 0; t < dt; ++t) {
        sum += state.amp(full_index(r, t)) *
               std::conj(state.amp(full_index(c, t)));
      }
      rho(r, c) = sum;
    }
  }
  return DensityMatrix(std::move(rho));
}

}  // namespace photonprop
