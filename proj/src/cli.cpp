#include "photonprop/cli.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace photonprop::cli {

namespace {

constexpr double kPi = std::numbers::pi;

void require(bool condition, const std::string& message) {
  if (!condition) throw std::invalid_argument(message);
}

std::string model_name(EmitterModel model) {
  return model == EmitterModel::kPinhole ? "pinhole" : "dipole";
}

void add_sweep_provenance(Dataset& ds, const std::string& variable,
                          const SweepSpec& sweep) {
  ds.provenance.emplace_back("sweep", variable);
  ds.provenance.emplace_back("min", format_value(sweep.min));
  ds.provenance.emplace_back("max", format_value(sweep.max));
  ds.provenance.emplace_back("steps", std::to_string(sweep.steps));
  ds.provenance.emplace_back("log", sweep.log ? "true" : "false");
}

}  // namespace

std::vector<double> sweep_points(const SweepSpec& spec) {
  require(spec.steps >= 2, "sweep requires at least 2 steps");
  require(spec.min < spec.max, "sweep requires min < max");
  if (spec.log) {
    require(spec.min > 0.0, "log sweep requires min > 0");
  }
  std::vector<double> points;
  points.reserve(static_cast<std::size_t>(spec.steps));
  const double lo = spec.log ? std::log(spec.min) : spec.min;
  const double hi = spec.log ? std::log(spec.max) : spec.max;
  for (int i = 0; i < spec.steps; ++i) {
    const double x = lo + (hi - lo) * i / (spec.steps - 1);
    points.push_back(spec.log ? std::exp(x) : x);
  }
  return points;
}

std::string format_value(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

void Dataset::write_csv(std::ostream& out) const {
  for (const auto& [key, value] : provenance) {
    out << "# " << key << " = " << value << "\n";
  }
  for (std::size_t c = 0; c < columns.size(); ++c) {
    out << columns[c] << (c + 1 < columns.size() ? "," : "\n");
  }
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << format_value(row[c]) << (c + 1 < row.size() ? "," : "\n");
    }
  }
}

std::string Dataset::to_csv() const {
  std::ostringstream out;
  write_csv(out);
  return out.str();
}

PureState parse_state_spec(const std::string& spec) {
  const double s = 1.0 / std::numbers::sqrt2;
  if (spec == "xy" || spec == "hv") {
    return PureState::basis(2, 0b01);
  }
  if (spec == "xy+iyx") {
    Eigen::VectorXcd a(4);
    a << 0.0, s, Complex(0.0, s), 0.0;
    return PureState(2, std::move(a));
  }
  if (spec == "xy+yx") {
    Eigen::VectorXcd a(4);
    a << 0.0, s, s, 0.0;
    return PureState(2, std::move(a));
  }
  if (spec.rfind("custom:", 0) == 0) {
    std::istringstream in(spec.substr(7));
    std::vector<double> values;
    std::string token;
    while (std::getline(in, token, ',')) {
      try {
        std::size_t used = 0;
        values.push_back(std::stod(token, &used));
        if (used != token.size()) throw std::invalid_argument(token);
      } catch (const std::exception&) {
        throw std::invalid_argument("custom state: bad number '" + token + "'");
      }
    }
    require(values.size() == 8,
            "custom state requires 8 comma-separated re,im values");
    Eigen::VectorXcd a(4);
    for (int i = 0; i < 4; ++i) {
      a(i) = Complex(values[static_cast<std::size_t>(2 * i)],
                     values[static_cast<std::size_t>(2 * i) + 1]);
    }
    return normalize(PureState(2, std::move(a))).first;
  }
  throw std::invalid_argument("unknown state specifier '" + spec + "'");
}

Dataset cmd_fig2(const SweepSpec& phi_sweep) {
  Dataset ds;
  ds.provenance.emplace_back("command", "fig2");
  add_sweep_provenance(ds, "phi", phi_sweep);
  ds.columns = {"phi", "C_HV", "C_HViVH"};

  const TwoPhotonAmplitudes hv{0.0, 1.0, 0.0, 0.0};
  const double s = 1.0 / std::numbers::sqrt2;
  const TwoPhotonAmplitudes hv_i_vh{0.0, s, Complex(0.0, s), 0.0};

  for (const double phi : sweep_points(phi_sweep)) {
    try {
      const double c1 = concurrence_pure(pinhole_farfield_state(hv, phi));
      const double c2 = concurrence_pure(pinhole_farfield_state(hv_i_vh, phi));
      ds.rows.push_back({phi, c1, c2});
    } catch (const ZeroStateError&) {
      ds.diagnostics.push_back("phi = " + format_value(phi) +
                               ": vanished coincidence amplitude, skipped");
    }
  }
  return ds;
}

Dataset cmd_scan_r(const ScanOptions& options, const SweepSpec& kr_sweep) {
  require(options.kd > 0.0, "scan-r requires kd > 0");
  const PureState initial = parse_state_spec(options.state);
  const double theta = options.theta_deg * kPi / 180.0;

  Dataset ds;
  ds.provenance.emplace_back("command", "scan-r");
  ds.provenance.emplace_back("kd", format_value(options.kd));
  ds.provenance.emplace_back("theta", format_value(options.theta_deg));
  ds.provenance.emplace_back("state", options.state);
  ds.provenance.emplace_back("emitter-model", model_name(options.model));
  add_sweep_provenance(ds, "kr", kr_sweep);
  ds.columns = {"kr", "concurrence"};

  for (const double kr : sweep_points(kr_sweep)) {
    try {
      const Scene scene =
          build_two_source_scene(options.kd, kr, theta, options.model);
      const DetectedState detected =
          detected_state(scene, initial, options.max_photons);
      ds.rows.push_back({kr, concurrence_pure(detected.state)});
    } catch (const ZeroStateError&) {
      ds.diagnostics.push_back("kr = " + format_value(kr) +
                               ": vanished coincidence amplitude, skipped");
    } catch (const std::invalid_argument& e) {
      ds.diagnostics.push_back("kr = " + format_value(kr) + ": " + e.what() +
                               ", skipped");
    }
  }
  return ds;
}

Dataset cmd_scan_theta(const ScanOptions& options,
                       const SweepSpec& theta_sweep_deg) {
  require(options.kd > 0.0, "scan-theta requires kd > 0");
  require(options.kr > 0.0, "scan-theta requires kr > 0");
  const PureState initial = parse_state_spec(options.state);

  Dataset ds;
  ds.provenance.emplace_back("command", "scan-theta");
  ds.provenance.emplace_back("kd", format_value(options.kd));
  ds.provenance.emplace_back("kr", format_value(options.kr));
  ds.provenance.emplace_back("state", options.state);
  ds.provenance.emplace_back("emitter-model", model_name(options.model));
  add_sweep_provenance(ds, "theta", theta_sweep_deg);
  ds.columns = {"theta", "concurrence"};

  for (const double theta_deg : sweep_points(theta_sweep_deg)) {
    try {
      const Scene scene = build_two_source_scene(
          options.kd, options.kr, theta_deg * kPi / 180.0, options.model);
      const DetectedState detected =
          detected_state(scene, initial, options.max_photons);
      ds.rows.push_back({theta_deg, concurrence_pure(detected.state)});
    } catch (const ZeroStateError&) {
      ds.diagnostics.push_back("theta = " + format_value(theta_deg) +
                               ": vanished coincidence amplitude, skipped");
    }
  }
  return ds;
}

Dataset cmd_fig8(double kd1, double kd2, const SweepSpec& kz_sweep,
                 int max_photons) {
  const PureState initial = magic_product_state(3);

  Dataset ds;
  ds.provenance.emplace_back("command", "fig8");
  ds.provenance.emplace_back("kd1", format_value(kd1));
  ds.provenance.emplace_back("kd2", format_value(kd2));
  add_sweep_provenance(ds, "kz", kz_sweep);
  ds.columns = {"kz", "tau_d1", "tau_d2"};

  for (const double kz : sweep_points(kz_sweep)) {
    try {
      std::vector<double> row = {kz};
      for (const double kd : {kd1, kd2}) {
        const Scene scene = build_array_scene(3, kd, kz);
        const DetectedState detected =
            detected_state(scene, initial, max_photons);
        row.push_back(three_tangle(detected.state).tau);
      }
      ds.rows.push_back(std::move(row));
    } catch (const ZeroStateError&) {
      ds.diagnostics.push_back("kz = " + format_value(kz) +
                               ": vanished coincidence amplitude, skipped");
    }
  }
  return ds;
}

Dataset cmd_ghz(int n_max, int max_photons) {
  require(n_max >= 2, "ghz requires n >= 2");
  require(n_max <= max_photons, "ghz: n exceeds the permutation cap");

  Dataset ds;
  ds.provenance.emplace_back("command", "ghz");
  ds.provenance.emplace_back("n", std::to_string(n_max));
  ds.columns = {"n", "fidelity", "even_residual", "ratio_error"};

  for (int n = 2; n <= n_max; ++n) {
    const PureState decoded =
        decode_ghz(farfield_symmetrize(magic_product_state(n)));
    const double fidelity = fidelity_upto_phase(decoded, ghz_target(n));
    const GhzConditionsReport report = verify_conditions(n, max_photons);
    ds.rows.push_back({static_cast<double>(n), fidelity,
                       report.even_residual, report.ratio_error});
  }
  return ds;
}

Dataset cmd_identity(int n_max) {
  require(n_max >= 3, "identity requires n-max >= 3");

  Dataset ds;
  ds.provenance.emplace_back("command", "identity");
  ds.provenance.emplace_back("n-max", std::to_string(n_max));
  ds.columns = {"n", "m", "lhs", "rhs", "rel_error"};

  for (int n = 3; n <= n_max; n += 2) {
    for (int m = 1; m <= n; m += 2) {
      const CotangentIdentity id = cotangent_identity(n, m);
      const double rel = std::abs(id.lhs - id.rhs) / std::abs(id.rhs);
      ds.rows.push_back({static_cast<double>(n), static_cast<double>(m),
                         id.lhs, id.rhs, rel});
    }
  }
  return ds;
}

Dataset cmd_coincidence(int n, double eta_q, double omega) {
  const CoincidenceSpec spec = coincidence_probability(n, eta_q, omega);

  Dataset ds;
  ds.provenance.emplace_back("command", "coincidence");
  ds.provenance.emplace_back("n", std::to_string(n));
  ds.provenance.emplace_back("eta-q", format_value(eta_q));
  ds.provenance.emplace_back("omega", format_value(omega));
  ds.columns = {"n", "eta", "p_n", "stirling"};
  ds.rows.push_back({static_cast<double>(n), spec.eta, spec.p_n,
                     spec.stirling});
  return ds;
}

}  // namespace photonprop::cli
