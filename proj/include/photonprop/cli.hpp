#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "photonprop/ghz.hpp"
#include "photonprop/postselect.hpp"

namespace photonprop::cli {

/// Sweep over one variable; LOG scale requires min > 0.
struct SweepSpec {
  double min = 0.0;
  double max = 1.0;
  int steps = 2;
  bool log = false;
};

/// Grid of sweep points, ascending, endpoints included.
std::vector<double> sweep_points(const SweepSpec& spec);

/// Rectangular table plus a provenance echo of the configuration that
/// produced it. Singular sweep points land in `diagnostics`, never in rows.
struct Dataset {
  std::vector<std::pair<std::string, std::string>> provenance;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::vector<std::string> diagnostics;

  /// '# key = value' provenance lines, a header row, then data rows with
  /// 12 significant digits and LF line endings.
  void write_csv(std::ostream& out) const;
  std::string to_csv() const;
};

/// Deterministic 12-significant-digit float formatting.
std::string format_value(double v);

/// Parses a --state specifier: "xy", "xy+iyx", "hv", or
/// "custom:<8 comma-separated re,im pairs>".
PureState parse_state_spec(const std::string& spec);

struct ScanOptions {
  double kd = 3.45;
  double kr = 1e5;
  double kz = 1e5;
  double theta_deg = 45.0;
  std::string state = "xy";
  EmitterModel model = EmitterModel::kDipole;
  int max_photons = kDefaultMaxPhotons;
};

/// Far-field concurrence versus phi for |HV> and (|HV>+i|VH>)/sqrt(2).
Dataset cmd_fig2(const SweepSpec& phi_sweep);

/// Concurrence versus detector distance kr through the full dipole (or
/// pinhole) propagation.
Dataset cmd_scan_r(const ScanOptions& options, const SweepSpec& kr_sweep);

/// Concurrence versus the symmetric detection angle theta (degrees).
Dataset cmd_scan_theta(const ScanOptions& options,
                       const SweepSpec& theta_sweep_deg);

/// Three-tangle versus detector height kz for two emitter spacings.
Dataset cmd_fig8(double kd1, double kd2, const SweepSpec& kz_sweep,
                 int max_photons = kDefaultMaxPhotons);

/// GHZ pipeline fidelity and condition residuals for each n in 2..n_max.
Dataset cmd_ghz(int n_max, int max_photons = kDefaultMaxPhotons);

/// Cotangent-identity table over odd n <= n_max and odd m <= n.
Dataset cmd_identity(int n_max);

/// Coincidence probability and its Stirling form for the given n.
Dataset cmd_coincidence(int n, double eta_q, double omega);

}  // namespace photonprop::cli
