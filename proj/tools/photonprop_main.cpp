#include <fstream>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "photonprop/cli.hpp"

namespace {

using photonprop::EmitterModel;
using photonprop::cli::Dataset;
using photonprop::cli::ScanOptions;
using photonprop::cli::SweepSpec;

constexpr int kExitBadArguments = 2;
constexpr int kExitAllPointsSingular = 3;

/// Turns a line-oriented `key = value` config file into command-line
/// tokens. Lines starting with '#' are comments. Unknown keys surface as
/// CLI11 parse errors.
std::vector<std::string> config_to_args(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw CLI::FileError("could not open config file: " + path);
  }
  std::vector<std::string> args;
  std::string line;
  auto trim = [](std::string s) {
    const auto a = s.find_first_not_of(" \t\r");
    const auto b = s.find_last_not_of(" \t\r");
    return a == std::string::npos ? std::string{} : s.substr(a, b - a + 1);
  };
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw CLI::FileError("config line is not `key = value`: " + line);
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw CLI::FileError("config line has an empty key: " + line);
    }
    if (value == "true") {
      args.push_back("--" + key);
    } else if (value == "false") {
      continue;
    } else {
      args.push_back("--" + key);
      args.push_back(value);
    }
  }
  return args;
}

/// Extracts --config from raw args and splices the file's tokens in right
/// after the subcommand, so explicit flags override the file.
std::vector<std::string> splice_config(std::vector<std::string> args) {
  std::string config_path;
  for (std::size_t i = 0; i < args.size();) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) {
        throw CLI::FileError("--config requires a path");
      }
      config_path = args[i + 1];
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i),
                 args.begin() + static_cast<std::ptrdiff_t>(i) + 2);
    } else if (args[i].rfind("--config=", 0) == 0) {
      config_path = args[i].substr(9);
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
  if (config_path.empty()) return args;
  if (args.empty() || args[0].rfind('-', 0) == 0) {
    throw CLI::FileError("--config requires a subcommand");
  }
  const std::vector<std::string> extra = config_to_args(config_path);
  args.insert(args.begin() + 1, extra.begin(), extra.end());
  return args;
}

void add_sweep_flags(CLI::App* cmd, SweepSpec& sweep, bool with_log) {
  cmd->add_option("--min", sweep.min, "sweep lower bound");
  cmd->add_option("--max", sweep.max, "sweep upper bound");
  cmd->add_option("--steps", sweep.steps, "number of sweep points");
  if (with_log) {
    cmd->add_flag("--log", sweep.log, "logarithmic sweep spacing");
  }
}

void add_model_flag(CLI::App* cmd, EmitterModel& model) {
  cmd->add_option("--emitter-model", model, "emitter model")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, EmitterModel>{
              {"pinhole", EmitterModel::kPinhole},
              {"dipole", EmitterModel::kDipole}},
          CLI::ignore_case));
}

int emit(const Dataset& ds, const std::string& out_path) {
  for (const auto& note : ds.diagnostics) {
    std::cerr << "skipped: " << note << "\n";
  }
  if (ds.rows.empty() && !ds.diagnostics.empty()) {
    std::cerr << "error: every sweep point was singular\n";
    return kExitAllPointsSingular;
  }
  if (out_path.empty()) {
    ds.write_csv(std::cout);
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot open output file " << out_path << "\n";
      return kExitBadArguments;
    }
    ds.write_csv(out);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"post-selected photon entanglement simulator"};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  std::string out_path;
  app.option_defaults()->ignore_case();

  // fig2
  SweepSpec phi_sweep{0.0, 2.0 * std::numbers::pi, 400, false};
  auto* fig2 = app.add_subcommand(
      "fig2", "far-field concurrence versus the propagation phase");
  add_sweep_flags(fig2, phi_sweep, false);
  fig2->add_option("--out", out_path, "output CSV path (default stdout)");

  // scan-r
  ScanOptions scan_r_opts;
  SweepSpec kr_sweep{1e-2, 1e5, 200, true};
  auto* scan_r = app.add_subcommand(
      "scan-r", "concurrence versus the detector distance kr");
  scan_r->add_option("--kd", scan_r_opts.kd, "emitter separation (k units)");
  scan_r->add_option("--theta", scan_r_opts.theta_deg,
                     "detection angle in degrees");
  scan_r->add_option("--state", scan_r_opts.state, "initial two-photon state");
  scan_r->add_option("--max-n", scan_r_opts.max_photons,
                     "permutation-sum photon cap");
  add_model_flag(scan_r, scan_r_opts.model);
  add_sweep_flags(scan_r, kr_sweep, true);
  scan_r->add_option("--out", out_path, "output CSV path (default stdout)");

  // scan-theta
  ScanOptions scan_theta_opts;
  SweepSpec theta_sweep{-90.0, 90.0, 181, false};
  auto* scan_theta = app.add_subcommand(
      "scan-theta", "concurrence versus the symmetric detection angle");
  scan_theta->add_option("--kd", scan_theta_opts.kd,
                         "emitter separation (k units)");
  scan_theta->add_option("--kr", scan_theta_opts.kr,
                         "detector distance (k units)");
  scan_theta->add_option("--state", scan_theta_opts.state,
                         "initial two-photon state");
  scan_theta->add_option("--max-n", scan_theta_opts.max_photons,
                         "permutation-sum photon cap");
  add_model_flag(scan_theta, scan_theta_opts.model);
  add_sweep_flags(scan_theta, theta_sweep, false);
  scan_theta->add_option("--out", out_path, "output CSV path (default stdout)");

  // fig8
  double kd1 = 2.0 * std::numbers::pi;
  double kd2 = 4.0 * std::numbers::pi;
  int fig8_max_photons = photonprop::kDefaultMaxPhotons;
  SweepSpec kz_sweep{1.0, 1e5, 200, true};
  auto* fig8 = app.add_subcommand(
      "fig8", "three-tangle versus the detector height kz");
  fig8->add_option("--kd1", kd1, "first emitter spacing (k units)");
  fig8->add_option("--kd2", kd2, "second emitter spacing (k units)");
  fig8->add_option("--max-n", fig8_max_photons, "permutation-sum photon cap");
  add_sweep_flags(fig8, kz_sweep, true);
  fig8->add_option("--out", out_path, "output CSV path (default stdout)");

  // ghz
  int ghz_n = 6;
  int ghz_max_photons = photonprop::kDefaultMaxPhotons;
  auto* ghz = app.add_subcommand(
      "ghz", "GHZ pipeline fidelity report for n = 2..N");
  ghz->add_option("--n", ghz_n, "largest photon count");
  ghz->add_option("--max-n", ghz_max_photons, "permutation-sum photon cap");
  ghz->add_option("--out", out_path, "output CSV path (default stdout)");

  // identity
  int identity_n_max = 21;
  auto* identity = app.add_subcommand(
      "identity", "cotangent-identity verification table");
  identity->add_option("--n-max", identity_n_max, "largest odd n");
  identity->add_option("--out", out_path, "output CSV path (default stdout)");

  // coincidence
  int coincidence_n = 3;
  double eta_q = 1.0;
  double omega = 4.0 * std::numbers::pi;
  auto* coincidence = app.add_subcommand(
      "coincidence", "n-photon coincidence probability");
  coincidence->add_option("--n", coincidence_n, "photon count");
  coincidence->add_option("--eta-q", eta_q, "detector quantum efficiency");
  coincidence->add_option("--omega", omega,
                          "total detection solid angle (sr)");
  coincidence->add_option("--out", out_path, "output CSV path (default stdout)");

  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    args = splice_config(std::move(args));
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadArguments;
  }

  try {
    Dataset ds;
    if (fig2->parsed()) {
      ds = photonprop::cli::cmd_fig2(phi_sweep);
    } else if (scan_r->parsed()) {
      ds = photonprop::cli::cmd_scan_r(scan_r_opts, kr_sweep);
    } else if (scan_theta->parsed()) {
      ds = photonprop::cli::cmd_scan_theta(scan_theta_opts, theta_sweep);
    } else if (fig8->parsed()) {
      ds = photonprop::cli::cmd_fig8(kd1, kd2, kz_sweep, fig8_max_photons);
    } else if (ghz->parsed()) {
      ds = photonprop::cli::cmd_ghz(ghz_n, ghz_max_photons);
    } else if (identity->parsed()) {
      ds = photonprop::cli::cmd_identity(identity_n_max);
    } else if (coincidence->parsed()) {
      ds = photonprop::cli::cmd_coincidence(coincidence_n, eta_q, omega);
    }
    return emit(ds, out_path);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadArguments;
  } catch (const photonprop::ZeroStateError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitAllPointsSingular;
  }
}
