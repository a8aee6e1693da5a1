#include "photonprop/scene.hpp"

#include <cmath>
#include <stdexcept>

namespace photonprop {

namespace {

constexpr Complex kI{0.0, 1.0};

Detector make_detector(const Eigen::Vector3d& pos) {
  Detector det;
  det.position = pos;
  const double rho = std::hypot(pos.x(), pos.y());
  det.theta = std::atan2(rho, pos.z());
  det.phi = (rho == 0.0) ? 0.0 : std::atan2(pos.y(), pos.x());
  return det;
}

}  // namespace

double Scene::distance(int emitter, int detector) const {
  return (emitters[static_cast<std::size_t>(emitter)] -
          detectors[static_cast<std::size_t>(detector)].position)
      .norm();
}

Eigen::MatrixXd Scene::distance_matrix() const {
  Eigen::MatrixXd r(emitters.size(), detectors.size());
  for (int l = 0; l < static_cast<int>(emitters.size()); ++l) {
    for (int j = 0; j < static_cast<int>(detectors.size()); ++j) {
      r(l, j) = distance(l, j);
    }
  }
  return r;
}

Scene build_two_source_scene(double kd, double kr, double theta,
                             EmitterModel model) {
  if (kd <= 0.0 || kr <= 0.0) {
    throw std::invalid_argument("build_two_source_scene: kd and kr must be > 0");
  }
  Scene scene;
  scene.model = model;
  scene.emitters = {Eigen::Vector3d(kd / 2.0, 0.0, 0.0),
                    Eigen::Vector3d(-kd / 2.0, 0.0, 0.0)};
  const Eigen::Vector3d d3(kr * std::sin(theta), 0.0, kr * std::cos(theta));
  const Eigen::Vector3d d4(-kr * std::sin(theta), 0.0, kr * std::cos(theta));
  scene.detectors = {make_detector(d3), make_detector(d4)};
  for (int l = 0; l < 2; ++l) {
    for (int j = 0; j < 2; ++j) {
      if (scene.distance(l, j) < 1e-9) {
        throw std::invalid_argument(
            "build_two_source_scene: detector coincides with an emitter");
      }
    }
  }
  return scene;
}

Scene build_array_scene(int n, double kd, double kz, EmitterModel model) {
  if (n < 2) {
    throw std::invalid_argument("build_array_scene: n must be >= 2");
  }
  if (kd <= 0.0 || kz <= 0.0) {
    throw std::invalid_argument("build_array_scene: kd and kz must be > 0");
  }
  Scene scene;
  scene.model = model;
  for (int l = 0; l < n; ++l) {
    scene.emitters.emplace_back(l * kd, 0.0, 0.0);
    scene.detectors.push_back(
        make_detector(Eigen::Vector3d(l * kd, 0.0, kz)));
  }
  return scene;
}

double farfield_parameter(int n, double kd, double kz) {
  return n * n * kd * kd / (2.0 * kz * kz);
}

bool farfield_predicate(int n, double kd, double kz) {
  return farfield_parameter(n, kd, kz) < 1e-3;
}

Complex radial_factor(double kR) {
  if (kR <= 0.0) {
    throw std::invalid_argument("radial_factor: kR must be > 0");
  }
  const double inv = 1.0 / kR;
  return std::exp(kI * kR) * Complex(inv + inv * inv * inv, -inv * inv);
}

Eigen::Matrix2d angular_block(double theta, double phi) {
  Eigen::Matrix2d a;
  a << std::cos(phi) * std::cos(theta), std::sin(phi) * std::cos(theta),
      -std::sin(phi), std::cos(phi);
  return a;
}

Eigen::Matrix2cd transfer_block(const Scene& scene, int emitter,
                                int detector) {
  if (emitter < 0 || emitter >= scene.size() || detector < 0 ||
      detector >= static_cast<int>(scene.detectors.size())) {
    throw std::out_of_range("transfer_block: index out of range");
  }
  const double r = scene.distance(emitter, detector);
  if (scene.model == EmitterModel::kPinhole) {
    return (std::exp(kI * r) / r) * Eigen::Matrix2cd::Identity();
  }
  const Detector& det = scene.detectors[static_cast<std::size_t>(detector)];
  return radial_factor(r) *
         angular_block(det.theta, det.phi).cast<Complex>();
}

double farfield_phase(const Scene& scene) {
  if (scene.size() != 2 || scene.detectors.size() != 2) {
    throw std::invalid_argument(
        "farfield_phase requires exactly two emitters and two detectors");
  }
  // emitters 1,2 -> rows 0,1; detectors 3,4 -> cols 0,1
  const Eigen::MatrixXd r = scene.distance_matrix();
  return 0.5 * (r(0, 1) + r(1, 0) - r(0, 0) - r(1, 1));
}

SuperradiantModel superradiant_eigs(double kd) {
  if (kd <= 0.0) {
    throw std::invalid_argument("superradiant_eigs: kd must be > 0");
  }
  const Complex coupling = std::exp(kI * kd) / kd;
  SuperradiantModel model;
  model.interaction = Eigen::Matrix2cd::Zero();
  model.interaction(0, 1) = coupling;
  model.interaction(1, 0) = coupling;
  model.eigenvalues = {coupling, -coupling};
  const double s = 1.0 / std::sqrt(2.0);
  model.eigenvectors = {Eigen::Vector2d(s, s), Eigen::Vector2d(s, -s)};
  model.magnitude = 1.0 / kd;
  return model;
}

}  // namespace photonprop
