#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "photonprop/qstate.hpp"

namespace photonprop {

enum class EmitterModel { kPinhole, kDipole };

/// Detector position plus its spherical direction as seen from the
/// coordinate origin (theta from the z-axis, phi the azimuth).
struct Detector {
  Eigen::Vector3d position;
  double theta;
  double phi;
};

/// Emitter/detector layout. All lengths are dimensionless k*length, so
/// distances below are already kR.
struct Scene {
  EmitterModel model = EmitterModel::kDipole;
  std::vector<Eigen::Vector3d> emitters;
  std::vector<Detector> detectors;

  int size() const { return static_cast<int>(emitters.size()); }

  /// |emitter l - detector j| in k=1 units.
  double distance(int emitter, int detector) const;

  /// R[l][j] for every emitter/detector pair.
  Eigen::MatrixXd distance_matrix() const;
};

/// Emitters at (+-kd/2, 0, 0); detectors at distance kr from the origin at
/// signed angles +-theta from the z-axis in the xz-plane.
Scene build_two_source_scene(double kd, double kr, double theta,
                             EmitterModel model = EmitterModel::kDipole);

/// Emitters at (l*kd, 0, 0) with a detector directly overhead at height kz,
/// l = 0..n-1.
Scene build_array_scene(int n, double kd, double kz,
                        EmitterModel model = EmitterModel::kDipole);

/// n^2 d^2 / (2 z^2), the small parameter of the far-field condition.
double farfield_parameter(int n, double kd, double kz);

/// True when farfield_parameter is below 1e-3.
bool farfield_predicate(int n, double kd, double kz);

/// e^{ikR} (1/kR + 1/kR^3 - i/kR^2): the dipole radial kernel at all
/// orders, in k=1 units with the overall k^3 absorbed globally.
Complex radial_factor(double kR);

/// 2x2 map from an emitter's dipole components (x, y) to the detector's
/// polarization basis (theta, phi). Row 0 is the theta (H) component,
/// row 1 the phi (V) component.
Eigen::Matrix2cd transfer_block(const Scene& scene, int emitter, int detector);

/// Angular part of the dipole transfer block at detector direction
/// (theta, phi); determinant is cos(theta).
Eigen::Matrix2d angular_block(double theta, double phi);

/// k (R14 + R23 - R13 - R24) / 2 for a 2-emitter / 2-detector scene,
/// 1-based labels as in the two-source layout (emitters 1,2; detectors 3,4).
double farfield_phase(const Scene& scene);

/// Two-atom interaction matrix and its eigenvalues +-e^{ikd}/(kd).
struct SuperradiantModel {
  Eigen::Matrix2cd interaction;           ///< M, zero diagonal
  std::vector<Complex> eigenvalues;       ///< alpha_p + i beta_p
  std::vector<Eigen::Vector2d> eigenvectors;
  double magnitude;                       ///< |eigenvalue| = 1/(kd)
};

SuperradiantModel superradiant_eigs(double kd);

}  // namespace photonprop
