/*
 * Copyright 2026 The GridForge Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef GRIDFORGE_TRANSFORM_RIGID_TRANSFORM_H_
#define GRIDFORGE_TRANSFORM_RIGID_TRANSFORM_H_

#include <iosfwd>

#include "Eigen/Core"
#include "Eigen/Geometry"

namespace gridforge {
namespace transform {

// Wraps an angle into (-pi, pi].
double NormalizeAngle(double angle);

// Rigid body motion in 3D. Maps points from the child frame into the parent
// frame: p_parent = rotation * p_child + translation.
class SE3Transform {
 public:
  using Vector6 = Eigen::Matrix<double, 6, 1>;

  SE3Transform()
      : rotation_(Eigen::Matrix3d::Identity()),
        translation_(Eigen::Vector3d::Zero()) {}
  SE3Transform(const Eigen::Matrix3d& rotation,
               const Eigen::Vector3d& translation)
      : rotation_(rotation), translation_(translation) {}

  static SE3Transform Identity() { return SE3Transform(); }
  static SE3Transform FromTranslation(const Eigen::Vector3d& translation) {
    return SE3Transform(Eigen::Matrix3d::Identity(), translation);
  }
  static SE3Transform FromYaw(double yaw, const Eigen::Vector3d& translation =
                                              Eigen::Vector3d::Zero());
  static SE3Transform FromRollPitchYaw(double roll, double pitch, double yaw,
                                       const Eigen::Vector3d& translation);

  // Exponential map of a twist (rotation vector first, then translation).
  static SE3Transform Exp(const Vector6& twist);
  // Inverse of Exp.
  Vector6 Log() const;

  const Eigen::Matrix3d& rotation() const { return rotation_; }
  const Eigen::Vector3d& translation() const { return translation_; }

  SE3Transform inverse() const {
    const Eigen::Matrix3d rt = rotation_.transpose();
    return SE3Transform(rt, -(rt * translation_));
  }

  Eigen::Vector3d operator*(const Eigen::Vector3d& point) const {
    return rotation_ * point + translation_;
  }

  // Angle of the rotation part in radians, in [0, pi].
  double RotationAngle() const;

  // True when the rotation is orthonormal with determinant +1.
  bool IsValid(double tolerance = 1e-9) const;

 private:
  Eigen::Matrix3d rotation_;
  Eigen::Vector3d translation_;
};

inline SE3Transform operator*(const SE3Transform& lhs,
                              const SE3Transform& rhs) {
  return SE3Transform(lhs.rotation() * rhs.rotation(),
                      lhs.rotation() * rhs.translation() + lhs.translation());
}

std::ostream& operator<<(std::ostream& os, const SE3Transform& transform);

// Planar pose; yaw is kept wrapped to (-pi, pi].
struct Pose2D {
  double x = 0.;
  double y = 0.;
  double yaw = 0.;
};

bool operator==(const Pose2D& lhs, const Pose2D& rhs);

// Planar reduction: x, y from the translation, yaw = atan2(R(1,0), R(0,0)).
Pose2D Se3ToPose2D(const SE3Transform& transform);

}  // namespace transform
}  // namespace gridforge

#endif  // GRIDFORGE_TRANSFORM_RIGID_TRANSFORM_H_
