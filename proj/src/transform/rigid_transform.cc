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

#include "gridforge/transform/rigid_transform.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>

namespace gridforge {
namespace transform {
namespace {

Eigen::Matrix3d Hat(const Eigen::Vector3d& v) {
  Eigen::Matrix3d m;
  m << 0., -v.z(), v.y(), v.z(), 0., -v.x(), -v.y(), v.x(), 0.;
  return m;
}

}  // namespace

double NormalizeAngle(double angle) {
  constexpr double kPi = std::numbers::pi;
  double wrapped = std::remainder(angle, 2. * kPi);
  if (wrapped <= -kPi) wrapped += 2. * kPi;
  return wrapped;
}

SE3Transform SE3Transform::FromYaw(double yaw,
                                   const Eigen::Vector3d& translation) {
  return SE3Transform(
      Eigen::AngleAxisd(yaw, Eigen::Vector3d::UnitZ()).toRotationMatrix(),
      translation);
}

SE3Transform SE3Transform::FromRollPitchYaw(
    double roll, double pitch, double yaw,
    const Eigen::Vector3d& translation) {
  const Eigen::Matrix3d rotation =
      (Eigen::AngleAxisd(yaw, Eigen::Vector3d::UnitZ()) *
       Eigen::AngleAxisd(pitch, Eigen::Vector3d::UnitY()) *
       Eigen::AngleAxisd(roll, Eigen::Vector3d::UnitX()))
          .toRotationMatrix();
  return SE3Transform(rotation, translation);
}

SE3Transform SE3Transform::Exp(const Vector6& twist) {
  const Eigen::Vector3d omega = twist.head<3>();
  const Eigen::Vector3d v = twist.tail<3>();
  const double theta = omega.norm();
  const Eigen::Matrix3d omega_hat = Hat(omega);
  Eigen::Matrix3d rotation;
  Eigen::Matrix3d left_jacobian;
  if (theta < 1e-10) {
    rotation = Eigen::Matrix3d::Identity() + omega_hat;
    left_jacobian = Eigen::Matrix3d::Identity() + 0.5 * omega_hat;
  } else {
    const double a = std::sin(theta) / theta;
    const double b = (1. - std::cos(theta)) / (theta * theta);
    const double c = (theta - std::sin(theta)) / (theta * theta * theta);
    const Eigen::Matrix3d omega_hat2 = omega_hat * omega_hat;
    rotation = Eigen::Matrix3d::Identity() + a * omega_hat + b * omega_hat2;
    left_jacobian =
        Eigen::Matrix3d::Identity() + b * omega_hat + c * omega_hat2;
  }
  // Re-orthonormalize so long compositions stay on the manifold.
  const Eigen::Quaterniond q(rotation);
  return SE3Transform(q.normalized().toRotationMatrix(), left_jacobian * v);
}

SE3Transform::Vector6 SE3Transform::Log() const {
  const Eigen::AngleAxisd angle_axis(rotation_);
  const double theta = angle_axis.angle();
  const Eigen::Vector3d omega = theta * angle_axis.axis();
  const Eigen::Matrix3d omega_hat = Hat(omega);
  Eigen::Matrix3d inverse_jacobian;
  if (theta < 1e-10) {
    inverse_jacobian = Eigen::Matrix3d::Identity() - 0.5 * omega_hat;
  } else {
    const double half = 0.5 * theta;
    const double coefficient =
        (1. - half * std::cos(half) / std::sin(half)) / (theta * theta);
    inverse_jacobian = Eigen::Matrix3d::Identity() - 0.5 * omega_hat +
                       coefficient * omega_hat * omega_hat;
  }
  Vector6 twist;
  twist.head<3>() = omega;
  twist.tail<3>() = inverse_jacobian * translation_;
  return twist;
}

double SE3Transform::RotationAngle() const {
  const double cosine =
      std::clamp((rotation_.trace() - 1.) / 2., -1., 1.);
  return std::acos(cosine);
}

bool SE3Transform::IsValid(double tolerance) const {
  if (!rotation_.allFinite() || !translation_.allFinite()) return false;
  const double orthonormality =
      (rotation_.transpose() * rotation_ - Eigen::Matrix3d::Identity())
          .cwiseAbs()
          .maxCoeff();
  return orthonormality <= tolerance &&
         std::abs(rotation_.determinant() - 1.) <= tolerance * 10.;
}

std::ostream& operator<<(std::ostream& os, const SE3Transform& transform) {
  const Eigen::Quaterniond q(transform.rotation());
  os << "{t: [" << transform.translation().transpose() << "], q: [" << q.w()
     << " " << q.x() << " " << q.y() << " " << q.z() << "]}";
  return os;
}

bool operator==(const Pose2D& lhs, const Pose2D& rhs) {
  return lhs.x == rhs.x && lhs.y == rhs.y && lhs.yaw == rhs.yaw;
}

Pose2D Se3ToPose2D(const SE3Transform& transform) {
  const Eigen::Matrix3d& r = transform.rotation();
  return Pose2D{transform.translation().x(), transform.translation().y(),
                NormalizeAngle(std::atan2(r(1, 0), r(0, 0)))};
}

}  // namespace transform
}  // namespace gridforge
