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

#include "gridforge/odometry/gicp.h"

#include <cmath>
#include <string>

#include "Eigen/Cholesky"
#include "gridforge/common/error.h"
#include "gridforge/common/parallel.h"

namespace gridforge {
namespace odometry {
namespace {

using transform::SE3Transform;
using Matrix6 = Eigen::Matrix<double, 6, 6>;
using Vector6 = Eigen::Matrix<double, 6, 1>;

Eigen::Matrix3d Hat(const Eigen::Vector3d& v) {
  Eigen::Matrix3d m;
  m << 0., -v.z(), v.y(), v.z(), 0., -v.x(), -v.y(), v.x(), 0.;
  return m;
}

Eigen::Matrix3d InverseCombinedCovariance(const Eigen::Matrix3d& rotation,
                                          const Eigen::Matrix3d& source_cov,
                                          const Eigen::Matrix3d& target_cov) {
  const Eigen::Matrix3d combined =
      target_cov + rotation * source_cov * rotation.transpose();
  const Eigen::LLT<Eigen::Matrix3d> llt(combined);
  if (llt.info() != Eigen::Success) {
    throw DegenerateInputError("combined covariance is not positive definite");
  }
  return llt.solve(Eigen::Matrix3d::Identity());
}

std::vector<Correspondence> FindCorrespondences(
    const CovarianceCloud& source, const RegistrationTarget& target,
    const SE3Transform& transform, double max_distance) {
  std::vector<int> matches(source.points.size(), -1);
  common::ParallelFor(source.points.size(), [&](std::size_t i) {
    matches[i] = target.tree().Nearest(transform * source.points[i],
                                       max_distance);
  });
  std::vector<Correspondence> correspondences;
  correspondences.reserve(matches.size());
  for (std::size_t i = 0; i < matches.size(); ++i) {
    if (matches[i] >= 0) {
      correspondences.push_back({static_cast<int>(i), matches[i]});
    }
  }
  return correspondences;
}

}  // namespace

double GicpResidual(const SE3Transform& transform,
                    std::span<const Eigen::Vector3d> source_points,
                    std::span<const Eigen::Vector3d> target_points,
                    std::span<const Correspondence> correspondences,
                    const PointCovariances& source_covariances,
                    const PointCovariances& target_covariances) {
  double sum = 0.;
  for (const Correspondence& c : correspondences) {
    const Eigen::Vector3d d =
        target_points[c.target] - transform * source_points[c.source];
    const Eigen::Matrix3d information = InverseCombinedCovariance(
        transform.rotation(), source_covariances[c.source],
        target_covariances[c.target]);
    sum += d.dot(information * d);
  }
  return sum;
}

CovarianceCloud CovarianceCloud::FromPoints(std::vector<Eigen::Vector3d> points,
                                            int k_neighbors) {
  KdTree tree(std::move(points));
  PointCovariances covariances = EstimateCovariances(tree, k_neighbors);
  return CovarianceCloud{tree.points(), std::move(covariances)};
}

RegistrationTarget::RegistrationTarget(std::vector<Eigen::Vector3d> points,
                                       int k_neighbors)
    : tree_(std::move(points)),
      covariances_(EstimateCovariances(tree_, k_neighbors)) {}

RegistrationTarget::RegistrationTarget(std::vector<Eigen::Vector3d> points,
                                       PointCovariances covariances)
    : tree_(std::move(points)), covariances_(std::move(covariances)) {
  if (covariances_.size() != tree_.size()) {
    throw ContractViolation("target covariances do not match points");
  }
}

RegistrationResult Register(const CovarianceCloud& source,
                            const RegistrationTarget& target,
                            const SE3Transform& initial_guess,
                            const GicpOptions& options) {
  if (source.points.empty() || target.size() == 0) {
    throw RegistrationError("registration needs nonempty clouds");
  }
  RegistrationResult result;
  SE3Transform current = initial_guess;
  for (int iteration = 0; iteration < options.max_iterations; ++iteration) {
    result.iterations = iteration + 1;
    const std::vector<Correspondence> correspondences = FindCorrespondences(
        source, target, current, options.max_correspondence_distance);
    result.correspondences = static_cast<int>(correspondences.size());
    if (result.correspondences < options.min_correspondences) {
      throw RegistrationError(
          "only " + std::to_string(correspondences.size()) +
          " correspondences within " +
          std::to_string(options.max_correspondence_distance) + " m");
    }

    const Eigen::Matrix3d& rotation = current.rotation();
    Matrix6 hessian = Matrix6::Zero();
    Vector6 gradient = Vector6::Zero();
    double residual = 0.;
    for (const Correspondence& c : correspondences) {
      const Eigen::Vector3d& p = source.points[c.source];
      const Eigen::Vector3d d = target.points()[c.target] - current * p;
      const Eigen::Matrix3d information = InverseCombinedCovariance(
          rotation, source.covariances[c.source],
          target.covariances()[c.target]);
      Eigen::Matrix<double, 3, 6> jacobian;
      jacobian.leftCols<3>() = rotation * Hat(p);
      jacobian.rightCols<3>() = -rotation;
      const Eigen::Matrix<double, 6, 3> jt_information =
          jacobian.transpose() * information;
      hessian.noalias() += jt_information * jacobian;
      gradient.noalias() += jt_information * d;
      residual += d.dot(information * d);
    }
    const Vector6 step = -hessian.ldlt().solve(gradient);
    if (!step.allFinite()) {
      throw RegistrationError("singular Gauss-Newton system");
    }

    double scale = 1.;
    bool accepted = false;
    SE3Transform candidate;
    double candidate_residual = 0.;
    for (int halving = 0; halving <= options.max_step_halvings; ++halving) {
      candidate = current * SE3Transform::Exp(scale * step);
      candidate_residual =
          GicpResidual(candidate, source.points, target.points(),
                       correspondences, source.covariances,
                       target.covariances());
      if (candidate_residual <= residual) {
        accepted = true;
        break;
      }
      scale *= 0.5;
    }
    result.residual = residual;
    if (!accepted) {
      // No descent along the Gauss-Newton direction: at a minimum for this
      // correspondence set.
      result.converged = true;
      break;
    }
    result.accepted_steps.emplace_back(residual, candidate_residual);
    current = candidate;
    result.residual = candidate_residual;
    if ((scale * step).norm() < options.convergence_epsilon) {
      result.converged = true;
      break;
    }
  }
  result.transform = current;
  return result;
}

SE3Transform RegisterScanToScan(const pointcloud::PointCloud3D& source,
                                const pointcloud::PointCloud3D& target,
                                const GicpOptions& options) {
  if (source.empty() || target.empty()) {
    throw RegistrationError("registration needs nonempty clouds");
  }
  const CovarianceCloud source_cloud = CovarianceCloud::FromPoints(
      pointcloud::Positions(source), options.covariance_neighbors);
  const RegistrationTarget target_cloud(pointcloud::Positions(target),
                                        options.covariance_neighbors);
  return Register(source_cloud, target_cloud, SE3Transform::Identity(),
                  options)
      .transform;
}

}  // namespace odometry
}  // namespace gridforge
