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

#include "gridforge/odometry/covariance.h"

#include <string>

#include "Eigen/Eigenvalues"
#include "gridforge/common/error.h"
#include "gridforge/common/parallel.h"

namespace gridforge {
namespace odometry {

PointCovariances EstimateCovariances(const KdTree& tree, int k_neighbors) {
  if (k_neighbors < 3) {
    throw DegenerateInputError("covariance estimation needs k >= 3");
  }
  if (static_cast<int>(tree.size()) < k_neighbors) {
    throw DegenerateInputError(
        "covariance estimation needs at least " + std::to_string(k_neighbors) +
        " points, got " + std::to_string(tree.size()));
  }
  const auto& points = tree.points();
  PointCovariances covariances(points.size());
  const Eigen::Vector3d plane_eigenvalues(kPlaneEpsilon, 1., 1.);
  common::ParallelFor(points.size(), [&](std::size_t i) {
    std::vector<int> neighbors;
    tree.KNearest(points[i], k_neighbors, &neighbors);
    Eigen::Vector3d mean = Eigen::Vector3d::Zero();
    for (int n : neighbors) mean += points[n];
    mean /= static_cast<double>(neighbors.size());
    Eigen::Matrix3d covariance = Eigen::Matrix3d::Zero();
    for (int n : neighbors) {
      const Eigen::Vector3d centered = points[n] - mean;
      covariance += centered * centered.transpose();
    }
    covariance /= static_cast<double>(neighbors.size());
    // Eigenvalues come back in increasing order.
    const Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver(covariance);
    const Eigen::Matrix3d& v = solver.eigenvectors();
    covariances[i] = v * plane_eigenvalues.asDiagonal() * v.transpose();
  });
  return covariances;
}

PointCovariances EstimateCovariances(const pointcloud::PointCloud3D& cloud,
                                     int k_neighbors) {
  const KdTree tree(pointcloud::Positions(cloud));
  return EstimateCovariances(tree, k_neighbors);
}

}  // namespace odometry
}  // namespace gridforge
