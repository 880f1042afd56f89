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

#ifndef GRIDFORGE_ODOMETRY_COVARIANCE_H_
#define GRIDFORGE_ODOMETRY_COVARIANCE_H_

#include <vector>

#include "Eigen/Core"
#include "gridforge/odometry/kd_tree.h"
#include "gridforge/pointcloud/point_cloud.h"

namespace gridforge {
namespace odometry {

using PointCovariances = std::vector<Eigen::Matrix3d>;

constexpr int kDefaultCovarianceNeighbors = 10;
// Eigenvalue along the local surface normal after regularization.
constexpr double kPlaneEpsilon = 1e-3;

// Plane-regularized covariance per point: the sample covariance of its k
// nearest neighbors (the point included) is eigendecomposed and its
// eigenvalues are replaced by (kPlaneEpsilon, 1, 1), smallest first.
// Throws DegenerateInputError if k < 3 or there are fewer than k points.
PointCovariances EstimateCovariances(const KdTree& tree, int k_neighbors);
PointCovariances EstimateCovariances(const pointcloud::PointCloud3D& cloud,
                                     int k_neighbors =
                                         kDefaultCovarianceNeighbors);

}  // namespace odometry
}  // namespace gridforge

#endif  // GRIDFORGE_ODOMETRY_COVARIANCE_H_
