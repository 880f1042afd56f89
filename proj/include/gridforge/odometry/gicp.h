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

#ifndef GRIDFORGE_ODOMETRY_GICP_H_
#define GRIDFORGE_ODOMETRY_GICP_H_

#include <memory>
#include <span>
#include <vector>

#include "Eigen/Core"
#include "gridforge/odometry/covariance.h"
#include "gridforge/odometry/kd_tree.h"
#include "gridforge/pointcloud/point_cloud.h"
#include "gridforge/transform/rigid_transform.h"

namespace gridforge {
namespace odometry {

struct GicpOptions {
  // Correspondences farther apart than this are rejected.
  double max_correspondence_distance = 1.0;
  int max_iterations = 64;
  // Stop once the norm of the accepted twist update falls below this.
  double convergence_epsilon = 1e-6;
  int min_correspondences = 10;
  int covariance_neighbors = kDefaultCovarianceNeighbors;
  int max_step_halvings = 12;
};

struct Correspondence {
  int source = 0;
  int target = 0;
};

// Sum over pairs of d^T (C_t + R C_s R^T)^-1 d with d = p_t - X p_s, where R
// is the rotation part of X. Throws DegenerateInputError if a combined
// covariance is not positive definite.
double GicpResidual(const transform::SE3Transform& transform,
                    std::span<const Eigen::Vector3d> source_points,
                    std::span<const Eigen::Vector3d> target_points,
                    std::span<const Correspondence> correspondences,
                    const PointCovariances& source_covariances,
                    const PointCovariances& target_covariances);

// Points with their plane-regularized covariances.
struct CovarianceCloud {
  std::vector<Eigen::Vector3d> points;
  PointCovariances covariances;

  static CovarianceCloud FromPoints(std::vector<Eigen::Vector3d> points,
                                    int k_neighbors);
};

// A registration target: points, covariances and a search tree. Immutable
// once built; reused across frames (previous scan, submap).
class RegistrationTarget {
 public:
  RegistrationTarget(std::vector<Eigen::Vector3d> points, int k_neighbors);
  RegistrationTarget(std::vector<Eigen::Vector3d> points,
                     PointCovariances covariances);

  const KdTree& tree() const { return tree_; }
  const std::vector<Eigen::Vector3d>& points() const { return tree_.points(); }
  const PointCovariances& covariances() const { return covariances_; }
  std::size_t size() const { return tree_.size(); }

 private:
  KdTree tree_;
  PointCovariances covariances_;
};

struct RegistrationResult {
  // Maps source coordinates into target coordinates.
  transform::SE3Transform transform;
  int iterations = 0;
  int correspondences = 0;
  double residual = 0.;
  bool converged = false;
  // Residual before and after every accepted Gauss-Newton step, evaluated on
  // that step's correspondence set.
  std::vector<std::pair<double, double>> accepted_steps;
};

// Generalized-ICP: alternates nearest-neighbor correspondence search with a
// Gauss-Newton step on SE(3) (right-multiplicative twist update, step halving
// until the residual does not increase). Throws RegistrationError when an
// iteration finds fewer than options.min_correspondences pairs.
RegistrationResult Register(const CovarianceCloud& source,
                            const RegistrationTarget& target,
                            const transform::SE3Transform& initial_guess,
                            const GicpOptions& options = {});

// Relative motion between two scans, starting from identity. The result maps
// source points onto the target.
transform::SE3Transform RegisterScanToScan(
    const pointcloud::PointCloud3D& source,
    const pointcloud::PointCloud3D& target, const GicpOptions& options = {});

}  // namespace odometry
}  // namespace gridforge

#endif  // GRIDFORGE_ODOMETRY_GICP_H_
