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

#ifndef GRIDFORGE_ODOMETRY_KD_TREE_H_
#define GRIDFORGE_ODOMETRY_KD_TREE_H_

#include <vector>

#include "Eigen/Core"

namespace gridforge {
namespace odometry {

// Static 3D kd-tree for nearest neighbor queries. Immutable after
// construction, so concurrent queries are safe.
class KdTree {
 public:
  explicit KdTree(std::vector<Eigen::Vector3d> points);

  KdTree(const KdTree&) = delete;
  KdTree& operator=(const KdTree&) = delete;
  KdTree(KdTree&&) = default;
  KdTree& operator=(KdTree&&) = default;

  const std::vector<Eigen::Vector3d>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }

  // Index of the nearest point within max_distance, or -1.
  int Nearest(const Eigen::Vector3d& query, double max_distance,
              double* squared_distance = nullptr) const;

  // The k nearest points sorted by increasing distance (fewer if the tree
  // holds fewer than k points).
  void KNearest(const Eigen::Vector3d& query, int k, std::vector<int>* indices,
                std::vector<double>* squared_distances = nullptr) const;

 private:
  struct Node {
    int begin = 0;
    int end = 0;
    int left = -1;
    int right = -1;
    int axis = 0;
    double split = 0.;
  };

  struct Candidates;

  int Build(int begin, int end);
  void Search(int node, const Eigen::Vector3d& query,
              Candidates* candidates) const;

  std::vector<Eigen::Vector3d> points_;
  std::vector<int> order_;
  std::vector<Node> nodes_;
};

}  // namespace odometry
}  // namespace gridforge

#endif  // GRIDFORGE_ODOMETRY_KD_TREE_H_
