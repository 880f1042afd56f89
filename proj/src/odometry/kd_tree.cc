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

#include "gridforge/odometry/kd_tree.h"

#include <algorithm>
#include <limits>
#include <numeric>

namespace gridforge {
namespace odometry {
namespace {

constexpr int kLeafSize = 8;

}  // namespace

// Bounded list of the best candidates so far, sorted by distance.
struct KdTree::Candidates {
  int capacity;
  double radius_squared;
  std::vector<int> indices;
  std::vector<double> distances;

  double Bound() const {
    return static_cast<int>(indices.size()) < capacity ? radius_squared
                                                       : distances.back();
  }

  void Offer(int index, double distance) {
    if (distance > Bound()) return;
    if (static_cast<int>(indices.size()) == capacity) {
      if (distance >= distances.back()) return;
      indices.pop_back();
      distances.pop_back();
    }
    auto pos = std::upper_bound(distances.begin(), distances.end(), distance);
    const auto offset = pos - distances.begin();
    distances.insert(pos, distance);
    indices.insert(indices.begin() + offset, index);
  }
};

KdTree::KdTree(std::vector<Eigen::Vector3d> points)
    : points_(std::move(points)), order_(points_.size()) {
  std::iota(order_.begin(), order_.end(), 0);
  if (!points_.empty()) {
    nodes_.reserve(2 * points_.size() / kLeafSize + 1);
    Build(0, static_cast<int>(points_.size()));
  }
}

int KdTree::Build(int begin, int end) {
  const int id = static_cast<int>(nodes_.size());
  nodes_.push_back(Node{begin, end});
  if (end - begin <= kLeafSize) return id;

  Eigen::Vector3d lo = Eigen::Vector3d::Constant(
      std::numeric_limits<double>::infinity());
  Eigen::Vector3d hi = -lo;
  for (int i = begin; i < end; ++i) {
    lo = lo.cwiseMin(points_[order_[i]]);
    hi = hi.cwiseMax(points_[order_[i]]);
  }
  int axis = 0;
  (hi - lo).maxCoeff(&axis);
  const int mid = begin + (end - begin) / 2;
  std::nth_element(order_.begin() + begin, order_.begin() + mid,
                   order_.begin() + end, [&](int a, int b) {
                     return points_[a][axis] < points_[b][axis];
                   });
  const double split = points_[order_[mid]][axis];
  const int left = Build(begin, mid);
  const int right = Build(mid, end);
  Node& node = nodes_[id];
  node.axis = axis;
  node.split = split;
  node.left = left;
  node.right = right;
  return id;
}

void KdTree::Search(int node_id, const Eigen::Vector3d& query,
                    Candidates* candidates) const {
  const Node& node = nodes_[node_id];
  if (node.left < 0) {
    for (int i = node.begin; i < node.end; ++i) {
      const int index = order_[i];
      candidates->Offer(index, (points_[index] - query).squaredNorm());
    }
    return;
  }
  const double diff = query[node.axis] - node.split;
  const int near = diff < 0. ? node.left : node.right;
  const int far = diff < 0. ? node.right : node.left;
  Search(near, query, candidates);
  if (diff * diff <= candidates->Bound()) Search(far, query, candidates);
}

int KdTree::Nearest(const Eigen::Vector3d& query, double max_distance,
                    double* squared_distance) const {
  if (points_.empty()) return -1;
  Candidates candidates{1, max_distance * max_distance, {}, {}};
  candidates.indices.reserve(1);
  candidates.distances.reserve(1);
  Search(0, query, &candidates);
  if (candidates.indices.empty()) return -1;
  if (squared_distance != nullptr) *squared_distance = candidates.distances[0];
  return candidates.indices[0];
}

void KdTree::KNearest(const Eigen::Vector3d& query, int k,
                      std::vector<int>* indices,
                      std::vector<double>* squared_distances) const {
  Candidates candidates{k, std::numeric_limits<double>::infinity(), {}, {}};
  candidates.indices.reserve(k + 1);
  candidates.distances.reserve(k + 1);
  if (!points_.empty() && k > 0) Search(0, query, &candidates);
  *indices = std::move(candidates.indices);
  if (squared_distances != nullptr) {
    *squared_distances = std::move(candidates.distances);
  }
}

}  // namespace odometry
}  // namespace gridforge
