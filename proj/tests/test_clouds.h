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

#ifndef GRIDFORGE_TESTS_TEST_CLOUDS_H_
#define GRIDFORGE_TESTS_TEST_CLOUDS_H_

#include <random>
#include <vector>

#include "Eigen/Core"

namespace gridforge {
namespace testing {

// Points sampled uniformly on the faces of a room and a few boxes standing
// in it. Every region has a well-defined surface normal.
inline std::vector<Eigen::Vector3d> MakeSurfaceCloud(int count,
                                                     std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> unit(0., 1.);
  struct Face {
    Eigen::Vector3d origin, u, v;
  };
  std::vector<Face> faces;
  const auto add_box = [&](const Eigen::Vector3d& lo, const Eigen::Vector3d& hi) {
    const Eigen::Vector3d d = hi - lo;
    const Eigen::Vector3d ex(d.x(), 0, 0), ey(0, d.y(), 0), ez(0, 0, d.z());
    faces.push_back({lo, ex, ey});
    faces.push_back({lo + ez, ex, ey});
    faces.push_back({lo, ex, ez});
    faces.push_back({lo + ey, ex, ez});
    faces.push_back({lo, ey, ez});
    faces.push_back({lo + ex, ey, ez});
  };
  add_box({-4, -3, 0}, {4, 3, 3});
  for (int i = 0; i < 3; ++i) {
    const Eigen::Vector3d lo(-3 + 5 * unit(rng), -2 + 3 * unit(rng), 0);
    add_box(lo, lo + Eigen::Vector3d(0.4 + unit(rng), 0.4 + unit(rng),
                                     0.5 + 1.5 * unit(rng)));
  }
  std::vector<double> areas;
  for (const Face& f : faces) areas.push_back(f.u.cross(f.v).norm());
  std::discrete_distribution<int> pick(areas.begin(), areas.end());
  std::vector<Eigen::Vector3d> points;
  points.reserve(count);
  for (int i = 0; i < count; ++i) {
    const Face& f = faces[pick(rng)];
    points.push_back(f.origin + unit(rng) * f.u + unit(rng) * f.v);
  }
  return points;
}

}  // namespace testing
}  // namespace gridforge

#endif  // GRIDFORGE_TESTS_TEST_CLOUDS_H_
