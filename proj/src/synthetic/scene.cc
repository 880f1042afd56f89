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

#include "gridforge/synthetic/scene.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>

#include "gridforge/common/error.h"

namespace gridforge {
namespace synthetic {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = 3.14159265358979323846;
constexpr double kWallThickness = 0.2;

// Entry distance of a ray into a box (slab method), +inf on a miss.
double RayBox(const Eigen::Vector3d& origin, const Eigen::Vector3d& direction,
              const Box& box) {
  double t_enter = -kInf;
  double t_exit = kInf;
  for (int axis = 0; axis < 3; ++axis) {
    if (direction[axis] == 0.) {
      if (origin[axis] < box.min[axis] || origin[axis] > box.max[axis]) {
        return kInf;
      }
      continue;
    }
    double t1 = (box.min[axis] - origin[axis]) / direction[axis];
    double t2 = (box.max[axis] - origin[axis]) / direction[axis];
    if (t1 > t2) std::swap(t1, t2);
    t_enter = std::max(t_enter, t1);
    t_exit = std::min(t_exit, t2);
  }
  if (t_enter > t_exit || t_enter <= 0.) return kInf;
  return t_enter;
}

Box MakeBox(double x0, double y0, double z0, double x1, double y1, double z1) {
  return Box{Eigen::Vector3d(x0, y0, z0), Eigen::Vector3d(x1, y1, z1)};
}

}  // namespace

double Scene::Raycast(const Eigen::Vector3d& origin,
                      const Eigen::Vector3d& direction) const {
  double best = kInf;
  if (direction.z() < 0.) {
    best = std::min(best, (floor_z - origin.z()) / direction.z());
  } else if (direction.z() > 0.) {
    best = std::min(best, (ceiling_z - origin.z()) / direction.z());
  }
  for (const Box& box : boxes) best = std::min(best, RayBox(origin, direction, box));
  return best;
}

Scene MakeRoom(double width, double depth, std::uint64_t seed) {
  Scene scene;
  const double h = scene.ceiling_z;
  const double t = kWallThickness;
  scene.boxes.push_back(MakeBox(-t, -t, 0., width + t, 0., h));
  scene.boxes.push_back(MakeBox(-t, depth, 0., width + t, depth + t, h));
  scene.boxes.push_back(MakeBox(-t, 0., 0., 0., depth, h));
  scene.boxes.push_back(MakeBox(width, 0., 0., width + t, depth, h));

  // Pillars and furniture in a band along the walls, clear of the center.
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0., 1.);
  const Eigen::Vector2d center(0.5 * width, 0.5 * depth);
  const double clear = 0.5 * std::min(width, depth) - 0.9;
  int placed = 0;
  for (int attempt = 0; attempt < 1000 && placed < 6; ++attempt) {
    const double sx = 0.3 + 0.4 * unit(rng);
    const double sy = 0.3 + 0.4 * unit(rng);
    const double x = 0.3 + (width - 0.6 - sx) * unit(rng);
    const double y = 0.3 + (depth - 0.6 - sy) * unit(rng);
    const Eigen::Vector2d mid(x + 0.5 * sx, y + 0.5 * sy);
    if ((mid - center).norm() < clear) continue;
    const double height = placed % 2 == 0 ? h : 0.8 + 1.2 * unit(rng);
    scene.boxes.push_back(MakeBox(x, y, 0., x + sx, y + sy, height));
    ++placed;
  }
  return scene;
}

Scene MakeCorridor(double length, double width, std::uint64_t seed) {
  Scene scene;
  const double h = scene.ceiling_z;
  const double t = kWallThickness;
  const double y = 0.5 * width;
  const double x0 = -2.;
  const double x1 = length + 2.;
  scene.boxes.push_back(MakeBox(x0 - t, -y - t, 0., x1 + t, -y, h));
  scene.boxes.push_back(MakeBox(x0 - t, y, 0., x1 + t, y + t, h));
  scene.boxes.push_back(MakeBox(x0 - t, -y, 0., x0, y, h));
  scene.boxes.push_back(MakeBox(x1, -y, 0., x1 + t, y, h));
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0., 1.);
  for (double x = x0 + 0.5; x < x1 - 1.; x += 0.8 + 1.2 * unit(rng)) {
    const double len = 0.3 + 0.6 * unit(rng);
    const double depth = 0.15 + 0.3 * unit(rng);
    const double height = 0.8 + 1.8 * unit(rng);
    if (unit(rng) < 0.5) {
      scene.boxes.push_back(MakeBox(x, -y, 0., x + len, -y + depth, height));
    } else {
      scene.boxes.push_back(MakeBox(x, y - depth, 0., x + len, y, height));
    }
  }
  return scene;
}

pointcloud::PointCloud3D SimulateScan(const Scene& scene,
                                      const transform::SE3Transform& sensor_pose,
                                      const LidarOptions& options,
                                      double timestamp,
                                      std::uint64_t noise_seed) {
  if (options.rings < 1 || options.azimuth_steps < 1) {
    throw ContractViolation("lidar needs at least one ring and one step");
  }
  pointcloud::PointCloud3D cloud;
  cloud.timestamp = timestamp;
  cloud.points.reserve(static_cast<std::size_t>(options.rings) *
                       options.azimuth_steps);
  std::mt19937_64 rng(noise_seed);
  std::normal_distribution<double> noise(0., 1.);
  const Eigen::Vector3d origin = sensor_pose.translation();
  for (int ring = 0; ring < options.rings; ++ring) {
    const double elevation =
        options.rings == 1
            ? 0.
            : options.min_elevation + ring *
                                          (options.max_elevation -
                                           options.min_elevation) /
                                          (options.rings - 1);
    const double ce = std::cos(elevation);
    const double se = std::sin(elevation);
    for (int step = 0; step < options.azimuth_steps; ++step) {
      const double azimuth =
          -kPi + (step + 0.5) * 2. * kPi / options.azimuth_steps;
      const Eigen::Vector3d local(ce * std::cos(azimuth), ce * std::sin(azimuth),
                                  se);
      double range = scene.Raycast(origin, sensor_pose.rotation() * local);
      if (!(range <= options.max_range)) continue;
      if (options.range_noise > 0.) range += options.range_noise * noise(rng);
      if (!(range > 0.)) continue;
      cloud.points.push_back(
          pointcloud::Point3{range * local, 1. / (1. + range)});
    }
  }
  return cloud;
}

std::vector<transform::SE3Transform> LoopTrajectory(double cx, double cy,
                                                    double radius, int frames) {
  std::vector<transform::SE3Transform> poses;
  for (int k = 0; k < frames; ++k) {
    const double phi = 2. * kPi * k / frames;
    poses.push_back(transform::SE3Transform::FromYaw(
        phi + 0.5 * kPi,
        Eigen::Vector3d(cx + radius * std::cos(phi), cy + radius * std::sin(phi),
                        kSensorHeight)));
  }
  return poses;
}

std::vector<transform::SE3Transform> LineTrajectory(double x0, double y0,
                                                    double step, int frames) {
  std::vector<transform::SE3Transform> poses;
  for (int k = 0; k < frames; ++k) {
    poses.push_back(transform::SE3Transform::FromTranslation(
        Eigen::Vector3d(x0 + k * step, y0, kSensorHeight)));
  }
  return poses;
}

void WriteSequence(const Scene& scene,
                   const std::vector<transform::SE3Transform>& poses,
                   const LidarOptions& options,
                   const std::filesystem::path& directory,
                   std::uint64_t noise_seed) {
  std::error_code error;
  std::filesystem::create_directories(directory, error);
  if (error) throw IoError("cannot create " + directory.string());
  for (std::size_t k = 0; k < poses.size(); ++k) {
    char name[32];
    std::snprintf(name, sizeof(name), "frame_%06zu.txt", k);
    pointcloud::WritePointCloud(
        SimulateScan(scene, poses[k], options, 0.1 * k, noise_seed + k),
        directory / name);
  }
}

}  // namespace synthetic
}  // namespace gridforge
