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

// Writes synthetic LiDAR frame sequences for replay through `gridforge slam`.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "gridforge/synthetic/scene.h"

int main(int argc, char** argv) {
  using namespace gridforge::synthetic;
  CLI::App app{"gridforge_synth: synthetic LiDAR sequences"};
  std::string scene_name = "room";
  std::string out_dir;
  int frames = 60;
  double radius = 2.0;
  double step = 0.2;
  std::uint64_t seed = 7;
  LidarOptions lidar;
  app.add_option("--scene", scene_name, "room or corridor")
      ->check(CLI::IsMember({"room", "corridor"}))
      ->capture_default_str();
  app.add_option("-o,--out", out_dir, "Output directory")->required();
  app.add_option("-n,--frames", frames, "Frame count")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--radius", radius, "Loop radius in the room (m)")
      ->capture_default_str();
  app.add_option("--step", step, "Step along the corridor (m)")
      ->capture_default_str();
  app.add_option("--seed", seed, "Scene and noise seed")->capture_default_str();
  app.add_option("--azimuth-steps", lidar.azimuth_steps, "Beams per ring")
      ->capture_default_str();
  app.add_option("--rings", lidar.rings, "Laser rings")->capture_default_str();
  app.add_option("--range-noise", lidar.range_noise, "Range noise sigma (m)")
      ->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  try {
    if (scene_name == "room") {
      const Scene scene = MakeRoom(12., 10., seed);
      WriteSequence(scene, LoopTrajectory(6., 5., radius, frames), lidar,
                    out_dir, seed);
    } else {
      const Scene scene = MakeCorridor(step * frames + 10., 3., seed);
      WriteSequence(scene, LineTrajectory(0., 0., step, frames), lidar, out_dir,
                    seed);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
