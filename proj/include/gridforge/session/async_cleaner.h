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

#ifndef GRIDFORGE_SESSION_ASYNC_CLEANER_H_
#define GRIDFORGE_SESSION_ASYNC_CLEANER_H_

#include <condition_variable>
#include <mutex>
#include <optional>
#include <string>
#include <thread>

#include "gridforge/cleaner/cleaner.h"
#include "gridforge/image/grid_image.h"

namespace gridforge {
namespace session {

// A cleaned map and the frame count of the snapshot it was made from.
struct CleanedMap {
  image::GridImage image;
  int sequence = 0;
};

// Cleans trinary snapshots on a worker thread. At most one clean runs at a
// time and at most one waits; a newer submission replaces the waiting one.
// Results are published only if newer than the current one.
class AsyncCleaner {
 public:
  explicit AsyncCleaner(cleaner::CleanerKind cleaner);
  ~AsyncCleaner();

  AsyncCleaner(const AsyncCleaner&) = delete;
  AsyncCleaner& operator=(const AsyncCleaner&) = delete;

  // Never blocks on a running clean.
  void Submit(image::GridImage trinary_snapshot, int sequence);

  std::optional<CleanedMap> Latest() const;

  // Blocks until nothing is queued or running.
  void WaitIdle();

  // Number of submissions dropped because a newer one replaced them.
  int superseded() const;
  // Message of the most recent failed clean, empty if none.
  std::string last_error() const;

 private:
  void Run();

  const cleaner::CleanerKind cleaner_;
  mutable std::mutex mutex_;
  std::condition_variable wake_;
  std::condition_variable idle_;
  std::optional<CleanedMap> pending_;
  std::optional<CleanedMap> latest_;
  bool busy_ = false;
  bool stop_ = false;
  int superseded_ = 0;
  std::string last_error_;
  std::thread worker_;
};

}  // namespace session
}  // namespace gridforge

#endif  // GRIDFORGE_SESSION_ASYNC_CLEANER_H_
