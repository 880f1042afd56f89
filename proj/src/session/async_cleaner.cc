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

#include "gridforge/session/async_cleaner.h"

#include <utility>

namespace gridforge {
namespace session {

AsyncCleaner::AsyncCleaner(cleaner::CleanerKind cleaner)
    : cleaner_(std::move(cleaner)), worker_([this] { Run(); }) {}

AsyncCleaner::~AsyncCleaner() {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    stop_ = true;
  }
  wake_.notify_all();
  worker_.join();
}

void AsyncCleaner::Submit(image::GridImage trinary_snapshot, int sequence) {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    if (pending_) ++superseded_;
    pending_ = CleanedMap{std::move(trinary_snapshot), sequence};
  }
  wake_.notify_one();
}

std::optional<CleanedMap> AsyncCleaner::Latest() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return latest_;
}

void AsyncCleaner::WaitIdle() {
  std::unique_lock<std::mutex> lock(mutex_);
  idle_.wait(lock, [this] { return !pending_ && !busy_; });
}

int AsyncCleaner::superseded() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return superseded_;
}

std::string AsyncCleaner::last_error() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return last_error_;
}

void AsyncCleaner::Run() {
  std::unique_lock<std::mutex> lock(mutex_);
  while (true) {
    wake_.wait(lock, [this] { return stop_ || pending_.has_value(); });
    if (stop_) return;
    CleanedMap job = std::move(*pending_);
    pending_.reset();
    busy_ = true;
    lock.unlock();

    std::optional<CleanedMap> result;
    std::string error;
    try {
      result = CleanedMap{cleaner::CleanTrinary(job.image, cleaner_),
                          job.sequence};
    } catch (const std::exception& e) {
      error = e.what();
    }

    lock.lock();
    busy_ = false;
    if (result && (!latest_ || latest_->sequence <= result->sequence)) {
      latest_ = std::move(result);
    }
    if (!error.empty()) last_error_ = error;
    if (!pending_) idle_.notify_all();
  }
}

}  // namespace session
}  // namespace gridforge
