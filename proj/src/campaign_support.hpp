// Copyright 2026 The VertexLab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "vertexlab/campaigns.hpp"

namespace vertexlab::detail {

struct TrialOutcome {
  std::size_t count = 0;
  std::size_t bound = 0;
  bool boundary = false;
  std::size_t resampled = 0;
  bool parity_anomaly = false;
  bool hypothesis_failed = false;
  bool perturbed = false;
  std::optional<InstanceRecord> record;
};

// Runs fn(i) for i in [0, count) on `jobs` threads. Results are stored by
// index, so the output does not depend on scheduling.
template <typename Fn>
std::vector<TrialOutcome> run_trials(std::size_t count, std::size_t jobs, Fn fn) {
  std::vector<TrialOutcome> out(count);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        out[i] = fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    }
  };
  const std::size_t threads = std::max<std::size_t>(1, std::min(jobs, count));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

CampaignReport aggregate(const CampaignConfig& config, std::size_t bound,
                         std::vector<TrialOutcome> outcomes);

// Parity of the flattening count forced by the closing rule.
bool odd_flattening_parity(const LiftedPolygon& polygon);

}  // namespace vertexlab::detail
