/*
 * Copyright 2026 The meshscramble Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "meshscramble/table1.hpp"

namespace meshscramble {

struct CheckResult {
  std::string name;
  bool hard = true;  // soft checks are reported but never fail the run
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  std::span<const Table1Entry> fixture = table1();
  std::uint64_t seed = 0x6d657368u;
  std::uint32_t sequence_last = 1000;
  std::uint32_t product_trials = 50;
  std::uint32_t triple_trials = 20;
  unsigned threads = 0;
};

struct VerifyReport {
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  [[nodiscard]] bool hard_checks_passed() const;
};

/// Replays the published reference values and the simulator oracles.
/// Pure: nothing is written anywhere.
VerifyReport verify(const VerifyOptions& options = {});

}  // namespace meshscramble
