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

#include <array>
#include <cstdint>
#include <span>

namespace meshscramble {

struct Table1Entry {
  std::uint32_t order;
  std::uint64_t longest_cycle;
};

/// Published longest cycle lengths for orders 2..100.
std::span<const Table1Entry> table1();

/// Exactly 99 entries with contiguous orders 2..100.
bool table1_well_formed(std::span<const Table1Entry> fixture);

/// Published prime counts per 100-order bucket, 1-100 through 901-1000.
inline constexpr std::array<std::uint32_t, 10> kPublishedPrimeBuckets{16, 15, 10, 11, 5, 3, 8, 5, 4, 12};

}  // namespace meshscramble
