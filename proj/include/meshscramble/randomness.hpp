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
#include <utility>
#include <vector>

namespace meshscramble {

enum class ParityMapping : std::uint8_t { kEvenIsOne, kOddIsOne };

/// One bit per order, from the parity of that order's longest cycle.
struct ParitySequence {
  std::uint32_t first_order = 2;
  std::vector<std::uint8_t> bits;
  ParityMapping mapping = ParityMapping::kEvenIsOne;

  [[nodiscard]] std::uint32_t last_order() const noexcept {
    return first_order + static_cast<std::uint32_t>(bits.size()) - 1;
  }
};

/// Bits mapped 0 -> -1, 1 -> +1.
struct PolarSequence {
  std::vector<std::int8_t> values;
};

struct PrimeBucket {
  std::uint32_t range_first = 0;
  std::uint32_t range_last = 0;
  /// Orders of the range that lie inside the requested order interval.
  std::uint32_t orders_considered = 0;
  /// Distinct prime values among those orders' longest cycles.
  std::uint32_t prime_count = 0;
  /// Orders whose longest cycle is prime (repeated values counted again).
  std::uint32_t prime_orders = 0;
};

struct PrimeBuckets {
  std::uint32_t bucket_size = 100;
  std::vector<PrimeBucket> buckets;
};

ParitySequence parity_bits(std::uint32_t first, std::uint32_t last, ParityMapping mapping,
                           unsigned threads = 0);

/// Same as parity_bits, from already computed longest-cycle lengths
/// (lengths[0] belongs to order `first`).
ParitySequence parity_bits_from_lengths(std::uint32_t first, std::span<const std::uint64_t> lengths,
                                        ParityMapping mapping);

PolarSequence polar(const ParitySequence& sequence);

/// C(k) = (1/L) * sum_{i=1}^{L-k} A(i) A(i+k). Terms past the end are
/// absent (no wrap-around).
double autocorrelation(const PolarSequence& sequence, std::size_t k);

std::vector<std::pair<std::size_t, double>> autocorrelation_series(const PolarSequence& sequence,
                                                                   std::size_t max_k);

/// Buckets [m*size + 1, (m+1)*size] from the first bucket up to the one
/// holding `last`; only orders inside [first, last] are counted.
PrimeBuckets prime_buckets(std::uint32_t first, std::uint32_t last, std::uint32_t bucket_size,
                           unsigned threads = 0);

PrimeBuckets prime_buckets_from_lengths(std::uint32_t first, std::span<const std::uint64_t> lengths,
                                        std::uint32_t bucket_size);

}  // namespace meshscramble
