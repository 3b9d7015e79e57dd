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

#include "meshscramble/randomness.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "meshscramble/error.hpp"
#include "meshscramble/kernels.hpp"
#include "meshscramble/primality.hpp"
#include "meshscramble/scramble_perm.hpp"

namespace meshscramble {

namespace {

void check_sequence_range(std::uint32_t first, std::uint32_t last) {
  if (first < 2 || first > last) {
    throw MeshError(ErrorCode::kInvalidRange, "order range must satisfy 2 <= first <= last, got " +
                                                  std::to_string(first) + ".." + std::to_string(last));
  }
}

}  // namespace

ParitySequence parity_bits(std::uint32_t first, std::uint32_t last, ParityMapping mapping,
                           unsigned threads) {
  check_sequence_range(first, last);
  const auto lengths = longest_cycle_lengths(first, last, threads);
  return parity_bits_from_lengths(first, lengths, mapping);
}

ParitySequence parity_bits_from_lengths(std::uint32_t first, std::span<const std::uint64_t> lengths,
                                        ParityMapping mapping) {
  if (lengths.empty()) throw MeshError(ErrorCode::kInvalidRange, "empty order range");
  check_sequence_range(first, first + static_cast<std::uint32_t>(lengths.size()) - 1);
  ParitySequence seq;
  seq.first_order = first;
  seq.mapping = mapping;
  seq.bits.reserve(lengths.size());
  const std::uint8_t even_bit = mapping == ParityMapping::kEvenIsOne ? 1 : 0;
  for (std::uint64_t len : lengths) {
    seq.bits.push_back(len % 2 == 0 ? even_bit : static_cast<std::uint8_t>(1 - even_bit));
  }
  return seq;
}

PolarSequence polar(const ParitySequence& sequence) {
  if (sequence.bits.empty()) throw MeshError(ErrorCode::kInvalidRange, "empty parity sequence");
  PolarSequence out;
  out.values.reserve(sequence.bits.size());
  for (std::uint8_t bit : sequence.bits) out.values.push_back(bit ? 1 : -1);
  return out;
}

double autocorrelation(const PolarSequence& sequence, std::size_t k) {
  const std::size_t length = sequence.values.size();
  if (length == 0 || k >= length) {
    throw MeshError(ErrorCode::kInvalidRange, "lag " + std::to_string(k) + " out of range for length " +
                                                  std::to_string(length));
  }
  const std::span<const std::int8_t> a(sequence.values);
  const std::int64_t sum = kernels::dot_i8(a.first(length - k), a.subspan(k));
  return static_cast<double>(sum) / static_cast<double>(length);
}

std::vector<std::pair<std::size_t, double>> autocorrelation_series(const PolarSequence& sequence,
                                                                   std::size_t max_k) {
  if (max_k >= sequence.values.size()) {
    throw MeshError(ErrorCode::kInvalidRange, "max lag " + std::to_string(max_k) +
                                                  " out of range for length " +
                                                  std::to_string(sequence.values.size()));
  }
  std::vector<std::pair<std::size_t, double>> series;
  series.reserve(max_k + 1);
  for (std::size_t k = 0; k <= max_k; ++k) series.emplace_back(k, autocorrelation(sequence, k));
  return series;
}

PrimeBuckets prime_buckets(std::uint32_t first, std::uint32_t last, std::uint32_t bucket_size,
                           unsigned threads) {
  if (bucket_size == 0) throw MeshError(ErrorCode::kInvalidRange, "bucket size must be positive");
  const auto lengths = longest_cycle_lengths(first, last, threads);
  return prime_buckets_from_lengths(first, lengths, bucket_size);
}

PrimeBuckets prime_buckets_from_lengths(std::uint32_t first, std::span<const std::uint64_t> lengths,
                                        std::uint32_t bucket_size) {
  if (bucket_size == 0) throw MeshError(ErrorCode::kInvalidRange, "bucket size must be positive");
  if (first < 1 || lengths.empty()) throw MeshError(ErrorCode::kInvalidRange, "empty order range");
  const std::uint32_t last = first + static_cast<std::uint32_t>(lengths.size()) - 1;
  PrimeBuckets result;
  result.bucket_size = bucket_size;
  const std::uint32_t bucket_count = (last - 1) / bucket_size + 1;
  for (std::uint32_t m = 0; m < bucket_count; ++m) {
    PrimeBucket bucket;
    bucket.range_first = m * bucket_size + 1;
    bucket.range_last = (m + 1) * bucket_size;
    std::set<std::uint64_t> primes;
    for (std::uint32_t n = std::max(bucket.range_first, first); n <= std::min(bucket.range_last, last); ++n) {
      ++bucket.orders_considered;
      if (is_prime(lengths[n - first])) {
        ++bucket.prime_orders;
        primes.insert(lengths[n - first]);
      }
    }
    bucket.prime_count = static_cast<std::uint32_t>(primes.size());
    result.buckets.push_back(bucket);
  }
  return result;
}

}  // namespace meshscramble
