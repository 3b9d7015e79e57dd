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

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "meshscramble/error.hpp"
#include "meshscramble/lane_engine.hpp"

namespace meshscramble {

using BigInt = boost::multiprecision::cpp_int;

/// Index permutation taking standard row-major order of the product
/// entries to the order in which the mesh produces them.
///
/// Storage is 0-based: image(p) is the row-major index of the label the
/// mesh places at flattened position p. one_based() gives the
/// conventional 1..n^2 form.
class ScramblingPermutation {
 public:
  static ScramblingPermutation from_arrangement(const OutputArrangement& arrangement);
  /// Validates that `images` is a permutation of 0..order^2-1.
  static ScramblingPermutation from_images(std::uint32_t order, std::vector<std::uint32_t> images);

  [[nodiscard]] std::uint32_t order() const noexcept { return order_; }
  [[nodiscard]] std::size_t size() const noexcept { return images_.size(); }
  [[nodiscard]] std::uint32_t image(std::size_t p) const { return images_.at(p); }
  [[nodiscard]] std::span<const std::uint32_t> images() const noexcept { return images_; }
  [[nodiscard]] std::vector<std::uint32_t> one_based() const;

  friend bool operator==(const ScramblingPermutation&, const ScramblingPermutation&) = default;

 private:
  ScramblingPermutation(std::uint32_t order, std::vector<std::uint32_t> images)
      : order_(order), images_(std::move(images)) {}

  std::uint32_t order_;
  std::vector<std::uint32_t> images_;
};

/// Cycles in canonical form: each starts at its smallest index, cycles are
/// sorted by that start, and consecutive members follow p -> image(p).
struct CycleDecomposition {
  std::uint32_t order = 0;
  std::vector<std::vector<std::uint32_t>> cycles;
  std::vector<std::uint64_t> lengths;
  std::uint64_t longest = 0;
  BigInt period = 1;
};

/// Label (i, j) of a 0-based row-major index at the given order.
Label label_of(std::uint32_t order, std::uint32_t flat_index);

/// Compact rendering: "(11) (12 22 31)" for order < 10, otherwise
/// "(1,1) (1,2 2,2 3,1)".
std::string format_cycle(std::uint32_t order, std::span<const std::uint32_t> cycle);
std::string format_cycles(const CycleDecomposition& decomposition);

CycleDecomposition cycles(const ScramblingPermutation& perm);

/// Cycle lengths in order of their smallest member.
std::vector<std::uint64_t> cycle_lengths(const ScramblingPermutation& perm);

std::uint64_t longest_cycle_length(std::uint32_t order);
BigInt period_lcm(std::uint32_t order);

/// longest_cycle_length for every order in [first, last], index 0 being
/// `first`. Orders are spread over `threads` workers (0 = default).
std::vector<std::uint64_t> longest_cycle_lengths(std::uint32_t first, std::uint32_t last,
                                                 unsigned threads = 0);
BigInt lcm_of(std::span<const std::uint64_t> lengths);

ScramblingPermutation scrambling_permutation(std::uint32_t order);

ScramblingPermutation inverse(const ScramblingPermutation& perm);

/// Gather indices of the k-th power: applying them once equals applying
/// `perm` k times. Each cycle is rotated by k mod its length.
std::vector<std::uint32_t> power_indices(const ScramblingPermutation& perm, const BigInt& k);

namespace detail {
[[noreturn]] void throw_length_mismatch(std::size_t expected, std::size_t actual);
}

/// out[q] = block[index[q]].
template <typename T>
std::vector<T> gather(std::span<const std::uint32_t> index, std::span<const T> block) {
  if (block.size() != index.size()) detail::throw_length_mismatch(index.size(), block.size());
  std::vector<T> out;
  out.reserve(block.size());
  for (std::uint32_t src : index) out.push_back(block[src]);
  return out;
}

/// Byte blocks go through the vectorised gather kernel.
template <>
std::vector<std::uint8_t> gather<std::uint8_t>(std::span<const std::uint32_t> index,
                                               std::span<const std::uint8_t> block);

/// Scramble: out(q) = block(pi(q)), i.e. read the mesh output row-major.
template <typename T>
std::vector<T> apply(const ScramblingPermutation& perm, std::span<const T> block) {
  return gather<T>(perm.images(), block);
}

template <typename T>
std::vector<T> power_apply(const ScramblingPermutation& perm, const BigInt& k, std::span<const T> block) {
  if (block.size() != perm.size()) detail::throw_length_mismatch(perm.size(), block.size());
  const std::vector<std::uint32_t> index = power_indices(perm, k);
  return gather<T>(index, block);
}

}  // namespace meshscramble
