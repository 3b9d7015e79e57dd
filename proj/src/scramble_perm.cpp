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

#include "meshscramble/scramble_perm.hpp"

#include <algorithm>
#include <set>

#include "meshscramble/kernels.hpp"
#include "meshscramble/parallel.hpp"

namespace meshscramble {

namespace detail {
void throw_length_mismatch(std::size_t expected, std::size_t actual) {
  throw MeshError(ErrorCode::kLengthMismatch, "block has " + std::to_string(actual) +
                                                  " elements, permutation expects " +
                                                  std::to_string(expected));
}
}  // namespace detail

ScramblingPermutation ScramblingPermutation::from_arrangement(const OutputArrangement& arrangement) {
  if (!arrangement.is_bijective()) {
    throw MeshError(ErrorCode::kMalformedArrangement,
                    "arrangement of order " + std::to_string(arrangement.order()) +
                        " is not a bijection onto the label grid");
  }
  const std::uint32_t n = arrangement.order();
  std::vector<std::uint32_t> images;
  images.reserve(arrangement.flat().size());
  for (const Label& l : arrangement.flat()) images.push_back((l.i - 1) * n + (l.j - 1));
  return ScramblingPermutation(n, std::move(images));
}

ScramblingPermutation ScramblingPermutation::from_images(std::uint32_t order,
                                                         std::vector<std::uint32_t> images) {
  check_order(order);
  const std::size_t size = static_cast<std::size_t>(order) * order;
  if (images.size() != size) detail::throw_length_mismatch(size, images.size());
  std::vector<bool> seen(size, false);
  for (std::uint32_t v : images) {
    if (v >= size || seen[v]) {
      throw MeshError(ErrorCode::kMalformedArrangement, "image list is not a permutation");
    }
    seen[v] = true;
  }
  return ScramblingPermutation(order, std::move(images));
}

std::vector<std::uint32_t> ScramblingPermutation::one_based() const {
  std::vector<std::uint32_t> out(images_);
  for (auto& v : out) ++v;
  return out;
}

Label label_of(std::uint32_t order, std::uint32_t flat_index) {
  return Label{flat_index / order + 1, flat_index % order + 1};
}

std::string format_cycle(std::uint32_t order, std::span<const std::uint32_t> cycle) {
  std::string out = "(";
  for (std::size_t t = 0; t < cycle.size(); ++t) {
    if (t > 0) out += ' ';
    const Label l = label_of(order, cycle[t]);
    out += std::to_string(l.i);
    if (order >= 10) out += ',';
    out += std::to_string(l.j);
  }
  out += ')';
  return out;
}

std::string format_cycles(const CycleDecomposition& decomposition) {
  std::string out;
  for (const auto& cycle : decomposition.cycles) {
    if (!out.empty()) out += ' ';
    out += format_cycle(decomposition.order, cycle);
  }
  return out;
}

CycleDecomposition cycles(const ScramblingPermutation& perm) {
  CycleDecomposition result;
  result.order = perm.order();
  std::vector<bool> visited(perm.size(), false);
  // Scanning starts in increasing order, so each cycle begins at its
  // smallest member and the list comes out sorted.
  for (std::uint32_t start = 0; start < perm.size(); ++start) {
    if (visited[start]) continue;
    std::vector<std::uint32_t> cycle;
    for (std::uint32_t p = start; !visited[p]; p = perm.image(p)) {
      visited[p] = true;
      cycle.push_back(p);
    }
    result.lengths.push_back(cycle.size());
    result.longest = std::max<std::uint64_t>(result.longest, cycle.size());
    result.cycles.push_back(std::move(cycle));
  }
  result.period = lcm_of(result.lengths);
  return result;
}

std::vector<std::uint64_t> cycle_lengths(const ScramblingPermutation& perm) {
  // Visited marks live in the top bit of a scratch copy, so each step
  // touches one cache line instead of two. Indices stay below 2^27.
  constexpr std::uint32_t kVisited = 0x80000000u;
  std::vector<std::uint32_t> next(perm.images().begin(), perm.images().end());
  std::vector<std::uint64_t> lengths;
  for (std::uint32_t start = 0; start < next.size(); ++start) {
    if (next[start] & kVisited) continue;
    std::uint64_t len = 0;
    std::uint32_t p = start;
    while (!(next[p] & kVisited)) {
      const std::uint32_t q = next[p];
      next[p] = q | kVisited;
      p = q;
      ++len;
    }
    lengths.push_back(len);
  }
  return lengths;
}

ScramblingPermutation scrambling_permutation(std::uint32_t order) {
  return ScramblingPermutation::from_arrangement(arrangement(order));
}

std::uint64_t longest_cycle_length(std::uint32_t order) {
  const auto lengths = cycle_lengths(scrambling_permutation(order));
  return *std::max_element(lengths.begin(), lengths.end());
}

std::vector<std::uint64_t> longest_cycle_lengths(std::uint32_t first, std::uint32_t last,
                                                 unsigned threads) {
  if (first < 1 || first > last) {
    throw MeshError(ErrorCode::kInvalidRange,
                    "invalid order range " + std::to_string(first) + ".." + std::to_string(last));
  }
  check_order(last);
  std::vector<std::uint64_t> out(last - first + 1);
  // Largest orders first: they dominate the run time.
  const std::size_t count = out.size();
  parallel_for(count, threads, [&](std::size_t i) {
    const std::size_t slot = count - 1 - i;
    out[slot] = longest_cycle_length(first + static_cast<std::uint32_t>(slot));
  });
  return out;
}

BigInt lcm_of(std::span<const std::uint64_t> lengths) {
  const std::set<std::uint64_t> distinct(lengths.begin(), lengths.end());
  BigInt period = 1;
  for (std::uint64_t len : distinct) period = boost::multiprecision::lcm(period, BigInt(len));
  return period;
}

BigInt period_lcm(std::uint32_t order) {
  const auto lengths = cycle_lengths(scrambling_permutation(order));
  return lcm_of(lengths);
}

ScramblingPermutation inverse(const ScramblingPermutation& perm) {
  std::vector<std::uint32_t> inv(perm.size());
  for (std::uint32_t q = 0; q < perm.size(); ++q) inv[perm.image(q)] = q;
  return ScramblingPermutation::from_images(perm.order(), std::move(inv));
}

std::vector<std::uint32_t> power_indices(const ScramblingPermutation& perm, const BigInt& k) {
  if (k < 0) throw MeshError(ErrorCode::kInvalidRange, "power must be non-negative");
  std::vector<std::uint32_t> index(perm.size());
  std::vector<bool> visited(perm.size(), false);
  std::vector<std::uint32_t> cycle;
  for (std::uint32_t start = 0; start < perm.size(); ++start) {
    if (visited[start]) continue;
    cycle.clear();
    for (std::uint32_t p = start; !visited[p]; p = perm.image(p)) {
      visited[p] = true;
      cycle.push_back(p);
    }
    const std::size_t len = cycle.size();
    const auto shift = static_cast<std::size_t>(static_cast<std::uint64_t>(k % len));
    for (std::size_t t = 0; t < len; ++t) index[cycle[t]] = cycle[(t + shift) % len];
  }
  return index;
}

template <>
std::vector<std::uint8_t> gather<std::uint8_t>(std::span<const std::uint32_t> index,
                                               std::span<const std::uint8_t> block) {
  if (block.size() != index.size()) detail::throw_length_mismatch(index.size(), block.size());
  std::vector<std::uint8_t> out(block.size());
  kernels::gather_u8(block, index, out);
  return out;
}

}  // namespace meshscramble
