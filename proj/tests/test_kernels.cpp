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

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "meshscramble/kernels.hpp"
#include "oracles.hpp"

using namespace meshscramble;
using kernels::Isa;

namespace {

std::vector<Isa> available_isas() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::kScalar, Isa::kAvx2, Isa::kNeon}) {
    if (kernels::available(isa)) out.push_back(isa);
  }
  return out;
}

std::vector<std::int8_t> random_i8(std::mt19937_64& rng, std::size_t count, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  std::vector<std::int8_t> out(count);
  for (auto& v : out) v = static_cast<std::int8_t>(dist(rng));
  return out;
}

}  // namespace

TEST(Kernels, ScalarAlwaysAvailable) {
  EXPECT_TRUE(kernels::available(Isa::kScalar));
  EXPECT_EQ(kernels::table(Isa::kScalar).isa, Isa::kScalar);
  EXPECT_TRUE(kernels::available(kernels::active().isa));
}

TEST(Kernels, UnavailableIsaThrows) {
  for (Isa isa : {Isa::kAvx2, Isa::kNeon}) {
    if (!kernels::available(isa)) EXPECT_THROW((void)kernels::table(isa), std::invalid_argument);
  }
}

TEST(Kernels, DotMatchesScalarForEveryIsa) {
  std::mt19937_64 rng(1);
  const auto& reference = kernels::table(Isa::kScalar);
  for (Isa isa : available_isas()) {
    const auto& k = kernels::table(isa);
    for (std::size_t len : {0u, 1u, 15u, 16u, 31u, 32u, 33u, 63u, 64u, 999u, 4096u, 100003u}) {
      const auto a = random_i8(rng, len, -128, 127);
      const auto b = random_i8(rng, len, -128, 127);
      ASSERT_EQ(k.dot_i8(a.data(), b.data(), len), reference.dot_i8(a.data(), b.data(), len))
          << kernels::to_string(isa) << " length " << len;
    }
  }
}

TEST(Kernels, DotSurvivesAccumulatorFlushes) {
  // Long runs of the extreme product exercise the partial-sum flushing.
  const std::size_t len = (std::size_t{1} << 20) + 7;
  const std::vector<std::int8_t> a(len, -128);
  const std::int64_t expected = static_cast<std::int64_t>(len) * 16384;
  for (Isa isa : available_isas()) {
    EXPECT_EQ(kernels::table(isa).dot_i8(a.data(), a.data(), len), expected) << kernels::to_string(isa);
  }
}

TEST(Kernels, GatherMatchesScalarForEveryIsa) {
  std::mt19937_64 rng(2);
  for (Isa isa : available_isas()) {
    const auto& k = kernels::table(isa);
    for (std::size_t src_len : {1u, 2u, 3u, 4u, 5u, 9u, 16u, 17u, 64u, 1000u}) {
      const auto src = oracle::random_bytes(rng, src_len);
      for (std::size_t count : {0u, 1u, 7u, 8u, 9u, 24u, 257u}) {
        std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(src_len - 1));
        std::vector<std::uint32_t> index(count);
        for (auto& i : index) i = pick(rng);
        // Force the tail indices that would over-read with a 4-byte gather.
        if (count > 0) index.back() = static_cast<std::uint32_t>(src_len - 1);
        std::vector<std::uint8_t> got(count, 0xAA);
        std::vector<std::uint8_t> want(count);
        k.gather_u8(src.data(), src.size(), index.data(), got.data(), count);
        for (std::size_t q = 0; q < count; ++q) want[q] = src[index[q]];
        ASSERT_EQ(got, want) << kernels::to_string(isa) << " src " << src_len << " count " << count;
      }
    }
  }
}

TEST(Kernels, SpanWrappersCheckLengths) {
  const std::vector<std::int8_t> a(4, 1);
  const std::vector<std::int8_t> b(5, 1);
  EXPECT_THROW((void)kernels::dot_i8(a, b), std::exception);
  EXPECT_EQ(kernels::dot_i8(a, a), 4);

  const std::vector<std::uint8_t> src{1, 2, 3};
  const std::vector<std::uint32_t> index{2, 0};
  std::vector<std::uint8_t> out(3);
  EXPECT_THROW(kernels::gather_u8(src, index, out), std::exception);
  out.resize(2);
  kernels::gather_u8(src, index, out);
  EXPECT_EQ(out, (std::vector<std::uint8_t>{3, 1}));
}
