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

#include <cmath>
#include <random>
#include <set>

#include "meshscramble/error.hpp"
#include "meshscramble/primality.hpp"
#include "meshscramble/randomness.hpp"
#include "meshscramble/table1.hpp"
#include "oracles.hpp"

using namespace meshscramble;

namespace {

PolarSequence from_values(std::vector<int> values) {
  PolarSequence seq;
  for (int v : values) seq.values.push_back(static_cast<std::int8_t>(v));
  return seq;
}

std::vector<int> random_polar(std::mt19937_64& rng, std::size_t len) {
  std::vector<int> out(len);
  for (auto& v : out) v = (rng() & 1) ? 1 : -1;
  return out;
}

}  // namespace

TEST(ParityBits, FirstOrders) {
  const ParitySequence even = parity_bits(2, 5, ParityMapping::kEvenIsOne);
  EXPECT_EQ(even.bits, (std::vector<std::uint8_t>{0, 0, 0, 1}));
  EXPECT_EQ(even.first_order, 2u);
  EXPECT_EQ(even.last_order(), 5u);

  EXPECT_EQ(parity_bits(2, 2, ParityMapping::kOddIsOne).bits, (std::vector<std::uint8_t>{1}));
}

TEST(ParityBits, MappingsAreComplements) {
  const auto even = parity_bits(2, 150, ParityMapping::kEvenIsOne);
  const auto odd = parity_bits(2, 150, ParityMapping::kOddIsOne);
  ASSERT_EQ(even.bits.size(), 149u);
  for (std::size_t t = 0; t < even.bits.size(); ++t) EXPECT_EQ(even.bits[t] ^ odd.bits[t], 1);
}

TEST(ParityBits, AgreeWithPublishedParities) {
  const auto bits = parity_bits(2, 100, ParityMapping::kEvenIsOne);
  for (const Table1Entry& e : table1()) {
    EXPECT_EQ(bits.bits[e.order - 2], e.longest_cycle % 2 == 0 ? 1 : 0) << "order " << e.order;
  }
}

TEST(ParityBits, InvalidRange) {
  EXPECT_THROW((void)parity_bits(1, 5, ParityMapping::kEvenIsOne), MeshError);
  EXPECT_THROW((void)parity_bits(6, 5, ParityMapping::kEvenIsOne), MeshError);
  EXPECT_THROW((void)parity_bits_from_lengths(2, {}, ParityMapping::kEvenIsOne), MeshError);
}

TEST(Polar, Conversion) {
  ParitySequence bits;
  bits.bits = {0, 1};
  EXPECT_EQ(polar(bits).values, (std::vector<std::int8_t>{-1, 1}));
  bits.bits = {1, 1, 1};
  EXPECT_EQ(polar(bits).values, (std::vector<std::int8_t>{1, 1, 1}));
  EXPECT_EQ(polar(parity_bits(2, 5, ParityMapping::kEvenIsOne)).values, (std::vector<std::int8_t>{-1, -1, -1, 1}));
  bits.bits.clear();
  EXPECT_THROW((void)polar(bits), MeshError);
}

TEST(Autocorrelation, ZeroLagIsExactlyOne) {
  std::mt19937_64 rng(3);
  for (std::size_t len : {1u, 2u, 50u, 999u}) {
    EXPECT_EQ(autocorrelation(from_values(random_polar(rng, len)), 0), 1.0);
  }
}

TEST(Autocorrelation, AlternatingSequence) {
  EXPECT_DOUBLE_EQ(autocorrelation(from_values({-1, 1, -1, 1}), 1), -0.75);
}

TEST(Autocorrelation, ConstantSequenceClosedForm) {
  const auto seq = from_values(std::vector<int>(10, 1));
  for (std::size_t k = 1; k <= 3; ++k) EXPECT_DOUBLE_EQ(autocorrelation(seq, k), (10.0 - k) / 10.0);
}

TEST(Autocorrelation, NormalisesByFullLength) {
  const auto seq = from_values(std::vector<int>(999, 1));
  EXPECT_EQ(autocorrelation(seq, 1), 998.0 / 999.0);
}

TEST(Autocorrelation, LagOutOfRange) {
  const auto seq = from_values({1, -1, 1});
  EXPECT_THROW((void)autocorrelation(seq, 3), MeshError);
  EXPECT_THROW((void)autocorrelation(PolarSequence{}, 0), MeshError);
}

TEST(Autocorrelation, MatchesBruteForceOracle) {
  std::mt19937_64 rng(64);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t len = 1 + rng() % 64;
    const auto values = random_polar(rng, len);
    const auto seq = from_values(values);
    for (std::size_t k = 0; k < len; ++k) {
      const double got = autocorrelation(seq, k);
      ASSERT_NEAR(got, oracle::autocorrelation_brute(values, k), 1e-12);
      ASSERT_LE(std::abs(got), static_cast<double>(len - k) / static_cast<double>(len) + 1e-15);
    }
  }
}

TEST(AutocorrelationSeries, Rows) {
  const auto seq = from_values({1, 1, -1, 1, -1});
  const auto single = autocorrelation_series(seq, 0);
  ASSERT_EQ(single.size(), 1u);
  EXPECT_EQ(single[0].first, 0u);
  EXPECT_EQ(single[0].second, 1.0);

  const auto all = autocorrelation_series(seq, 4);
  ASSERT_EQ(all.size(), 5u);
  for (std::size_t k = 0; k <= 4; ++k) EXPECT_EQ(all[k].second, autocorrelation(seq, k));
  EXPECT_THROW((void)autocorrelation_series(seq, 5), MeshError);
}

TEST(IsPrime, Examples) {
  EXPECT_FALSE(is_prime(7984));
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(2521));
  EXPECT_FALSE(is_prime(3383));
  EXPECT_FALSE(is_prime(0));
  EXPECT_FALSE(is_prime(1));
}

TEST(IsPrime, HardSixtyFourBitCases) {
  EXPECT_TRUE(is_prime(18446744073709551557ull));  // largest prime below 2^64
  EXPECT_FALSE(is_prime(18446744073709551615ull));
  EXPECT_FALSE(is_prime(561));                   // Carmichael
  EXPECT_FALSE(is_prime(3215031751ull));         // strong pseudoprime to bases 2, 3, 5, 7
  EXPECT_FALSE(is_prime(3825123056546413051ull));  // strong pseudoprime to bases 2..23
  EXPECT_TRUE(is_prime(4294967291ull));
  EXPECT_FALSE(is_prime(4294967297ull));  // 641 * 6700417
}

TEST(IsPrime, AgreesWithTrialDivisionUpToOneMillion) {
  for (std::uint64_t v = 0; v <= 1000000; ++v) {
    ASSERT_EQ(is_prime(v), oracle::is_prime_trial_division(v)) << v;
  }
}

TEST(PrimeBuckets, FirstHundredOrders) {
  const PrimeBuckets b = prime_buckets(2, 100, 100);
  ASSERT_EQ(b.buckets.size(), 1u);
  EXPECT_EQ(b.buckets[0].range_first, 1u);
  EXPECT_EQ(b.buckets[0].range_last, 100u);
  EXPECT_EQ(b.buckets[0].orders_considered, 99u);
  EXPECT_EQ(b.buckets[0].prime_count, 16u);
  EXPECT_EQ(b.buckets[0].prime_orders, 17u);
}

TEST(PrimeBuckets, MatchesTrialDivisionOnPublishedTable) {
  std::uint32_t orders = 0;
  std::set<std::uint64_t> values;
  for (const Table1Entry& e : table1()) {
    if (oracle::is_prime_trial_division(e.longest_cycle)) {
      ++orders;
      values.insert(e.longest_cycle);
    }
  }
  EXPECT_EQ(orders, 17u);
  EXPECT_EQ(values.size(), 16u);
}

TEST(PrimeBuckets, OrdersTwoToTen) {
  const PrimeBuckets b = prime_buckets(2, 10, 100);
  ASSERT_EQ(b.buckets.size(), 1u);
  EXPECT_EQ(b.buckets[0].prime_orders, 7u);  // 3, 7, 7, 23, 19, 79, 31
  EXPECT_EQ(b.buckets[0].prime_count, 6u);
}

TEST(PrimeBuckets, EmptyIntersectionCountsZero) {
  const PrimeBuckets b = prime_buckets(150, 160, 100);
  ASSERT_EQ(b.buckets.size(), 2u);
  EXPECT_EQ(b.buckets[0].orders_considered, 0u);
  EXPECT_EQ(b.buckets[0].prime_count, 0u);
  EXPECT_EQ(b.buckets[1].orders_considered, 11u);
  EXPECT_LE(b.buckets[1].prime_orders, b.buckets[1].orders_considered);
}

TEST(PrimeBuckets, SmallBuckets) {
  const PrimeBuckets b = prime_buckets(2, 10, 3);
  ASSERT_EQ(b.buckets.size(), 4u);
  // Orders 2,3 | 4,5,6 | 7,8,9 | 10 with cycles 3,7 | 7,20,23 | 19,27,79 | 31.
  EXPECT_EQ(b.buckets[0].prime_count, 2u);
  EXPECT_EQ(b.buckets[1].prime_count, 2u);
  EXPECT_EQ(b.buckets[2].prime_count, 2u);
  EXPECT_EQ(b.buckets[3].prime_count, 1u);
}

TEST(PrimeBuckets, Errors) {
  EXPECT_THROW((void)prime_buckets(2, 10, 0), MeshError);
  EXPECT_THROW((void)prime_buckets(10, 2, 100), MeshError);
}
