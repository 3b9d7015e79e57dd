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

#include "meshscramble/verify.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "meshscramble/lane_engine.hpp"
#include "meshscramble/mesh_sim.hpp"
#include "meshscramble/randomness.hpp"
#include "meshscramble/scramble_perm.hpp"

namespace meshscramble {

namespace {

IntMatrix random_matrix(std::uint32_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> dist(-9, 9);
  IntMatrix m(n);
  for (std::uint32_t i = 1; i <= n; ++i) {
    for (std::uint32_t j = 1; j <= n; ++j) m(i, j) = dist(rng);
  }
  return m;
}

CheckResult check_table1(std::span<const Table1Entry> fixture,
                         std::span<const std::uint64_t> lengths_from_2) {
  CheckResult check{"table1.longest_cycles", true, false, {}};
  if (!table1_well_formed(fixture)) {
    check.detail = "fixture is not 99 contiguous entries for orders 2..100";
    return check;
  }
  std::ostringstream mismatches;
  std::size_t matched = 0;
  for (const Table1Entry& e : fixture) {
    const std::uint64_t computed = lengths_from_2[e.order - 2];
    if (computed == e.longest_cycle) {
      ++matched;
    } else {
      mismatches << " order " << e.order << ": expected " << e.longest_cycle << ", computed " << computed << ";";
    }
  }
  check.passed = matched == fixture.size();
  check.detail = std::to_string(matched) + "/" + std::to_string(fixture.size()) + " orders match";
  if (!check.passed) check.detail += ";" + mismatches.str();
  return check;
}

std::vector<CheckResult> check_order4() {
  std::vector<CheckResult> out;
  const std::vector<Label> expected_grid{{1, 1}, {2, 2}, {3, 3}, {4, 4}, {1, 2}, {3, 1}, {2, 4}, {4, 3},
                                         {3, 2}, {1, 4}, {4, 1}, {2, 3}, {3, 4}, {4, 2}, {1, 3}, {2, 1}};
  const OutputArrangement grid = arrangement(4);
  const bool grid_ok = std::equal(grid.flat().begin(), grid.flat().end(), expected_grid.begin(), expected_grid.end());
  out.push_back({"order4.arrangement", true, grid_ok, grid_ok ? "grid matches" : "grid differs"});

  const CycleDecomposition decomposition = cycles(ScramblingPermutation::from_arrangement(grid));
  std::set<std::string> got;
  for (const auto& c : decomposition.cycles) got.insert(format_cycle(4, c));
  const std::set<std::string> want{"(11)", "(42)", "(12 22 31 32 14 44 21)", "(13 33 41 34 23 24 43)"};
  std::vector<std::uint64_t> lengths = decomposition.lengths;
  std::sort(lengths.begin(), lengths.end());
  const bool cycles_ok = got == want && lengths == std::vector<std::uint64_t>{1, 1, 7, 7} &&
                         decomposition.longest == 7 && decomposition.period == 7;
  out.push_back({"order4.cycles", true, cycles_ok, format_cycles(decomposition)});
  return out;
}

}  // namespace

bool VerifyReport::hard_checks_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.hard || c.passed; });
}

VerifyReport verify(const VerifyOptions& options) {
  VerifyReport report;
  report.seed = options.seed;

  const std::uint32_t last = std::max<std::uint32_t>(options.sequence_last, 100);
  const std::vector<std::uint64_t> lengths = longest_cycle_lengths(2, last, options.threads);

  report.checks.push_back(check_table1(options.fixture, lengths));
  for (auto& c : check_order4()) report.checks.push_back(std::move(c));

  const PrimeBuckets buckets = prime_buckets_from_lengths(2, lengths, 100);
  report.checks.push_back({"primes.bucket_1_100", true, buckets.buckets.at(0).prime_count == 16,
                           "count " + std::to_string(buckets.buckets.at(0).prime_count) + ", expected 16"});
  for (std::size_t m = 1; m < buckets.buckets.size() && m < kPublishedPrimeBuckets.size(); ++m) {
    const PrimeBucket& b = buckets.buckets[m];
    const bool same = b.prime_count == kPublishedPrimeBuckets[m];
    report.checks.push_back({"primes.bucket_" + std::to_string(b.range_first) + "_" + std::to_string(b.range_last),
                             false, same,
                             "count " + std::to_string(b.prime_count) + ", published " +
                                 std::to_string(kPublishedPrimeBuckets[m])});
  }

  const PolarSequence seq = polar(parity_bits_from_lengths(2, lengths, ParityMapping::kEvenIsOne));
  const double c0 = autocorrelation(seq, 0);
  report.checks.push_back({"autocorr.c0", true, c0 == 1.0,
                           "C(0) = " + std::to_string(c0) + " over L = " + std::to_string(seq.values.size())});

  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::uint32_t> pick_order(1, 8);
  std::uint32_t product_ok = 0;
  for (std::uint32_t trial = 0; trial < options.product_trials; ++trial) {
    const std::uint32_t n = pick_order(rng);
    const IntMatrix a = random_matrix(n, rng);
    const IntMatrix b = random_matrix(n, rng);
    const auto sim = simulate_product(a, b);
    if (sim.c == direct_product(a, b) && sim.completion_time == 2 * n - 1) ++product_ok;
  }
  report.checks.push_back({"sim.product", true, product_ok == options.product_trials,
                           std::to_string(product_ok) + "/" + std::to_string(options.product_trials) +
                               " random products match"});

  std::uniform_int_distribution<std::uint32_t> pick_triple(1, 6);
  std::uint32_t triple_ok = 0;
  for (std::uint32_t trial = 0; trial < options.triple_trials; ++trial) {
    const std::uint32_t n = pick_triple(rng);
    const IntMatrix a = random_matrix(n, rng);
    const IntMatrix x = random_matrix(n, rng);
    const IntMatrix b = random_matrix(n, rng);
    const auto sim = simulate_triple(a, x, b);
    const IntMatrix z = direct_product(x, b);
    if (sim.z == z && sim.y == direct_product(a, z) && sim.milestones.z_row1 == n &&
        sim.milestones.y_row1_partials == 2 * n && sim.milestones.all <= 4 * n) {
      ++triple_ok;
    }
  }
  report.checks.push_back({"sim.triple", true, triple_ok == options.triple_trials,
                           std::to_string(triple_ok) + "/" + std::to_string(options.triple_trials) +
                               " random triple products match"});
  return report;
}

}  // namespace meshscramble
