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

#include <map>
#include <random>
#include <sstream>

#include "meshscramble/error.hpp"
#include "meshscramble/mesh_sim.hpp"

using namespace meshscramble;

namespace {

IntMatrix random_int(std::mt19937_64& rng, std::uint32_t n, std::int64_t bound = 50) {
  std::uniform_int_distribution<std::int64_t> dist(-bound, bound);
  IntMatrix m(n);
  for (std::uint32_t i = 1; i <= n; ++i) {
    for (std::uint32_t j = 1; j <= n; ++j) m(i, j) = dist(rng);
  }
  return m;
}

RealMatrix random_real(std::mt19937_64& rng, std::uint32_t n) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  RealMatrix m(n);
  for (std::uint32_t i = 1; i <= n; ++i) {
    for (std::uint32_t j = 1; j <= n; ++j) m(i, j) = dist(rng);
  }
  return m;
}

IntMatrix from_rows(std::vector<std::vector<std::int64_t>> rows) {
  IntMatrix m(static_cast<std::uint32_t>(rows.size()));
  for (std::uint32_t i = 1; i <= m.order(); ++i) {
    for (std::uint32_t j = 1; j <= m.order(); ++j) m(i, j) = rows[i - 1][j - 1];
  }
  return m;
}

void expect_per_node_times_increase(const SimTrace& trace) {
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> last;
  for (const TraceEvent& e : trace.events) {
    ASSERT_GE(e.t, 1u);
    const auto key = std::make_pair(e.row, e.col);
    auto it = last.find(key);
    if (it != last.end()) ASSERT_LT(it->second, e.t) << "node (" << e.row << "," << e.col << ")";
    last[key] = e.t;
  }
}

}  // namespace

TEST(DirectProduct, Examples) {
  const IntMatrix m = from_rows({{1, 2}, {3, 4}});
  EXPECT_EQ(direct_product(IntMatrix::identity(2), m), m);
  EXPECT_EQ(direct_product(from_rows({{6}}), from_rows({{7}})), from_rows({{42}}));
  EXPECT_EQ(direct_product(m, from_rows({{5, 6}, {7, 8}})), from_rows({{19, 22}, {43, 50}}));
  EXPECT_THROW((void)direct_product(m, IntMatrix::identity(3)), MeshError);
}

TEST(SimulateProduct, CompletesInTwoNMinusOneSteps) {
  std::mt19937_64 rng(4);
  const auto result = simulate_product(random_int(rng, 4), random_int(rng, 4));
  EXPECT_EQ(result.completion_time, 7u);
}

TEST(SimulateProduct, IdentityAndRowOneTiming) {
  const std::uint32_t n = 5;
  const auto result = simulate_product(IntMatrix::identity(n), IntMatrix::identity(n));
  EXPECT_EQ(result.c, IntMatrix::identity(n));
  for (std::uint32_t c = 1; c <= n; ++c) EXPECT_EQ(result.trace.completion_at(c, c), n);
}

TEST(SimulateProduct, MatchesDirectProductUpTo32) {
  std::mt19937_64 rng(32);
  for (std::uint32_t n = 1; n <= 32; ++n) {
    const IntMatrix a = random_int(rng, n);
    const IntMatrix b = random_int(rng, n);
    const auto result = simulate_product(a, b);
    ASSERT_EQ(result.c, direct_product(a, b)) << "order " << n;
    ASSERT_EQ(result.completion_time, 2 * n - 1);
  }
}

TEST(SimulateProduct, TraceShape) {
  std::mt19937_64 rng(6);
  const std::uint32_t n = 6;
  const auto result = simulate_product(random_int(rng, n), random_int(rng, n));
  const SimTrace& trace = result.trace;
  ASSERT_EQ(trace.events.size(), std::size_t{n} * n * n);
  expect_per_node_times_increase(trace);

  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> per_entry;
  const OutputArrangement grid = arrangement(n);
  for (std::size_t e = 0; e < trace.events.size(); ++e) {
    const TraceEvent& ev = trace.events[e];
    if (e > 0) ASSERT_LE(trace.events[e - 1].t, ev.t);
    ASSERT_EQ(grid.at(ev.row, ev.col), (Label{ev.output_i, ev.output_j}));
    ASSERT_EQ(ev.t, ev.left.j + ev.row - 1);
    ++per_entry[{ev.output_i, ev.output_j}];
  }
  for (const auto& [entry, count] : per_entry) EXPECT_EQ(count, n);
  for (std::uint32_t r = 1; r <= n; ++r) {
    for (std::uint32_t c = 1; c <= n; ++c) {
      const Label l = grid.at(r, c);
      EXPECT_EQ(trace.completion_at(l.i, l.j), n + r - 1);
    }
  }
}

TEST(SimulateProduct, RealModeWithinTolerance) {
  std::mt19937_64 rng(8);
  for (std::uint32_t n = 1; n <= 12; ++n) {
    const RealMatrix a = random_real(rng, n);
    const RealMatrix b = random_real(rng, n);
    EXPECT_TRUE(nearly_equal(simulate_product(a, b).c, direct_product(a, b), 1e-12)) << "order " << n;
  }
}

TEST(SimulateProduct, OverflowAndMismatch) {
  IntMatrix big(2, std::int64_t{1} << 40);
  try {
    (void)simulate_product(big, big);
    FAIL();
  } catch (const MeshError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kArithmeticOverflow);
  }
  EXPECT_THROW((void)simulate_product(IntMatrix(2), IntMatrix(3)), MeshError);
}

TEST(SimulateProduct, TraceCsv) {
  const auto result = simulate_product(from_rows({{1, 2}, {3, 4}}), from_rows({{5, 6}, {7, 8}}));
  const std::string csv = trace_csv(result.trace);
  EXPECT_EQ(csv.substr(0, csv.find('\n', csv.find('\n') + 1) + 1),
            "t,row,col,output_i,output_j,term\n1,1,1,1,1,a(1,1)*b(1,1)\n");
}

TEST(SimulateTriple, IdentityFactors) {
  for (std::uint32_t n = 1; n <= 7; ++n) {
    const IntMatrix id = IntMatrix::identity(n);
    const auto result = simulate_triple(id, id, id);
    EXPECT_EQ(result.y, id);
    for (auto p : result.partials) EXPECT_TRUE(p == 0 || p == 1);
    EXPECT_EQ(result.milestones.z_row1, n);
    EXPECT_EQ(result.milestones.y_row1_partials, 2 * n);
    EXPECT_LE(result.milestones.all, 4 * n);
    EXPECT_EQ(result.milestones.all, 4 * n - 1);
  }
}

TEST(SimulateTriple, OrderFourHasFourPartialsPerEntry) {
  std::mt19937_64 rng(44);
  const IntMatrix a = random_int(rng, 4);
  const IntMatrix x = random_int(rng, 4);
  const IntMatrix b = random_int(rng, 4);
  const auto result = simulate_triple(a, x, b);
  ASSERT_EQ(result.partials.size(), 4u * 4u * 4u);
  for (std::uint32_t k = 1; k <= 4; ++k) {
    for (std::uint32_t j = 1; j <= 4; ++j) {
      std::int64_t sum = 0;
      for (std::uint32_t r = 1; r <= 4; ++r) sum += result.partial(k, j, r);
      EXPECT_EQ(sum, result.y(k, j));
    }
  }
}

TEST(SimulateTriple, MatchesDirectProductsUpTo16) {
  std::mt19937_64 rng(16);
  for (std::uint32_t n = 1; n <= 16; ++n) {
    const IntMatrix a = random_int(rng, n, 20);
    const IntMatrix x = random_int(rng, n, 20);
    const IntMatrix b = random_int(rng, n, 20);
    const auto result = simulate_triple(a, x, b);
    const IntMatrix z = direct_product(x, b);
    ASSERT_EQ(result.z, z) << "order " << n;
    ASSERT_EQ(result.y, direct_product(a, z)) << "order " << n;

    // Row r's partial for (k, j) uses the ROW index matched to COL j there.
    const OutputArrangement grid = arrangement(n);
    for (std::uint32_t r = 1; r <= n; ++r) {
      for (const Label& l : grid.row(r)) {
        for (std::uint32_t k = 1; k <= n; ++k) {
          ASSERT_EQ(result.partial(k, l.j, r), a(k, l.i) * z(l.i, l.j));
        }
      }
    }
    for (std::uint32_t r = 1; r <= n; ++r) {
      for (std::uint32_t c = 1; c <= n; ++c) {
        const Label l = grid.at(r, c);
        ASSERT_EQ(result.z_completion[(l.i - 1) * n + (l.j - 1)], n + r - 1);
      }
    }
  }
}

TEST(SimulateTriple, TraceCounts) {
  std::mt19937_64 rng(3);
  const std::uint32_t n = 5;
  const auto result = simulate_triple(random_int(rng, n), random_int(rng, n), random_int(rng, n));
  expect_per_node_times_increase(result.trace);
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> phase1;
  std::map<std::uint32_t, std::uint32_t> phase2_per_row;
  for (const TraceEvent& e : result.trace.events) {
    if (e.left.matrix == 'x') {
      ++phase1[{e.output_i, e.output_j}];
    } else {
      ASSERT_EQ(e.left.matrix, 'a');
      ASSERT_EQ(e.right.matrix, 'z');
      ASSERT_EQ(e.t, n + e.left.i + e.row - 1);
      ++phase2_per_row[e.row];
    }
  }
  ASSERT_EQ(phase1.size(), std::size_t{n} * n);
  for (const auto& [entry, count] : phase1) EXPECT_EQ(count, n);
  ASSERT_EQ(phase2_per_row.size(), n);
  for (const auto& [row, count] : phase2_per_row) EXPECT_EQ(count, n * n);
}

TEST(SimulateTriple, RealMode) {
  std::mt19937_64 rng(12);
  for (std::uint32_t n = 1; n <= 8; ++n) {
    const RealMatrix a = random_real(rng, n);
    const RealMatrix x = random_real(rng, n);
    const RealMatrix b = random_real(rng, n);
    const auto result = simulate_triple(a, x, b);
    EXPECT_TRUE(nearly_equal(result.y, direct_product(a, direct_product(x, b)), 1e-12)) << "order " << n;
  }
}

TEST(SimulateTriple, OrderMismatch) {
  EXPECT_THROW((void)simulate_triple(IntMatrix(2), IntMatrix(2), IntMatrix(3)), MeshError);
  EXPECT_THROW((void)simulate_triple(IntMatrix(3), IntMatrix(2), IntMatrix(2)), MeshError);
}

TEST(MatrixIo, ReadWrite) {
  std::istringstream in("2\n1 -2\n3 4\n");
  const IntMatrix m = read_matrix<std::int64_t>(in, "inline");
  EXPECT_EQ(m, from_rows({{1, -2}, {3, 4}}));
  std::ostringstream out;
  write_matrix(out, m);
  EXPECT_EQ(out.str(), "2\n1 -2\n3 4\n");

  std::istringstream short_in("2\n1 2 3\n");
  EXPECT_THROW((void)read_matrix<std::int64_t>(short_in, "short"), MeshError);
  std::istringstream trailing("1\n5 6\n");
  EXPECT_THROW((void)read_matrix<std::int64_t>(trailing, "trailing"), MeshError);
  std::istringstream zero("0\n");
  EXPECT_THROW((void)read_matrix<std::int64_t>(zero, "zero"), MeshError);
}
