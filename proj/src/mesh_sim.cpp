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

#include "meshscramble/mesh_sim.hpp"

#include <algorithm>
#include <sstream>

namespace meshscramble {

namespace {

std::string operand_text(const Operand& op) {
  return std::string(1, op.matrix) + "(" + std::to_string(op.i) + "," + std::to_string(op.j) + ")";
}

// Element k of every stream is at mesh row r at time k + r - 1 (k, r in 1..n),
// offset by `delay` for streams that enter later.
struct Wavefront {
  std::uint32_t row_lo;
  std::uint32_t row_hi;
};

Wavefront rows_active(std::uint32_t t, std::uint32_t n, std::uint32_t delay) {
  if (t <= delay) return {1, 0};
  const std::uint32_t local = t - delay;
  return {local > n ? local - n + 1 : 1, std::min(local, n)};
}

}  // namespace

std::string TraceEvent::term() const { return operand_text(left) + "*" + operand_text(right); }

template <typename T>
ProductResult<T> simulate_product(const Matrix<T>& a, const Matrix<T>& b) {
  check_same_order(a.order(), b.order());
  const std::uint32_t n = a.order();
  const OutputArrangement grid = arrangement(n);

  ProductResult<T> result;
  result.c = Matrix<T>(n);
  result.trace.order = n;
  result.trace.completion.assign(static_cast<std::size_t>(n) * n, 0);
  result.trace.events.reserve(static_cast<std::size_t>(n) * n * n);
  std::vector<T> acc(static_cast<std::size_t>(n) * n, T{});

  for (std::uint32_t t = 1; t <= 2 * n - 1; ++t) {
    const auto [row_lo, row_hi] = rows_active(t, n, 0);
    for (std::uint32_t r = row_lo; r <= row_hi; ++r) {
      const std::uint32_t k = t - r + 1;
      for (std::uint32_t c = 1; c <= n; ++c) {
        const auto [i, j] = grid.at(r, c);
        T& cell = acc[static_cast<std::size_t>(r - 1) * n + (c - 1)];
        cell = arith::add(cell, arith::mul(a(i, k), b(k, j)));
        result.trace.events.push_back({t, r, c, i, j, {'a', i, k}, {'b', k, j}});
        if (k == n) result.trace.completion[static_cast<std::size_t>(i - 1) * n + (j - 1)] = t;
      }
    }
  }
  for (std::uint32_t r = 1; r <= n; ++r) {
    for (std::uint32_t c = 1; c <= n; ++c) {
      const auto [i, j] = grid.at(r, c);
      result.c(i, j) = acc[static_cast<std::size_t>(r - 1) * n + (c - 1)];
    }
  }
  result.completion_time = *std::max_element(result.trace.completion.begin(), result.trace.completion.end());
  return result;
}

template <typename T>
TripleResult<T> simulate_triple(const Matrix<T>& a, const Matrix<T>& x, const Matrix<T>& b) {
  check_same_order(a.order(), x.order());
  check_same_order(x.order(), b.order());
  const std::uint32_t n = a.order();
  const std::size_t nn = static_cast<std::size_t>(n) * n;
  const OutputArrangement grid = arrangement(n);

  TripleResult<T> result;
  result.z = Matrix<T>(n);
  result.y = Matrix<T>(n);
  result.partials.assign(nn * n, T{});
  result.z_completion.assign(nn, 0);
  result.trace.order = n;
  result.trace.completion.assign(nn, 0);
  result.trace.events.reserve(2 * nn * n);

  // Node-local Z accumulators, indexed by mesh position.
  std::vector<T> z_node(nn, T{});
  std::vector<std::uint32_t> z_node_done(nn, 0);

  for (std::uint32_t t = 1; t <= 3 * n - 1; ++t) {
    // Phase 1: X rows and B columns, Z = XB.
    const auto z_rows = rows_active(t, n, 0);
    for (std::uint32_t r = z_rows.row_lo; r <= z_rows.row_hi; ++r) {
      const std::uint32_t k = t - r + 1;
      for (std::uint32_t c = 1; c <= n; ++c) {
        const auto [i, j] = grid.at(r, c);
        const std::size_t node = static_cast<std::size_t>(r - 1) * n + (c - 1);
        z_node[node] = arith::add(z_node[node], arith::mul(x(i, k), b(k, j)));
        result.trace.events.push_back({t, r, c, i, j, {'x', i, k}, {'b', k, j}});
        if (k == n) {
          z_node_done[node] = t;
          result.z_completion[static_cast<std::size_t>(i - 1) * n + (j - 1)] = t;
        }
      }
    }
    // Phase 2: the stream on ROW i's path carries column i of A, n steps
    // behind X. Node (r,c) holding z(i,j) emits Y_kj(r) = a(k,i) * z(i,j).
    const auto y_rows = rows_active(t, n, n);
    for (std::uint32_t r = y_rows.row_lo; r <= y_rows.row_hi; ++r) {
      const std::uint32_t k = t - n - r + 1;
      for (std::uint32_t c = 1; c <= n; ++c) {
        const auto [i, j] = grid.at(r, c);
        const std::size_t node = static_cast<std::size_t>(r - 1) * n + (c - 1);
        if (z_node_done[node] == 0 || z_node_done[node] >= t) {
          throw MeshError(ErrorCode::kInvalidRange, "schedule error: Z read before it is final");
        }
        result.partials[((k - 1) * n + (j - 1)) * n + (r - 1)] = arith::mul(a(k, i), z_node[node]);
        result.trace.events.push_back({t, r, c, k, j, {'a', k, i}, {'z', i, j}});
        if (r == 1) result.milestones.y_row1_partials = t;
      }
    }
  }

  // Summation sweep after the last partial: mesh row r's partials join
  // the running sums at t = 3n - 1 + r.
  for (std::uint32_t r = 1; r <= n; ++r) {
    const std::uint32_t t = 3 * n - 1 + r;
    for (std::uint32_t k = 1; k <= n; ++k) {
      for (std::uint32_t j = 1; j <= n; ++j) {
        result.y(k, j) = arith::add(result.y(k, j), result.partial(k, j, r));
        if (r == n) result.trace.completion[static_cast<std::size_t>(k - 1) * n + (j - 1)] = t;
      }
    }
  }

  for (std::uint32_t r = 1; r <= n; ++r) {
    for (std::uint32_t c = 1; c <= n; ++c) {
      const auto [i, j] = grid.at(r, c);
      result.z(i, j) = z_node[static_cast<std::size_t>(r - 1) * n + (c - 1)];
      if (r == 1) {
        result.milestones.z_row1 = std::max(result.milestones.z_row1, z_node_done[c - 1]);
      }
    }
  }
  result.milestones.all = *std::max_element(result.trace.completion.begin(), result.trace.completion.end());
  return result;
}

template ProductResult<std::int64_t> simulate_product(const IntMatrix&, const IntMatrix&);
template ProductResult<double> simulate_product(const RealMatrix&, const RealMatrix&);
template TripleResult<std::int64_t> simulate_triple(const IntMatrix&, const IntMatrix&, const IntMatrix&);
template TripleResult<double> simulate_triple(const RealMatrix&, const RealMatrix&, const RealMatrix&);

std::string trace_csv(const SimTrace& trace) {
  std::ostringstream out;
  out << "t,row,col,output_i,output_j,term\n";
  for (const TraceEvent& e : trace.events) {
    out << e.t << ',' << e.row << ',' << e.col << ',' << e.output_i << ',' << e.output_j << ','
        << e.term() << '\n';
  }
  return out.str();
}

}  // namespace meshscramble
