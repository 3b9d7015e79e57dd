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
#include <string>
#include <vector>

#include "meshscramble/lane_engine.hpp"
#include "meshscramble/matrix.hpp"

namespace meshscramble {

/// One factor element taking part in a multiply-accumulate, e.g. x(1,3).
struct Operand {
  char matrix;
  std::uint32_t i;
  std::uint32_t j;

  friend bool operator==(const Operand&, const Operand&) = default;
};

/// At time t, node (row, col) multiplied left * right into output entry
/// (output_i, output_j). In the triple pipeline the output of a phase-2
/// event is the Y entry the partial belongs to.
struct TraceEvent {
  std::uint32_t t;
  std::uint32_t row;
  std::uint32_t col;
  std::uint32_t output_i;
  std::uint32_t output_j;
  Operand left;
  Operand right;

  [[nodiscard]] std::string term() const;
};

struct SimTrace {
  std::uint32_t order = 0;
  std::vector<TraceEvent> events;  // non-decreasing t
  /// Completion time of each output entry, row-major, 1-based access via completion_at.
  std::vector<std::uint32_t> completion;

  [[nodiscard]] std::uint32_t completion_at(std::uint32_t i, std::uint32_t j) const {
    return completion.at(static_cast<std::size_t>(i - 1) * order + (j - 1));
  }
};

template <typename T>
struct ProductResult {
  Matrix<T> c;
  SimTrace trace;
  std::uint32_t completion_time = 0;
};

struct TripleMilestones {
  std::uint32_t z_row1 = 0;           // all of mesh row 1's Z entries final
  std::uint32_t y_row1_partials = 0;  // all of mesh row 1's Y partials emitted
  std::uint32_t all = 0;              // every Y entry final
};

template <typename T>
struct TripleResult {
  Matrix<T> z;
  Matrix<T> y;
  /// partials[((k-1)*n + (j-1))*n + (r-1)] = Y_kj(r), the contribution of mesh row r.
  std::vector<T> partials;
  SimTrace trace;
  /// Completion time of each Z entry (row-major).
  std::vector<std::uint32_t> z_completion;
  TripleMilestones milestones;

  [[nodiscard]] const T& partial(std::uint32_t k, std::uint32_t j, std::uint32_t r) const {
    const std::size_t n = y.order();
    return partials.at(((k - 1) * n + (j - 1)) * n + (r - 1));
  }
};

/// C = AB on the mesh: node (r,c) owns the entry arrangement(n) puts there
/// and sees element k of its two streams at t = k + r - 1.
template <typename T>
ProductResult<T> simulate_product(const Matrix<T>& a, const Matrix<T>& b);

/// Y = AXB as Z = XB followed by Y = AZ, with A streamed down the X lanes n
/// steps behind X.
template <typename T>
TripleResult<T> simulate_triple(const Matrix<T>& a, const Matrix<T>& x, const Matrix<T>& b);

extern template ProductResult<std::int64_t> simulate_product(const IntMatrix&, const IntMatrix&);
extern template ProductResult<double> simulate_product(const RealMatrix&, const RealMatrix&);
extern template TripleResult<std::int64_t> simulate_triple(const IntMatrix&, const IntMatrix&,
                                                           const IntMatrix&);
extern template TripleResult<double> simulate_triple(const RealMatrix&, const RealMatrix&,
                                                     const RealMatrix&);

/// CSV with header "t,row,col,output_i,output_j,term".
std::string trace_csv(const SimTrace& trace);

}  // namespace meshscramble
