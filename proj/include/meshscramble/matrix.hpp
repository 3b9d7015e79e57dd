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

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <type_traits>
#include <vector>

#include "meshscramble/error.hpp"

namespace meshscramble {

/// Square matrix with 1-based element access, matching product-entry labels.
template <typename T>
class Matrix {
 public:
  using value_type = T;

  Matrix() = default;
  explicit Matrix(std::uint32_t order, T fill = T{})
      : order_(order), data_(static_cast<std::size_t>(order) * order, fill) {}

  static Matrix identity(std::uint32_t order) {
    Matrix m(order);
    for (std::uint32_t d = 1; d <= order; ++d) m(d, d) = T{1};
    return m;
  }

  [[nodiscard]] std::uint32_t order() const noexcept { return order_; }

  T& operator()(std::uint32_t i, std::uint32_t j) { return data_[index(i, j)]; }
  const T& operator()(std::uint32_t i, std::uint32_t j) const { return data_[index(i, j)]; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  [[nodiscard]] std::size_t index(std::uint32_t i, std::uint32_t j) const {
    return static_cast<std::size_t>(i - 1) * order_ + (j - 1);
  }

  std::uint32_t order_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<std::int64_t>;
using RealMatrix = Matrix<double>;

namespace arith {

/// Integer arithmetic traps on overflow; floating arithmetic is plain IEEE.
template <typename T>
T mul(T a, T b) {
  if constexpr (std::is_integral_v<T>) {
    T out;
    if (__builtin_mul_overflow(a, b, &out)) {
      throw MeshError(ErrorCode::kArithmeticOverflow, "integer overflow in matrix product");
    }
    return out;
  } else {
    return a * b;
  }
}

template <typename T>
T add(T a, T b) {
  if constexpr (std::is_integral_v<T>) {
    T out;
    if (__builtin_add_overflow(a, b, &out)) {
      throw MeshError(ErrorCode::kArithmeticOverflow, "integer overflow in matrix product");
    }
    return out;
  } else {
    return a + b;
  }
}

}  // namespace arith

inline void check_same_order(std::uint32_t a, std::uint32_t b) {
  if (a != b) {
    throw MeshError(ErrorCode::kOrderMismatch,
                    "matrix orders differ: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

/// Textbook triple loop.
template <typename T>
Matrix<T> direct_product(const Matrix<T>& a, const Matrix<T>& b) {
  check_same_order(a.order(), b.order());
  const std::uint32_t n = a.order();
  Matrix<T> c(n);
  for (std::uint32_t i = 1; i <= n; ++i) {
    for (std::uint32_t j = 1; j <= n; ++j) {
      T sum{};
      for (std::uint32_t k = 1; k <= n; ++k) sum = arith::add(sum, arith::mul(a(i, k), b(k, j)));
      c(i, j) = sum;
    }
  }
  return c;
}

/// Entrywise |a - b| <= rel_tol * max(|a|, |b|), exact for integers.
template <typename T>
bool nearly_equal(const Matrix<T>& a, const Matrix<T>& b, double rel_tol = 1e-12) {
  if (a.order() != b.order()) return false;
  if constexpr (std::is_integral_v<T>) {
    return a == b;
  } else {
    for (std::uint32_t i = 1; i <= a.order(); ++i) {
      for (std::uint32_t j = 1; j <= a.order(); ++j) {
        const double x = a(i, j);
        const double y = b(i, j);
        if (std::abs(x - y) > rel_tol * std::max(std::abs(x), std::abs(y))) return false;
      }
    }
    return true;
  }
}

/// Text format: first the order n, then n rows of n whitespace-separated values.
template <typename T>
Matrix<T> read_matrix(std::istream& in, const std::string& source) {
  long long order = 0;
  if (!(in >> order) || order < 1 || order > 10000) {
    throw MeshError(ErrorCode::kParse, source + ": expected a positive matrix order on the first line");
  }
  Matrix<T> m(static_cast<std::uint32_t>(order));
  for (std::uint32_t i = 1; i <= m.order(); ++i) {
    for (std::uint32_t j = 1; j <= m.order(); ++j) {
      if (!(in >> m(i, j))) {
        throw MeshError(ErrorCode::kParse, source + ": missing or malformed entry (" + std::to_string(i) +
                                               "," + std::to_string(j) + ")");
      }
    }
  }
  std::string extra;
  if (in >> extra) throw MeshError(ErrorCode::kParse, source + ": trailing data after matrix");
  return m;
}

template <typename T>
void write_matrix(std::ostream& out, const Matrix<T>& m) {
  out << m.order() << '\n';
  for (std::uint32_t i = 1; i <= m.order(); ++i) {
    for (std::uint32_t j = 1; j <= m.order(); ++j) {
      if (j > 1) out << ' ';
      char buf[64];
      const auto res = std::to_chars(buf, buf + sizeof buf, m(i, j));
      out.write(buf, res.ptr - buf);
    }
    out << '\n';
  }
}

}  // namespace meshscramble
