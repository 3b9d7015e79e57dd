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
#include <span>
#include <vector>

namespace meshscramble {

/// Largest supported mesh order; keeps n*n inside 32-bit indices.
inline constexpr std::uint32_t kMaxOrder = 10000;

enum class StreamKind : std::uint8_t { kRow, kCol };
enum class Direction : std::uint8_t { kLeft, kRight };

/// One moving input stream. ROW i carries row i of the first factor,
/// COL j carries column j of the second factor. Index is 1-based.
struct StreamTag {
  StreamKind kind;
  std::uint32_t index;

  friend bool operator==(const StreamTag&, const StreamTag&) = default;
};

struct Lane {
  StreamTag tag;
  Direction direction;

  friend bool operator==(const Lane&, const Lane&) = default;
};

/// Assignment of the 2n streams to the 2n lanes at one mesh row.
/// Lanes and rows are numbered from 1; lanes (2c-1, 2c) feed node column c.
class LaneLayout {
 public:
  LaneLayout(std::uint32_t order, std::uint32_t row_index, std::vector<Lane> lanes);

  [[nodiscard]] std::uint32_t order() const noexcept { return order_; }
  [[nodiscard]] std::uint32_t row_index() const noexcept { return row_index_; }
  [[nodiscard]] std::span<const Lane> lanes() const noexcept { return lanes_; }
  [[nodiscard]] const Lane& lane(std::uint32_t position) const { return lanes_.at(position - 1); }

  /// Checks that every stream occupies exactly one lane and that each
  /// node column sees one ROW and one COL stream.
  [[nodiscard]] bool satisfies_invariants() const;

  friend bool operator==(const LaneLayout&, const LaneLayout&) = default;

 private:
  std::uint32_t order_;
  std::uint32_t row_index_;
  std::vector<Lane> lanes_;
};

/// Product entry (i, j) produced at a node: ROW index i meets COL index j.
struct Label {
  std::uint32_t i;
  std::uint32_t j;

  friend auto operator<=>(const Label&, const Label&) = default;
};

/// The n x n grid of labels, one per mesh node, stored row-major.
class OutputArrangement {
 public:
  OutputArrangement(std::uint32_t order, std::vector<Label> grid);

  [[nodiscard]] std::uint32_t order() const noexcept { return order_; }
  [[nodiscard]] const Label& at(std::uint32_t row, std::uint32_t col) const {
    return grid_.at(static_cast<std::size_t>(row - 1) * order_ + (col - 1));
  }
  [[nodiscard]] std::span<const Label> row(std::uint32_t row) const {
    return std::span<const Label>(grid_).subspan(static_cast<std::size_t>(row - 1) * order_, order_);
  }
  [[nodiscard]] std::span<const Label> flat() const noexcept { return grid_; }

  [[nodiscard]] bool is_bijective() const;

  friend bool operator==(const OutputArrangement&, const OutputArrangement&) = default;

 private:
  std::uint32_t order_;
  std::vector<Label> grid_;
};

LaneLayout initial_layout(std::uint32_t order);

/// Moves every stream two lanes in its direction, reflecting at the walls.
LaneLayout advance_row(const LaneLayout& layout);

/// Where each product entry lands on the mesh.
OutputArrangement arrangement(std::uint32_t order);

/// Reference construction of arrangement() that materialises every row's
/// LaneLayout. Slower; kept for equivalence testing.
OutputArrangement arrangement_by_layouts(std::uint32_t order);

/// Label met by the lane pair of node column `col` (1-based) in `layout`.
Label node_label(const LaneLayout& layout, std::uint32_t col);

void check_order(std::uint32_t order);

}  // namespace meshscramble
