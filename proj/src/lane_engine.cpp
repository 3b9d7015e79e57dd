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

#include "meshscramble/lane_engine.hpp"

#include <string>
#include <utility>

#include "meshscramble/error.hpp"

namespace meshscramble {

void check_order(std::uint32_t order) {
  if (order == 0 || order > kMaxOrder) {
    throw MeshError(ErrorCode::kInvalidOrder,
                    "order must be in 1.." + std::to_string(kMaxOrder) + ", got " + std::to_string(order));
  }
}

LaneLayout::LaneLayout(std::uint32_t order, std::uint32_t row_index, std::vector<Lane> lanes)
    : order_(order), row_index_(row_index), lanes_(std::move(lanes)) {}

bool LaneLayout::satisfies_invariants() const {
  if (lanes_.size() != 2 * static_cast<std::size_t>(order_)) return false;
  std::vector<bool> seen_row(order_ + 1, false);
  std::vector<bool> seen_col(order_ + 1, false);
  for (const Lane& lane : lanes_) {
    const auto idx = lane.tag.index;
    if (idx == 0 || idx > order_) return false;
    auto& seen = lane.tag.kind == StreamKind::kRow ? seen_row : seen_col;
    if (seen[idx]) return false;
    seen[idx] = true;
  }
  for (std::size_t p = 0; p < lanes_.size(); p += 2) {
    if (lanes_[p].tag.kind == lanes_[p + 1].tag.kind) return false;
  }
  return true;
}

OutputArrangement::OutputArrangement(std::uint32_t order, std::vector<Label> grid)
    : order_(order), grid_(std::move(grid)) {}

bool OutputArrangement::is_bijective() const {
  const std::size_t n = order_;
  if (grid_.size() != n * n) return false;
  std::vector<bool> seen(n * n, false);
  for (const Label& l : grid_) {
    if (l.i == 0 || l.j == 0 || l.i > n || l.j > n) return false;
    const std::size_t flat = (l.i - 1) * n + (l.j - 1);
    if (seen[flat]) return false;
    seen[flat] = true;
  }
  return true;
}

LaneLayout initial_layout(std::uint32_t order) {
  check_order(order);
  std::vector<Lane> lanes;
  lanes.reserve(2 * static_cast<std::size_t>(order));
  for (std::uint32_t c = 1; c <= order; ++c) {
    const StreamTag row{StreamKind::kRow, c};
    const StreamTag col{StreamKind::kCol, c};
    // Odd columns feed COL first, even columns ROW first.
    if (c % 2 == 1) {
      lanes.push_back({col, Direction::kRight});
      lanes.push_back({row, Direction::kLeft});
    } else {
      lanes.push_back({row, Direction::kRight});
      lanes.push_back({col, Direction::kLeft});
    }
  }
  return LaneLayout(order, 1, std::move(lanes));
}

LaneLayout advance_row(const LaneLayout& layout) {
  const std::int64_t width = 2 * static_cast<std::int64_t>(layout.order());
  if (layout.row_index() >= layout.order()) {
    throw MeshError(ErrorCode::kInvalidRange, "advance_row past the last mesh row");
  }
  std::vector<Lane> next(layout.lanes().size());
  for (std::int64_t p = 1; p <= width; ++p) {
    Lane lane = layout.lanes()[static_cast<std::size_t>(p - 1)];
    std::int64_t q = lane.direction == Direction::kRight ? p + 2 : p - 2;
    if (q < 1) {
      q = 1 - q;
      lane.direction = Direction::kRight;
    } else if (q > width) {
      q = 2 * width + 1 - q;
      lane.direction = Direction::kLeft;
    }
    next[static_cast<std::size_t>(q - 1)] = lane;
  }
  return LaneLayout(layout.order(), layout.row_index() + 1, std::move(next));
}

Label node_label(const LaneLayout& layout, std::uint32_t col) {
  const Lane& left = layout.lane(2 * col - 1);
  const Lane& right = layout.lane(2 * col);
  if (left.tag.kind == right.tag.kind) {
    throw MeshError(ErrorCode::kMalformedArrangement,
                    "node column " + std::to_string(col) + " does not pair a ROW with a COL stream");
  }
  return left.tag.kind == StreamKind::kRow ? Label{left.tag.index, right.tag.index}
                                           : Label{right.tag.index, left.tag.index};
}

OutputArrangement arrangement(std::uint32_t order) {
  check_order(order);
  const std::size_t n = order;
  const std::size_t width = 2 * n;
  std::vector<Label> grid(n * n);

  // Same dynamics as advance_row, on two scratch buffers.
  const LaneLayout first = initial_layout(order);
  std::vector<Lane> cur(first.lanes().begin(), first.lanes().end());
  std::vector<Lane> next(width);
  for (std::size_t r = 0; r < n; ++r) {
    Label* row = grid.data() + r * n;
    for (std::size_t c = 0; c < n; ++c) {
      const Lane& left = cur[2 * c];
      const Lane& right = cur[2 * c + 1];
      row[c] = left.tag.kind == StreamKind::kRow ? Label{left.tag.index, right.tag.index}
                                                 : Label{right.tag.index, left.tag.index};
    }
    if (r + 1 == n) break;
    for (std::size_t p = 0; p < width; ++p) {
      Lane lane = cur[p];
      std::size_t q;
      if (lane.direction == Direction::kRight) {
        q = p + 2;
        if (q >= width) {
          q = 2 * width - 1 - q;
          lane.direction = Direction::kLeft;
        }
      } else if (p >= 2) {
        q = p - 2;
      } else {
        q = 1 - p;
        lane.direction = Direction::kRight;
      }
      next[q] = lane;
    }
    cur.swap(next);
  }
  return OutputArrangement(order, std::move(grid));
}

/// Row-by-row construction through initial_layout/advance_row.
OutputArrangement arrangement_by_layouts(std::uint32_t order) {
  check_order(order);
  std::vector<Label> grid;
  grid.reserve(static_cast<std::size_t>(order) * order);
  LaneLayout layout = initial_layout(order);
  for (std::uint32_t r = 1; r <= order; ++r) {
    if (r > 1) layout = advance_row(layout);
    for (std::uint32_t c = 1; c <= order; ++c) grid.push_back(node_label(layout, c));
  }
  return OutputArrangement(order, std::move(grid));
}

}  // namespace meshscramble
