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

#include <array>
#include <cstdint>
#include <span>
#include <vector>

// Block scrambler file format (all integers little-endian):
//
//   offset  size  field
//        0     4  magic "MESH" (4D 45 53 48)
//        4     1  version (0x01)
//        5     4  order n
//        9     4  iterations k
//       13     8  original payload length
//       21   ...  payload blocks of n*n bytes, last block zero-padded
namespace meshscramble::codec {

inline constexpr std::array<std::uint8_t, 4> kMagic{0x4D, 0x45, 0x53, 0x48};
inline constexpr std::uint8_t kVersion = 0x01;
inline constexpr std::size_t kHeaderSize = 21;

struct Header {
  std::uint32_t order = 0;
  std::uint32_t iterations = 0;
  std::uint64_t payload_length = 0;

  friend bool operator==(const Header&, const Header&) = default;
};

std::array<std::uint8_t, kHeaderSize> encode_header(const Header& header);

/// Parses and validates the fixed header; does not look at the payload.
Header decode_header(std::span<const std::uint8_t> file);

/// Requires order >= 2 and iterations >= 1.
std::vector<std::uint8_t> scramble_stream(std::uint32_t order, std::uint32_t iterations,
                                          std::span<const std::uint8_t> payload);

std::vector<std::uint8_t> descramble_stream(std::span<const std::uint8_t> file);

}  // namespace meshscramble::codec
