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

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

// Data-parallel inner loops. Each kernel has a scalar reference and
// vector variants chosen at runtime from what the CPU reports; the test
// suite checks every available variant against the scalar one.
namespace meshscramble::kernels {

enum class Isa : std::uint8_t { kScalar, kAvx2, kNeon };

std::string_view to_string(Isa isa) noexcept;

struct KernelTable {
  Isa isa;
  /// Sum of a[i] * b[i] over `count` signed bytes.
  std::int64_t (*dot_i8)(const std::int8_t* a, const std::int8_t* b, std::size_t count);
  /// out[q] = src[index[q]] for q < count. Every index must be < src_len.
  void (*gather_u8)(const std::uint8_t* src, std::size_t src_len, const std::uint32_t* index,
                    std::uint8_t* out, std::size_t count);
};

[[nodiscard]] bool available(Isa isa) noexcept;

/// Table for a specific ISA; throws std::invalid_argument when the CPU
/// (or this build) lacks it.
const KernelTable& table(Isa isa);

/// Best ISA for this CPU, unless MESH_KERNELS=scalar|avx2|neon forces one.
const KernelTable& active();

std::int64_t dot_i8(std::span<const std::int8_t> a, std::span<const std::int8_t> b);

void gather_u8(std::span<const std::uint8_t> src, std::span<const std::uint32_t> index,
               std::span<std::uint8_t> out);

}  // namespace meshscramble::kernels
