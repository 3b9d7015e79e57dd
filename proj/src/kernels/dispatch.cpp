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

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "kernels_impl.hpp"
#include "meshscramble/error.hpp"
#include "meshscramble/kernels.hpp"

namespace meshscramble::kernels {

namespace {

constexpr KernelTable kScalarTable{Isa::kScalar, &scalar::dot_i8, &scalar::gather_u8};
#if defined(MESHSCRAMBLE_HAVE_AVX2_BUILD)
constexpr KernelTable kAvx2Table{Isa::kAvx2, &avx2::dot_i8, &avx2::gather_u8};
#endif
#if defined(MESHSCRAMBLE_HAVE_NEON_BUILD)
// NEON has no general gather; the scalar loop is used there.
constexpr KernelTable kNeonTable{Isa::kNeon, &neon::dot_i8, &scalar::gather_u8};
#endif

const KernelTable& select_active() {
  if (const char* forced = std::getenv("MESH_KERNELS")) {
    const std::string name(forced);
    if (name == "scalar") return table(Isa::kScalar);
    if (name == "avx2") return table(Isa::kAvx2);
    if (name == "neon") return table(Isa::kNeon);
  }
  if (available(Isa::kAvx2)) return table(Isa::kAvx2);
  if (available(Isa::kNeon)) return table(Isa::kNeon);
  return kScalarTable;
}

}  // namespace

std::string_view to_string(Isa isa) noexcept {
  switch (isa) {
    case Isa::kScalar: return "scalar";
    case Isa::kAvx2: return "avx2";
    case Isa::kNeon: return "neon";
  }
  return "unknown";
}

bool available(Isa isa) noexcept {
  switch (isa) {
    case Isa::kScalar:
      return true;
    case Isa::kAvx2:
#if defined(MESHSCRAMBLE_HAVE_AVX2_BUILD)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::kNeon:
#if defined(MESHSCRAMBLE_HAVE_NEON_BUILD)
      return true;
#else
      return false;
#endif
  }
  return false;
}

const KernelTable& table(Isa isa) {
  if (!available(isa)) {
    throw std::invalid_argument("kernel set '" + std::string(to_string(isa)) + "' is not available on this CPU");
  }
  switch (isa) {
#if defined(MESHSCRAMBLE_HAVE_AVX2_BUILD)
    case Isa::kAvx2: return kAvx2Table;
#endif
#if defined(MESHSCRAMBLE_HAVE_NEON_BUILD)
    case Isa::kNeon: return kNeonTable;
#endif
    default: return kScalarTable;
  }
}

const KernelTable& active() {
  static const KernelTable& selected = select_active();
  return selected;
}

std::int64_t dot_i8(std::span<const std::int8_t> a, std::span<const std::int8_t> b) {
  if (a.size() != b.size()) {
    throw MeshError(ErrorCode::kLengthMismatch, "dot_i8 operands differ in length");
  }
  return active().dot_i8(a.data(), b.data(), a.size());
}

void gather_u8(std::span<const std::uint8_t> src, std::span<const std::uint32_t> index,
               std::span<std::uint8_t> out) {
  if (index.size() != out.size()) {
    throw MeshError(ErrorCode::kLengthMismatch, "gather_u8 index and output differ in length");
  }
  active().gather_u8(src.data(), src.size(), index.data(), out.data(), out.size());
}

}  // namespace meshscramble::kernels
