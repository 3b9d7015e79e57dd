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

namespace meshscramble::kernels {

namespace scalar {
std::int64_t dot_i8(const std::int8_t* a, const std::int8_t* b, std::size_t count);
void gather_u8(const std::uint8_t* src, std::size_t src_len, const std::uint32_t* index,
               std::uint8_t* out, std::size_t count);
}  // namespace scalar

#if defined(__x86_64__) || defined(__i386__)
#define MESHSCRAMBLE_HAVE_AVX2_BUILD 1
namespace avx2 {
std::int64_t dot_i8(const std::int8_t* a, const std::int8_t* b, std::size_t count);
void gather_u8(const std::uint8_t* src, std::size_t src_len, const std::uint32_t* index,
               std::uint8_t* out, std::size_t count);
}  // namespace avx2
#endif

#if defined(__aarch64__) || defined(__ARM_NEON)
#define MESHSCRAMBLE_HAVE_NEON_BUILD 1
namespace neon {
std::int64_t dot_i8(const std::int8_t* a, const std::int8_t* b, std::size_t count);
}  // namespace neon
#endif

}  // namespace meshscramble::kernels
