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

#include "kernels_impl.hpp"

namespace meshscramble::kernels::scalar {

std::int64_t dot_i8(const std::int8_t* a, const std::int8_t* b, std::size_t count) {
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < count; ++i) sum += static_cast<std::int64_t>(a[i]) * b[i];
  return sum;
}

void gather_u8(const std::uint8_t* src, std::size_t /*src_len*/, const std::uint32_t* index,
               std::uint8_t* out, std::size_t count) {
  for (std::size_t q = 0; q < count; ++q) out[q] = src[index[q]];
}

}  // namespace meshscramble::kernels::scalar
