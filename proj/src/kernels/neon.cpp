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

#if defined(MESHSCRAMBLE_HAVE_NEON_BUILD)

#include <arm_neon.h>

namespace meshscramble::kernels::neon {

std::int64_t dot_i8(const std::int8_t* a, const std::int8_t* b, std::size_t count) {
  // Each pairwise-accumulated lane grows by at most 4 * 128 * 128 per step.
  constexpr std::size_t kFlushSteps = 16384;
  std::int64_t total = 0;
  std::size_t i = 0;
  while (count - i >= 16) {
    int32x4_t acc = vdupq_n_s32(0);
    for (std::size_t step = 0; step < kFlushSteps && count - i >= 16; ++step, i += 16) {
      const int8x16_t va = vld1q_s8(a + i);
      const int8x16_t vb = vld1q_s8(b + i);
      acc = vpadalq_s16(acc, vmull_s8(vget_low_s8(va), vget_low_s8(vb)));
      acc = vpadalq_s16(acc, vmull_high_s8(va, vb));
    }
    total += vaddlvq_s32(acc);
  }
  for (; i < count; ++i) total += static_cast<std::int64_t>(a[i]) * b[i];
  return total;
}

}  // namespace meshscramble::kernels::neon

#endif
