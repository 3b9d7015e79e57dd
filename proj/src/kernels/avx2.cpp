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

#if defined(MESHSCRAMBLE_HAVE_AVX2_BUILD)

#include <immintrin.h>

#include <cstring>

namespace meshscramble::kernels::avx2 {

namespace {

// Each madd lane grows by at most 2 * 2 * 128 * 128 per 32-byte step.
constexpr std::size_t kFlushSteps = 8192;

__attribute__((target("avx2"))) std::int64_t horizontal_sum_epi32(__m256i v) {
  alignas(32) std::int32_t lanes[8];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
  std::int64_t sum = 0;
  for (std::int32_t x : lanes) sum += x;
  return sum;
}

}  // namespace

__attribute__((target("avx2"))) std::int64_t dot_i8(const std::int8_t* a, const std::int8_t* b,
                                                     std::size_t count) {
  std::int64_t total = 0;
  std::size_t i = 0;
  while (count - i >= 32) {
    __m256i acc = _mm256_setzero_si256();
    for (std::size_t step = 0; step < kFlushSteps && count - i >= 32; ++step, i += 32) {
      const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
      const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
      const __m256i a_lo = _mm256_cvtepi8_epi16(_mm256_castsi256_si128(va));
      const __m256i a_hi = _mm256_cvtepi8_epi16(_mm256_extracti128_si256(va, 1));
      const __m256i b_lo = _mm256_cvtepi8_epi16(_mm256_castsi256_si128(vb));
      const __m256i b_hi = _mm256_cvtepi8_epi16(_mm256_extracti128_si256(vb, 1));
      acc = _mm256_add_epi32(acc, _mm256_madd_epi16(a_lo, b_lo));
      acc = _mm256_add_epi32(acc, _mm256_madd_epi16(a_hi, b_hi));
    }
    total += horizontal_sum_epi32(acc);
  }
  for (; i < count; ++i) total += static_cast<std::int64_t>(a[i]) * b[i];
  return total;
}

__attribute__((target("avx2"))) void gather_u8(const std::uint8_t* src, std::size_t src_len,
                                               const std::uint32_t* index, std::uint8_t* out,
                                               std::size_t count) {
  std::size_t q = 0;
  // A 32-bit gather reads four bytes per index; only lanes whose index
  // leaves room for that over-read are safe.
  if (src_len >= 4 && src_len <= 0x7fffffffu) {
    const __m256i limit = _mm256_set1_epi32(static_cast<int>(src_len - 4));
    const __m256i low_byte = _mm256_set1_epi32(0xff);
    for (; q + 8 <= count; q += 8) {
      const __m256i idx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(index + q));
      if (!_mm256_testz_si256(_mm256_cmpgt_epi32(idx, limit), _mm256_set1_epi32(-1))) {
        for (std::size_t t = q; t < q + 8; ++t) out[t] = src[index[t]];
        continue;
      }
      __m256i v = _mm256_i32gather_epi32(reinterpret_cast<const int*>(src), idx, 1);
      v = _mm256_and_si256(v, low_byte);
      v = _mm256_packus_epi32(v, v);
      v = _mm256_packus_epi16(v, v);
      const std::uint32_t lo = static_cast<std::uint32_t>(_mm_cvtsi128_si32(_mm256_castsi256_si128(v)));
      const std::uint32_t hi =
          static_cast<std::uint32_t>(_mm_cvtsi128_si32(_mm256_extracti128_si256(v, 1)));
      std::memcpy(out + q, &lo, 4);
      std::memcpy(out + q + 4, &hi, 4);
    }
  }
  for (; q < count; ++q) out[q] = src[index[q]];
}

}  // namespace meshscramble::kernels::avx2

#endif
