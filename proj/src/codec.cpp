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

#include "meshscramble/codec.hpp"

#include <algorithm>
#include <string>

#include "meshscramble/error.hpp"
#include "meshscramble/kernels.hpp"
#include "meshscramble/scramble_perm.hpp"

namespace meshscramble::codec {

namespace {

template <typename T>
void put_le(std::uint8_t* out, T value) {
  for (std::size_t b = 0; b < sizeof(T); ++b) out[b] = static_cast<std::uint8_t>(value >> (8 * b));
}

template <typename T>
T get_le(const std::uint8_t* in) {
  T value = 0;
  for (std::size_t b = 0; b < sizeof(T); ++b) value |= static_cast<T>(in[b]) << (8 * b);
  return value;
}

void check_parameters(std::uint32_t order, std::uint32_t iterations) {
  if (order < 2 || order > kMaxOrder) {
    throw MeshError(ErrorCode::kInvalidOrder,
                    "scrambler order must be in 2.." + std::to_string(kMaxOrder) + ", got " +
                        std::to_string(order));
  }
  if (iterations < 1) {
    throw MeshError(ErrorCode::kInvalidRange, "scrambler iterations must be at least 1");
  }
}

// Runs every block of `data` through the same gather index.
void transform_blocks(std::span<const std::uint32_t> index, std::span<const std::uint8_t> data,
                      std::span<std::uint8_t> out) {
  const std::size_t block = index.size();
  const auto& kernel = kernels::active();
  for (std::size_t off = 0; off < data.size(); off += block) {
    kernel.gather_u8(data.data() + off, block, index.data(), out.data() + off, block);
  }
}

}  // namespace

std::array<std::uint8_t, kHeaderSize> encode_header(const Header& header) {
  std::array<std::uint8_t, kHeaderSize> out{};
  std::copy(kMagic.begin(), kMagic.end(), out.begin());
  out[4] = kVersion;
  put_le(out.data() + 5, header.order);
  put_le(out.data() + 9, header.iterations);
  put_le(out.data() + 13, header.payload_length);
  return out;
}

Header decode_header(std::span<const std::uint8_t> file) {
  if (file.size() >= kMagic.size() && !std::equal(kMagic.begin(), kMagic.end(), file.begin())) {
    throw MeshError(ErrorCode::kBadMagic, "not a scrambled stream (bad magic)");
  }
  if (file.size() < kHeaderSize) {
    throw MeshError(ErrorCode::kTruncatedPayload,
                    "stream is " + std::to_string(file.size()) + " bytes, shorter than the header");
  }
  if (file[4] != kVersion) {
    throw MeshError(ErrorCode::kUnsupportedVersion,
                    "unsupported stream version " + std::to_string(file[4]));
  }
  Header header;
  header.order = get_le<std::uint32_t>(file.data() + 5);
  header.iterations = get_le<std::uint32_t>(file.data() + 9);
  header.payload_length = get_le<std::uint64_t>(file.data() + 13);
  check_parameters(header.order, header.iterations);
  return header;
}

std::vector<std::uint8_t> scramble_stream(std::uint32_t order, std::uint32_t iterations,
                                          std::span<const std::uint8_t> payload) {
  check_parameters(order, iterations);
  const std::size_t block = static_cast<std::size_t>(order) * order;
  const std::size_t blocks = (payload.size() + block - 1) / block;

  std::vector<std::uint8_t> padded(blocks * block, 0);
  std::copy(payload.begin(), payload.end(), padded.begin());

  const Header header{order, iterations, payload.size()};
  const auto head = encode_header(header);
  std::vector<std::uint8_t> file(kHeaderSize + padded.size());
  std::copy(head.begin(), head.end(), file.begin());

  const auto index = power_indices(scrambling_permutation(order), BigInt(iterations));
  transform_blocks(index, padded, std::span<std::uint8_t>(file).subspan(kHeaderSize));
  return file;
}

std::vector<std::uint8_t> descramble_stream(std::span<const std::uint8_t> file) {
  const Header header = decode_header(file);
  const std::size_t block = static_cast<std::size_t>(header.order) * header.order;
  const auto body = file.subspan(kHeaderSize);
  if (body.size() % block != 0) {
    throw MeshError(ErrorCode::kTruncatedPayload,
                    "payload of " + std::to_string(body.size()) + " bytes is not a whole number of " +
                        std::to_string(block) + "-byte blocks");
  }
  const std::uint64_t expected_blocks = header.payload_length / block + (header.payload_length % block != 0);
  if (body.size() / block != expected_blocks) {
    throw MeshError(ErrorCode::kHeaderPayloadMismatch,
                    "header declares " + std::to_string(header.payload_length) + " bytes but stream holds " +
                        std::to_string(body.size() / block) + " blocks");
  }

  const auto index = power_indices(inverse(scrambling_permutation(header.order)), BigInt(header.iterations));
  std::vector<std::uint8_t> plain(body.size());
  transform_blocks(index, body, plain);
  plain.resize(static_cast<std::size_t>(header.payload_length));
  return plain;
}

}  // namespace meshscramble::codec
