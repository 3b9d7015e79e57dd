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

#include <stdexcept>
#include <string>
#include <string_view>

namespace meshscramble {

enum class ErrorCode {
  kInvalidOrder,
  kInvalidRange,
  kMalformedArrangement,
  kLengthMismatch,
  kOrderMismatch,
  kBadMagic,
  kUnsupportedVersion,
  kTruncatedPayload,
  kHeaderPayloadMismatch,
  kArithmeticOverflow,
  kParse,
  kIo,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every recoverable failure in the library is reported as a MeshError.
/// The code is stable and is what callers (and the CLI exit status) key on.
class MeshError : public std::runtime_error {
 public:
  MeshError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace meshscramble
