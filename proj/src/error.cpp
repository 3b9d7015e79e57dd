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

#include "meshscramble/error.hpp"

namespace meshscramble {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidOrder: return "invalid-order";
    case ErrorCode::kInvalidRange: return "invalid-range";
    case ErrorCode::kMalformedArrangement: return "malformed-arrangement";
    case ErrorCode::kLengthMismatch: return "length-mismatch";
    case ErrorCode::kOrderMismatch: return "order-mismatch";
    case ErrorCode::kBadMagic: return "bad-magic";
    case ErrorCode::kUnsupportedVersion: return "unsupported-version";
    case ErrorCode::kTruncatedPayload: return "truncated-payload";
    case ErrorCode::kHeaderPayloadMismatch: return "header-payload-mismatch";
    case ErrorCode::kArithmeticOverflow: return "arithmetic-overflow";
    case ErrorCode::kParse: return "parse-error";
    case ErrorCode::kIo: return "io-error";
  }
  return "unknown";
}

}  // namespace meshscramble
