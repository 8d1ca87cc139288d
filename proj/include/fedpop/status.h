// Copyright 2026 The FedPoP Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FEDPOP_STATUS_H_
#define FEDPOP_STATUS_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace fedpop {

enum class ErrorCode {
  kParameter,
  kReconstruction,
  kMembership,
  kSession,
  kThreshold,
  kInvalidPartial,
  kUnmaskableRound,
  kEncoding,
  kDecode,
  kState,
  kLookup,
  kWitness,
  kSimulator,
  kParse,
  kIo,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures are reported through this exception. Reject outcomes
// of verification procedures are values, never errors.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Raised by signature aggregation when a partial fails its share check.
class InvalidPartialError : public Error {
 public:
  InvalidPartialError(uint32_t culprit, const std::string& message)
      : Error(ErrorCode::kInvalidPartial, message), culprit_(culprit) {}

  uint32_t culprit() const { return culprit_; }

 private:
  uint32_t culprit_;
};

}  // namespace fedpop

#endif  // FEDPOP_STATUS_H_
