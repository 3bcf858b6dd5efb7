// Copyright 2026 The fluxwire Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FLUXWIRE_ERROR_HPP_
#define FLUXWIRE_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace fluxwire {

// Values are shared with the C API status codes in fluxwire.h.
enum class ErrorCode : int {
  kAlreadyConsumed = 1,
  kForeignWire = 2,
  kNameCollision = 3,
  kReservedName = 4,
  kInvalidName = 5,
  kArityMismatch = 6,
  kAlreadyBound = 7,
  kUnboundPorts = 8,
  kDanglingWire = 9,
  kNoDriver = 10,
  kDoubleDriver = 11,
  kMultipleReceivers = 12,
  kNotSealed = 13,
  kCyclicHierarchy = 14,
  kUnknownNet = 15,
  kAmbiguousDecode = 16,
  kNotPrimitive = 17,
  kInvalidPolynomial = 18,
  kDivisionByZero = 19,
  kStageMismatch = 20,
  kInvalidConfig = 21,
  kTimeout = 22,
  kParse = 23,
  kInvalidArgument = 24,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, std::string net = {});

  ErrorCode code() const { return code_; }
  // Offending net (or port) name, empty when the error is not about a net.
  const std::string& net() const { return net_; }

 private:
  ErrorCode code_;
  std::string net_;
};

}  // namespace fluxwire

#endif  // FLUXWIRE_ERROR_HPP_
