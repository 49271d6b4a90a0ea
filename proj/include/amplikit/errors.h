// Copyright 2026 The Authors.
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

#ifndef AMPLIKIT_ERRORS_H_
#define AMPLIKIT_ERRORS_H_

#include <stdexcept>
#include <string>

namespace amplikit {

// Bad input: malformed objects, violated preconditions, objects outside the
// family an operation is defined on.
class InvalidArgument : public std::invalid_argument {
 public:
  explicit InvalidArgument(const std::string& what)
      : std::invalid_argument(what) {}
};

// The requested instance is larger than an enumeration is willing to handle.
class ScaleBoundExceeded : public std::runtime_error {
 public:
  explicit ScaleBoundExceeded(const std::string& what)
      : std::runtime_error(what) {}
};

inline void CheckArgument(bool condition, const std::string& message) {
  if (!condition) throw InvalidArgument(message);
}

inline void CheckScale(bool condition, const std::string& message) {
  if (!condition) throw ScaleBoundExceeded(message);
}

}  // namespace amplikit

#endif  // AMPLIKIT_ERRORS_H_
