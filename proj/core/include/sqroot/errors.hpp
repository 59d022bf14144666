// Copyright 2026 The sqroot Authors
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

#ifndef SQROOT_ERRORS_HPP_
#define SQROOT_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sqroot {

// Base for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The caller handed us something that violates an operation's precondition
// (malformed query, disconnected input where a connected one is required...).
class InputError : public Error {
 public:
  using Error::Error;
};

// Raised for disconnected inputs to the minimum-root pipeline.
class DisconnectedInputError : public InputError {
 public:
  explicit DisconnectedInputError(std::size_t components)
      : InputError("input graph is disconnected (" +
                   std::to_string(components) + " components)"),
        components_(components) {}

  std::size_t components() const { return components_; }

 private:
  std::size_t components_;
};

// A result failed its own post-condition check. Always a bug.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace sqroot

#endif  // SQROOT_ERRORS_HPP_
