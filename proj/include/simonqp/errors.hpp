// Copyright 2026 The simonqp Authors
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

#ifndef SIMONQP_ERRORS_HPP
#define SIMONQP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace simonqp {

/// A configured resource limit (support size, iteration count, group order)
/// would be exceeded.
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(const std::string &what) : std::runtime_error(what) {}
};

/// A mathematical invariant that should hold by construction was observed
/// to fail, e.g. a norm drifting or an oracle breaking its promise.
class InvariantViolation : public std::logic_error {
 public:
  explicit InvariantViolation(const std::string &what) : std::logic_error(what) {}
};

}  // namespace simonqp

#endif  // SIMONQP_ERRORS_HPP
