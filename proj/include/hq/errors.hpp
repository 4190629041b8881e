// Copyright 2026 The hq Authors
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

#ifndef HQ_ERRORS_HPP_
#define HQ_ERRORS_HPP_

#include <stdexcept>

namespace hq {

/// Operands of incompatible sizes (quaternion tuples of different length,
/// control vectors of the wrong width).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Argument outside the mathematical domain of an operation (non-positive
/// dilation factor, zero denominator, projecting the identity).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Operation requested for a norm family it is not defined for.
class UnsupportedFamily : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed textual input (point literals, norm family names).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace hq

#endif  // HQ_ERRORS_HPP_
