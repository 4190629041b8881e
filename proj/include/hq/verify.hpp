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

#ifndef HQ_VERIFY_HPP_
#define HQ_VERIFY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hq/group.hpp"
#include "hq/io.hpp"

namespace hq {

enum class CheckStatus { Pass, Fail, ExpectedFailure };

std::string to_string(CheckStatus status);

/// One property check. `measured` is compared against `tolerance` with the
/// relation spelled out in `criterion`.
struct VerifyCheck {
  std::string name;
  CheckStatus status = CheckStatus::Fail;
  double measured = 0.0;
  double tolerance = 0.0;
  std::string criterion;
  std::optional<GroupElement> witness;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;

  bool passed() const;
  const VerifyCheck* find(const std::string& name) const;
  Json to_json() const;
  std::string to_text() const;
};

struct VerifyConfig {
  std::uint64_t seed = 0;
  /// Random points or pairs per sampled property.
  std::uint64_t samples = 100000;
  std::size_t n = 1;
  /// Targets in each Carnot-Caratheodory suite.
  std::size_t cc_targets = 10;
  /// Module prefixes to run ("quaternion", "group", "norms", "equivalence",
  /// "cc", "ops"); empty runs everything.
  std::vector<std::string> modules;
};

/// Runs the property suite. Throws std::invalid_argument on an invalid
/// configuration (zero samples, n = 0, unknown module).
VerifyReport run_verify(const VerifyConfig& config);

}  // namespace hq

#endif  // HQ_VERIFY_HPP_
