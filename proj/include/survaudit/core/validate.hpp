// Copyright 2026 The survaudit Authors
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

#ifndef SURVAUDIT_CORE_VALIDATE_HPP
#define SURVAUDIT_CORE_VALIDATE_HPP

#include <string>
#include <vector>

#include "survaudit/core/table.hpp"

namespace survaudit {

enum class ViolationKind {
  kOutOfRange,
  kInvalidCategoryCode,
  kMissingOutcome,
  kDisallowedMissing,
  kNonFinite,
};

struct Violation {
  ViolationKind kind;
  std::string column;
  std::size_t row;
  double value;  // undefined for kMissingOutcome
  std::string message;
};

/// Report-only validation result; violations never abort the caller.
struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::size_t count(ViolationKind kind) const;
};

/// Lists every out-of-range value, invalid category code, non-finite cell
/// and missing time/event entry. Masked cells are never violations (except
/// on the outcome columns, where missingness itself is the violation).
ValidationReport validate(const DataTable& table);

}  // namespace survaudit

#endif  // SURVAUDIT_CORE_VALIDATE_HPP
