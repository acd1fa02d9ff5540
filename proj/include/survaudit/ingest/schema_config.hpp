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

#ifndef SURVAUDIT_INGEST_SCHEMA_CONFIG_HPP
#define SURVAUDIT_INGEST_SCHEMA_CONFIG_HPP

#include <string>

#include "survaudit/core/schema.hpp"

namespace survaudit::ingest {

/// Parses the schema config format:
///
///   [dataset]
///   time = Days
///   event = dead
///   quasi_identifiers = HIGH, BW, Age, Gender
///
///   [column HGB]
///   kind = continuous
///   unit = g/dL
///   range = 3 20
///
///   [column type]
///   kind = categorical
///   categories = HFpEF, HFmrEF, HFrEF
///
/// Columns keep file order. Parse failures throw Error with
/// "<source>:<line>: message".
SchemaPtr parse_schema_config(const std::string& text,
                              const std::string& source_name = "<schema>");

SchemaPtr load_schema_config(const std::string& path);

}  // namespace survaudit::ingest

#endif  // SURVAUDIT_INGEST_SCHEMA_CONFIG_HPP
