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

#ifndef SURVAUDIT_INGEST_TABLE_IO_HPP
#define SURVAUDIT_INGEST_TABLE_IO_HPP

#include <string>

#include "survaudit/core/table.hpp"

namespace survaudit::ingest {

/// Reads a delimiter-separated text file with a header row. Header names
/// must match schema columns (any order); empty fields denote missing.
/// Categorical cells are matched by label first, then accepted as integral
/// numeric codes. Errors carry row/column coordinates.
DataTable load_table(const std::string& path, SchemaPtr schema,
                     char delimiter = ',');

DataTable parse_table(const std::string& text, SchemaPtr schema,
                      char delimiter = ',',
                      const std::string& source_name = "<table>");

/// Writes the table in the same format: schema column order, category
/// labels, shortest round-trip formatting for reals, empty field = missing.
void write_table(const std::string& path, const DataTable& table,
                 char delimiter = ',');

std::string format_table(const DataTable& table, char delimiter = ',');

}  // namespace survaudit::ingest

#endif  // SURVAUDIT_INGEST_TABLE_IO_HPP
