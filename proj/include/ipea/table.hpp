// Copyright 2026 The ipea-bench Authors
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

#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace ipea::bench {

using Cell = std::variant<std::int64_t, double, std::string>;

/// Rectangular result set emitted as CSV or JSON.
struct Table {
    std::string comment;  ///< provenance line, written as "# ..." above the CSV header
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> row);
};

/// "%.12g"; non-finite values become "nan", "inf", "-inf".
std::string format_real(double x);

std::string to_csv(const Table& table);
std::string to_json(const Table& table);

}  // namespace ipea::bench
