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

#include <iosfwd>
#include <string>
#include <vector>

namespace ipea::bench {

/// Exit codes: 0 success, 1 runtime failure, 2 argument error.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// "3,5,7" or "2..11" (inclusive).
std::vector<int> parse_int_list(const std::string& text);
/// "0.01,0.1".
std::vector<double> parse_real_list(const std::string& text);

}  // namespace ipea::bench
