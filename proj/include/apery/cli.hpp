// Copyright 2026 The Apery Authors
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

#ifndef APERY_CLI_HPP
#define APERY_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace apery::cli {

enum class Status { ok = 0, verification_failed = 1, usage_error = 2, precision_error = 3 };

inline int exit_code(Status s) { return static_cast<int>(s); }

/// Runs one subcommand. `args` excludes the program name. Results go to `out`
/// one record per line, logs and diagnostics to `err`.
Status run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace apery::cli

#endif  // APERY_CLI_HPP
