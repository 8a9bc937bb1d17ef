// Copyright 2026 The csg authors
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

#ifndef CSG_CLI_HPP
#define CSG_CLI_HPP

namespace csg {

/// Entry point for the `csg` tool (subcommands gen, solve, bench).
/// Returns 0 on success; on failure prints one `error: ...` line to stderr
/// and returns nonzero.
int cli_main(int argc, const char* const* argv);

}  // namespace csg

#endif  // CSG_CLI_HPP
