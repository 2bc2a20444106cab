// Copyright 2026 The Periodica Authors
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

#ifndef PERIODICA_CLI_HPP_
#define PERIODICA_CLI_HPP_

#include <ostream>
#include <string>

namespace periodica {

// Entry point of the command-line tool. Returns the process exit code:
// 0 success, 1 error, 2 degeneracy under the strict tie policy.
int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

struct SelftestOptions {
  std::string fixture_dir;
  unsigned long long seed = 1;
  std::size_t random_games = 200;
  bool update = false;
};

// Fixture snapshot comparison plus a seeded sweep of random games.
int RunSelftest(const SelftestOptions& options, std::ostream& out, std::ostream& err);

}  // namespace periodica

#endif  // PERIODICA_CLI_HPP_
