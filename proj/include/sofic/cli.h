// Copyright 2026 The soficlab Authors
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

#ifndef SOFIC_CLI_H_
#define SOFIC_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace sofic {

// Runs one command line (without the program name). Exit codes: 0 success,
// 1 structured domain error (an error document is printed to `out`), 2 usage
// error (reported on `err`). Every artifact written with -o gets a
// "<artifact>.manifest.json" next to it; `replay MANIFEST` re-runs it.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace sofic

#endif  // SOFIC_CLI_H_
