// Copyright 2026 The qgcd Authors
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

#ifndef QGCD_TOOLS_CLI_H
#define QGCD_TOOLS_CLI_H

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace qgcd::cli {

enum ExitCode : int {
    kSuccess = 0,
    kCheckFailed = 1,
    kUsage = 2,
    kResource = 3,
    kProtocolFailed = 4,
};

struct CliConfig {
    std::string command;
    std::optional<uint64_t> x;
    std::optional<uint64_t> r;
    std::string t = "auto";
    double epsilon = 0.25;
    std::string protocol = "a";
    uint64_t reps = 20;
    uint64_t shots = 100000;
    std::string method = "exact";
    uint64_t seed = 0;
    std::string out;
    std::string format;
    bool quick = false;
    bool inject_fault = false;
};

int cmd_gcd(const CliConfig &config, std::ostream &out, std::ostream &err);
int cmd_dist(const CliConfig &config, std::ostream &out, std::ostream &err);
int cmd_circuit(const CliConfig &config, std::ostream &out, std::ostream &err);
int cmd_verify(const CliConfig &config, std::ostream &out, std::ostream &err);

/// Parses `args` (without the program name) and dispatches. Output goes to
/// `out` unless --out names a file.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace qgcd::cli

#endif
