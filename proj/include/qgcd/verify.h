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

#ifndef QGCD_VERIFY_H
#define QGCD_VERIFY_H

#include <string>
#include <vector>

namespace qgcd {

struct VerifyOptions {
    /// Restrict to r <= 24 and smaller t ranges.
    bool quick = false;
    /// Negative control: the eigenvalue check expects e^{-2 pi i s/N}.
    bool inject_phase_fault = false;
};

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

/// Small-instance invariant suite behind `qgcd verify`.
std::vector<CheckResult> run_verify_suite(const VerifyOptions &options);

}  // namespace qgcd

#endif
