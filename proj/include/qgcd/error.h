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

#ifndef QGCD_ERROR_H
#define QGCD_ERROR_H

#include <stdexcept>
#include <string>

namespace qgcd {

/// Raised when a requested simulation exceeds the supported problem size or the
/// configured amplitude budget (see `max_amplitudes`).
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string &what) : std::runtime_error(what) {
    }
};

/// Raised when an instance has x = 0 (mod r). Such an instance has N = 1 and
/// needs no quantum circuit at all.
struct TrivialInstance : std::domain_error {
    explicit TrivialInstance(const std::string &what) : std::domain_error(what) {
    }
};

}  // namespace qgcd

#endif
