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

#ifndef QGCD_GATE_H
#define QGCD_GATE_H

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qgcd {

/// An angle stored as an exact rational multiple of pi: (num / den) * pi.
struct PiFraction {
    int64_t num = 0;
    uint64_t den = 1;

    double radians() const;
    /// Lowest terms with den > 0; zero is 0/1.
    PiFraction normalized() const;
    /// "0", "pi", "-pi/8", "3*pi/4", ...
    std::string to_string() const;
    /// Inverse of to_string. Throws std::invalid_argument on malformed text.
    static PiFraction parse(std::string_view text);

    bool operator==(const PiFraction &other) const;
    bool operator!=(const PiFraction &other) const {
        return !(*this == other);
    }
};

enum class GateKind : uint8_t {
    H,        // Hadamard on q0.
    PHASE,    // diag(1, e^{i angle}) on q0.
    CP,       // e^{i angle} when q0 and q1 are both set.
    SWAP,     // exchange q0 and q1.
    CMODADD,  // w -> (w + addend) mod modulus when q0 is set.
    MEASURE,  // terminal computational-basis measurement of q0.
};

/// One instruction acting on the control register (qubits 0..t-1, qubit 0 is
/// the least significant bit of the control integer) and, for CMODADD, on the
/// work register.
struct Gate {
    GateKind kind = GateKind::H;
    uint32_t q0 = 0;
    uint32_t q1 = 0;
    PiFraction angle{};
    uint64_t addend = 0;
    uint64_t modulus = 0;

    static Gate h(uint32_t q) {
        return {GateKind::H, q, 0, {}, 0, 0};
    }
    static Gate phase(uint32_t q, PiFraction angle) {
        return {GateKind::PHASE, q, 0, angle, 0, 0};
    }
    static Gate cp(uint32_t control, uint32_t target, PiFraction angle) {
        return {GateKind::CP, control, target, angle, 0, 0};
    }
    static Gate swap(uint32_t a, uint32_t b) {
        return {GateKind::SWAP, a, b, {}, 0, 0};
    }
    static Gate cmodadd(uint32_t control, uint64_t addend, uint64_t modulus) {
        return {GateKind::CMODADD, control, 0, {}, addend, modulus};
    }
    static Gate measure(uint32_t q) {
        return {GateKind::MEASURE, q, 0, {}, 0, 0};
    }

    /// Only the fields meaningful for `kind` take part in the comparison.
    bool operator==(const Gate &other) const;
    bool operator!=(const Gate &other) const {
        return !(*this == other);
    }
};

/// Inverse QFT on qubits 0..t-1 with F|j> = 2^{-t/2} sum_k e^{2 pi i jk/2^t}|k>.
///
/// This is the textbook QFT network run backwards: the bit-reversal swaps come
/// first, then for each qubit a (ascending) the conjugated controlled phases
/// -pi/2^{a-b} from every lower qubit b, followed by a Hadamard on a.
std::vector<Gate> inverse_qft_gates(uint32_t t);

}  // namespace qgcd

#endif
