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

#ifndef QGCD_CIRCUIT_H
#define QGCD_CIRCUIT_H

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qgcd/gate.h"
#include "qgcd/statevector.h"

namespace qgcd {

/// Where a circuit came from. Not part of the text format or of equality.
struct CircuitProvenance {
    uint64_t x = 0;
    uint64_t r = 0;
    uint32_t t = 0;
    std::optional<double> epsilon;
};

/// A static gate list over t control qubits and (optionally) an r-level work
/// register. `work_dim == 0` means the circuit has no work register.
///
/// Controlled-U^{2^j} appears as a single CMODADD macro whose addend is
/// (2^j x) mod r; the reversible adder behind it is not expanded.
struct Circuit {
    uint32_t t = 0;
    uint64_t work_dim = 0;
    std::vector<Gate> gates;
    std::optional<CircuitProvenance> provenance;

    /// ceil(log2(work_dim)), the qubit width a binary work register would need.
    uint32_t work_bits() const;

    /// Checks qubit ranges, CMODADD moduli and that every MEASURE is the last
    /// operation touching its qubit. Throws std::invalid_argument.
    void validate() const;

    bool operator==(const Circuit &other) const {
        return t == other.t && work_dim == other.work_dim && gates == other.gates;
    }
    bool operator!=(const Circuit &other) const {
        return !(*this == other);
    }
};

/// Phase-estimation circuit: H on every control qubit, CMODADD((2^j x) mod r)
/// controlled by qubit j, the inverse QFT, then MEASURE on every control qubit.
/// Throws TrivialInstance when x = 0 (mod r).
Circuit build_qpe_circuit(uint64_t x, uint64_t r, uint32_t t);

/// The inverse-QFT network on its own (no work register).
Circuit build_iqft_circuit(uint32_t t);

/// Line-oriented text form:
///
///     qreg q[4]; wreg w[40];
///     h q[0]
///     cmodadd(35,40) q[0], w
///     swap q[0], q[3]
///     cp(-pi/2) q[0], q[1]
///     measure q[0]
///
/// Angles are exact rational multiples of pi. Every line ends in '\n'.
std::string emit_text(const Circuit &circuit);

/// Inverse of emit_text. Blank lines and lines starting with '#' are skipped.
/// Throws std::invalid_argument with the offending line
/// number on malformed input.
Circuit parse_circuit(std::string_view text);

/// Gate and qubit counts for a circuit.
struct ResourceReport {
    uint32_t L = 0;
    uint32_t t = 0;
    /// L + 1 + ceil(log2(2 + 1/(2 eps))): control qubits needed here.
    uint32_t t_this = 0;
    /// 2L + 1 + ceil(log2(2 + 1/(2 eps))): control qubits order finding would need.
    uint32_t t_shor = 0;
    uint64_t hadamards = 0;
    uint64_t cphases = 0;
    uint64_t swaps = 0;
    uint64_t measurements = 0;
    uint64_t modadd_macros = 0;
    /// modadd_macros * (4L + 2), assuming a ripple-carry modular adder of
    /// 4L + 2 elementary gates.
    uint64_t modadd_elementary_estimate = 0;
    /// pi / 2^{t-1}.
    PiFraction smallest_phase_angle{};
};

/// Throws std::domain_error unless 0 < epsilon < 1.
ResourceReport resource_report(const Circuit &circuit, double epsilon);

/// Multi-line human-readable rendering of a report.
std::string format_report(const ResourceReport &report);

/// Runs the unitary part of a circuit from |0>|0>. MEASURE entries are
/// terminal and skipped. A circuit without a work register is simulated with a
/// 2-level register parked at |0>.
StateVector simulate(const Circuit &circuit);

}  // namespace qgcd

#endif
