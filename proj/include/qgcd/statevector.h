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

#ifndef QGCD_STATEVECTOR_H
#define QGCD_STATEVECTOR_H

#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "qgcd/gate.h"

namespace qgcd {

using Amplitude = std::complex<double>;

/// Largest 2^t * r the simulator will allocate. Reads QGCD_MAX_DIM from the
/// environment on every call; defaults to 2^26.
uint64_t max_amplitudes();

/// Portable uniform double in [0, 1) built from the top 53 bits of one draw.
double uniform01(std::mt19937_64 &rng);

/// Joint state of a t-qubit control register and an r-level work register.
///
/// Amplitudes are stored at index j * r + w, where j is the control integer
/// (qubit q is bit q of j) and w in [0, r) is the work value. Work values >= r
/// cannot be represented, so CMODADD is a plain permutation of each slice.
class StateVector {
   public:
    /// |j=0>|w=0>. Throws ResourceError when t or r leave the supported range
    /// or 2^t * r exceeds max_amplitudes().
    StateVector(uint32_t t, uint64_t r);

    uint32_t num_control_qubits() const {
        return t_;
    }
    uint64_t work_dim() const {
        return r_;
    }
    uint64_t control_dim() const {
        return uint64_t{1} << t_;
    }

    std::span<const Amplitude> amplitudes() const {
        return amps_;
    }
    Amplitude amplitude(uint64_t j, uint64_t w) const {
        return amps_[j * r_ + w];
    }
    /// Raw mutable access, for preparing test states.
    std::span<Amplitude> mutable_amplitudes() {
        return amps_;
    }

    /// Applies one gate in place. MEASURE is not a unitary and is rejected.
    /// Throws std::out_of_range on a bad qubit index and std::invalid_argument
    /// on a CMODADD whose modulus is not the work dimension.
    void apply(const Gate &gate);
    void apply_all(std::span<const Gate> gates);

    /// F^+ on the control register, run as the inverse_qft_gates network.
    void apply_inverse_qft();

    /// Marginal outcome distribution of the control register, length 2^t.
    std::vector<double> distribution() const;

    double norm_squared() const;

   private:
    void check_qubit(uint32_t q) const;

    uint32_t t_;
    uint64_t r_;
    std::vector<Amplitude> amps_;
};

/// Draws `shots` outcomes from `probabilities` by inverse CDF over ascending
/// index, consuming exactly one uniform01() per shot.
std::vector<uint64_t> sample_distribution(std::span<const double> probabilities, std::mt19937_64 &rng, uint64_t shots);

/// Measurement of the control register without collapsing the state.
std::vector<uint64_t> sample(const StateVector &state, std::mt19937_64 &rng, uint64_t shots);

}  // namespace qgcd

#endif
