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

#include "qgcd/statevector.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qgcd/error.h"
#include "qgcd/numerics.h"

namespace qgcd {

uint64_t max_amplitudes() {
    const char *env = std::getenv("QGCD_MAX_DIM");
    if (env != nullptr && *env != '\0') {
        char *end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != nullptr && *end == '\0' && v > 0) {
            return v;
        }
    }
    return uint64_t{1} << 26;
}

double uniform01(std::mt19937_64 &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

StateVector::StateVector(uint32_t t, uint64_t r) : t_(t), r_(r) {
    if (t > kMaxControlQubits) {
        throw ResourceError("control register of " + std::to_string(t) + " qubits exceeds the limit of " +
                            std::to_string(kMaxControlQubits));
    }
    if (r < 2 || r >= kModulusLimit) {
        throw ResourceError("work dimension " + std::to_string(r) + " outside [2, " +
                            std::to_string(kModulusLimit) + ")");
    }
    uint64_t dim = (uint64_t{1} << t) * r;
    if (dim > max_amplitudes()) {
        throw ResourceError("state of 2^" + std::to_string(t) + " * " + std::to_string(r) + " = " +
                            std::to_string(dim) + " amplitudes exceeds QGCD_MAX_DIM=" +
                            std::to_string(max_amplitudes()));
    }
    amps_.assign(dim, Amplitude{0.0, 0.0});
    amps_[0] = 1.0;
}

void StateVector::check_qubit(uint32_t q) const {
    if (q >= t_) {
        throw std::out_of_range("qubit " + std::to_string(q) + " out of range for " + std::to_string(t_) +
                                "-qubit control register");
    }
}

void StateVector::apply(const Gate &gate) {
    const uint64_t dim_j = control_dim();
    switch (gate.kind) {
        case GateKind::H: {
            check_qubit(gate.q0);
            const uint64_t bit = uint64_t{1} << gate.q0;
            const double s = std::numbers::sqrt2 / 2;
            for (uint64_t j0 = 0; j0 < dim_j; j0++) {
                if (j0 & bit) {
                    continue;
                }
                Amplitude *lo = &amps_[j0 * r_];
                Amplitude *hi = &amps_[(j0 | bit) * r_];
                for (uint64_t w = 0; w < r_; w++) {
                    Amplitude a = lo[w];
                    Amplitude b = hi[w];
                    lo[w] = (a + b) * s;
                    hi[w] = (a - b) * s;
                }
            }
            return;
        }
        case GateKind::PHASE:
        case GateKind::CP: {
            check_qubit(gate.q0);
            uint64_t mask = uint64_t{1} << gate.q0;
            if (gate.kind == GateKind::CP) {
                check_qubit(gate.q1);
                mask |= uint64_t{1} << gate.q1;
            }
            const double theta = gate.angle.radians();
            if (!std::isfinite(theta)) {
                throw std::invalid_argument("non-finite phase angle");
            }
            const Amplitude factor = std::polar(1.0, theta);
            for (uint64_t j = 0; j < dim_j; j++) {
                if ((j & mask) != mask) {
                    continue;
                }
                for (uint64_t w = 0; w < r_; w++) {
                    amps_[j * r_ + w] *= factor;
                }
            }
            return;
        }
        case GateKind::SWAP: {
            check_qubit(gate.q0);
            check_qubit(gate.q1);
            if (gate.q0 == gate.q1) {
                return;
            }
            const uint64_t b0 = uint64_t{1} << gate.q0;
            const uint64_t b1 = uint64_t{1} << gate.q1;
            for (uint64_t j = 0; j < dim_j; j++) {
                // Visit each (..1..0..) / (..0..1..) pair once.
                if ((j & b0) && !(j & b1)) {
                    uint64_t partner = (j ^ b0) | b1;
                    std::swap_ranges(amps_.begin() + j * r_, amps_.begin() + (j + 1) * r_,
                                     amps_.begin() + partner * r_);
                }
            }
            return;
        }
        case GateKind::CMODADD: {
            check_qubit(gate.q0);
            if (gate.modulus != r_) {
                throw std::invalid_argument("cmodadd modulus " + std::to_string(gate.modulus) +
                                            " does not match work dimension " + std::to_string(r_));
            }
            if (gate.addend >= r_) {
                throw std::invalid_argument("cmodadd addend must be reduced mod r");
            }
            if (gate.addend == 0) {
                return;
            }
            const uint64_t bit = uint64_t{1} << gate.q0;
            for (uint64_t j = 0; j < dim_j; j++) {
                if (!(j & bit)) {
                    continue;
                }
                auto slice = amps_.begin() + j * r_;
                // new[(w + c) mod r] = old[w]
                std::rotate(slice, slice + (r_ - gate.addend), slice + r_);
            }
            return;
        }
        case GateKind::MEASURE:
            throw std::invalid_argument("MEASURE cannot be applied as a unitary");
    }
}

void StateVector::apply_all(std::span<const Gate> gates) {
    for (const Gate &g : gates) {
        apply(g);
    }
}

void StateVector::apply_inverse_qft() {
    apply_all(inverse_qft_gates(t_));
}

std::vector<double> StateVector::distribution() const {
    std::vector<double> probs(control_dim(), 0.0);
    for (uint64_t j = 0; j < probs.size(); j++) {
        double acc = 0;
        for (uint64_t w = 0; w < r_; w++) {
            acc += std::norm(amps_[j * r_ + w]);
        }
        probs[j] = acc;
    }
    return probs;
}

double StateVector::norm_squared() const {
    double acc = 0;
    for (const Amplitude &a : amps_) {
        acc += std::norm(a);
    }
    return acc;
}

std::vector<uint64_t> sample_distribution(std::span<const double> probabilities, std::mt19937_64 &rng,
                                          uint64_t shots) {
    if (probabilities.empty()) {
        throw std::invalid_argument("cannot sample an empty distribution");
    }
    std::vector<double> cdf(probabilities.size());
    double acc = 0;
    size_t last_nonzero = 0;
    for (size_t m = 0; m < probabilities.size(); m++) {
        acc += probabilities[m];
        cdf[m] = acc;
        if (probabilities[m] > 0) {
            last_nonzero = m;
        }
    }
    std::vector<uint64_t> out;
    out.reserve(shots);
    for (uint64_t s = 0; s < shots; s++) {
        double u = uniform01(rng) * acc;
        size_t m = std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin();
        out.push_back(std::min(m, last_nonzero));
    }
    return out;
}

std::vector<uint64_t> sample(const StateVector &state, std::mt19937_64 &rng, uint64_t shots) {
    std::vector<double> probs = state.distribution();
    return sample_distribution(probs, rng, shots);
}

}  // namespace qgcd
