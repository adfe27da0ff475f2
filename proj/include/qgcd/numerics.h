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

#ifndef QGCD_NUMERICS_H
#define QGCD_NUMERICS_H

#include <cstdint>
#include <ostream>
#include <vector>

namespace qgcd {

/// Moduli must satisfy 2 <= r < kModulusLimit.
constexpr uint64_t kModulusLimit = uint64_t{1} << 20;
/// Control registers hold at most this many qubits.
constexpr uint32_t kMaxControlQubits = 24;

/// Exact non-negative fraction. `den` is always positive; the value is not
/// necessarily in lowest terms unless produced by `reduce_fraction`.
struct Rational {
    uint64_t num = 0;
    uint64_t den = 1;

    /// Cross-multiplied equality, so 2/16 == 1/8.
    bool operator==(const Rational &other) const;
    bool operator!=(const Rational &other) const {
        return !(*this == other);
    }
    bool is_reduced() const;
    double to_double() const {
        return static_cast<double>(num) / static_cast<double>(den);
    }
};
std::ostream &operator<<(std::ostream &out, const Rational &q);

/// Binary GCD. Uses shifts, subtraction and parity tests only.
/// gcd(0, 0) is 0.
uint64_t stein_gcd(uint64_t a, uint64_t b);

/// Lowest-terms form of p/q. Throws std::domain_error when q == 0.
Rational reduce_fraction(uint64_t p, uint64_t q);

/// x * r / gcd(x, r). Throws std::domain_error on a zero argument and
/// std::overflow_error when the result does not fit in 64 bits.
uint64_t lcm(uint64_t x, uint64_t r);

/// ceil(log2(v)) for v >= 1.
uint32_t ceil_log2(uint64_t v);

/// ceil(log2(2 + 1/(2 epsilon))), the extra control qubits that lift an n-bit
/// phase estimate to success probability 1 - epsilon. Throws std::domain_error
/// unless 0 < epsilon < 1.
uint32_t accuracy_padding_bits(double epsilon);

/// [(2^j * x) mod r for j in 0..t-1], built by repeated modular doubling so each
/// entry costs one modular addition.
std::vector<uint64_t> precompute_multiples(uint64_t x, uint64_t r, uint32_t t);

/// Continued-fraction convergents of b (0 <= b < 1) whose denominators do not
/// exceed `den_bound`, in order of increasing denominator.
std::vector<Rational> cf_convergents(Rational b, uint64_t den_bound);

/// The pair (x, r) together with the derived orbit quantities.
///
/// N is the least positive integer with N * x = 0 (mod r), so N * x = r * k = P
/// where P = lcm(x, r), and gcd(x, r) = r / N. The addend used by the
/// modular-addition unitary is x mod r.
struct ProblemInstance {
    uint64_t x = 0;
    uint64_t r = 0;
    uint64_t addend = 0;
    uint32_t L = 0;
    uint64_t N = 0;
    uint64_t P = 0;
    uint64_t k = 0;

    /// Throws std::domain_error unless x >= 1 and 2 <= r < kModulusLimit.
    static ProblemInstance make(uint64_t x, uint64_t r);

    uint64_t gcd() const {
        return r / N;
    }
    bool trivial() const {
        return N == 1;
    }
};

}  // namespace qgcd

#endif
