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

#include "qgcd/numerics.h"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace qgcd {

bool Rational::operator==(const Rational &other) const {
    using u128 = unsigned __int128;
    return (u128)num * other.den == (u128)other.num * den;
}

bool Rational::is_reduced() const {
    return den > 0 && stein_gcd(num, den) == 1;
}

std::ostream &operator<<(std::ostream &out, const Rational &q) {
    return out << q.num << '/' << q.den;
}

uint64_t stein_gcd(uint64_t a, uint64_t b) {
    if (a == 0) {
        return b;
    }
    if (b == 0) {
        return a;
    }
    uint32_t shift = 0;
    while (((a | b) & 1) == 0) {
        a >>= 1;
        b >>= 1;
        shift++;
    }
    while ((a & 1) == 0) {
        a >>= 1;
    }
    // a is odd from here on.
    while (b != 0) {
        while ((b & 1) == 0) {
            b >>= 1;
        }
        if (a > b) {
            std::swap(a, b);
        }
        b -= a;
    }
    return a << shift;
}

Rational reduce_fraction(uint64_t p, uint64_t q) {
    if (q == 0) {
        throw std::domain_error("reduce_fraction: zero denominator");
    }
    if (p == 0) {
        return {0, 1};
    }
    uint64_t g = stein_gcd(p, q);
    return {p / g, q / g};
}

uint64_t lcm(uint64_t x, uint64_t r) {
    if (x == 0 || r == 0) {
        throw std::domain_error("lcm: arguments must be positive");
    }
    uint64_t result;
    if (__builtin_mul_overflow(x / stein_gcd(x, r), r, &result)) {
        throw std::overflow_error(
            "lcm(" + std::to_string(x) + ", " + std::to_string(r) + ") does not fit in 64 bits");
    }
    return result;
}

uint32_t ceil_log2(uint64_t v) {
    if (v == 0) {
        throw std::domain_error("ceil_log2: argument must be positive");
    }
    uint32_t bits = 0;
    while ((uint64_t{1} << bits) < v) {
        bits++;
        if (bits == 64) {
            break;
        }
    }
    return bits;
}

uint32_t accuracy_padding_bits(double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) {
        throw std::domain_error("epsilon must lie in (0, 1)");
    }
    const double v = 2.0 + 1.0 / (2.0 * epsilon);
    uint32_t bits = 0;
    while (std::ldexp(1.0, static_cast<int>(bits)) < v) {
        bits++;
    }
    return bits;
}

std::vector<uint64_t> precompute_multiples(uint64_t x, uint64_t r, uint32_t t) {
    if (r < 2 || r >= kModulusLimit) {
        throw std::domain_error("precompute_multiples: modulus out of range");
    }
    if (t == 0) {
        throw std::domain_error("precompute_multiples: t must be positive");
    }
    std::vector<uint64_t> out;
    out.reserve(t);
    uint64_t c = x % r;
    for (uint32_t j = 0; j < t; j++) {
        out.push_back(c);
        c += c;
        if (c >= r) {
            c -= r;
        }
    }
    return out;
}

std::vector<Rational> cf_convergents(Rational b, uint64_t den_bound) {
    if (b.den == 0 || b.num >= b.den) {
        throw std::domain_error("cf_convergents: expected 0 <= b < 1");
    }
    // h/k recurrences seeded with h_{-2}/k_{-2} = 0/1 and h_{-1}/k_{-1} = 1/0.
    uint64_t h_prev2 = 0, k_prev2 = 1;
    uint64_t h_prev1 = 1, k_prev1 = 0;
    uint64_t p = b.num, q = b.den;
    std::vector<Rational> out;
    while (q != 0) {
        uint64_t a = p / q;
        uint64_t h = a * h_prev1 + h_prev2;
        uint64_t k = a * k_prev1 + k_prev2;
        if (k > den_bound) {
            break;
        }
        out.push_back({h, k});
        h_prev2 = h_prev1;
        k_prev2 = k_prev1;
        h_prev1 = h;
        k_prev1 = k;
        uint64_t rem = p % q;
        p = q;
        q = rem;
    }
    return out;
}

ProblemInstance ProblemInstance::make(uint64_t x, uint64_t r) {
    if (x == 0) {
        throw std::domain_error("x must be positive");
    }
    if (r < 2 || r >= kModulusLimit) {
        throw std::domain_error(
            "r must satisfy 2 <= r < " + std::to_string(kModulusLimit) + ", got " + std::to_string(r));
    }
    ProblemInstance inst;
    inst.x = x;
    inst.r = r;
    inst.addend = x % r;
    inst.L = ceil_log2(r);
    inst.N = r / stein_gcd(inst.addend, r);
    inst.P = lcm(x, r);
    inst.k = inst.P / r;
    return inst;
}

}  // namespace qgcd
