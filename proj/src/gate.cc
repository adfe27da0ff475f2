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

#include "qgcd/gate.h"

#include <charconv>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qgcd/numerics.h"

namespace qgcd {

double PiFraction::radians() const {
    return std::numbers::pi * static_cast<double>(num) / static_cast<double>(den);
}

PiFraction PiFraction::normalized() const {
    if (den == 0) {
        throw std::domain_error("PiFraction: zero denominator");
    }
    if (num == 0) {
        return {0, 1};
    }
    uint64_t mag = num < 0 ? uint64_t(-(num + 1)) + 1 : uint64_t(num);
    uint64_t g = stein_gcd(mag, den);
    int64_t n = static_cast<int64_t>(mag / g);
    return {num < 0 ? -n : n, den / g};
}

std::string PiFraction::to_string() const {
    PiFraction f = normalized();
    if (f.num == 0) {
        return "0";
    }
    std::string out;
    if (f.num < 0) {
        out += '-';
    }
    uint64_t mag = f.num < 0 ? uint64_t(-f.num) : uint64_t(f.num);
    if (mag != 1) {
        out += std::to_string(mag) + "*";
    }
    out += "pi";
    if (f.den != 1) {
        out += "/" + std::to_string(f.den);
    }
    return out;
}

namespace {

uint64_t parse_u64(std::string_view text, std::string_view whole) {
    uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
        throw std::invalid_argument("malformed angle '" + std::string(whole) + "'");
    }
    return v;
}

}  // namespace

PiFraction PiFraction::parse(std::string_view text) {
    std::string_view whole = text;
    if (text == "0") {
        return {0, 1};
    }
    bool negative = false;
    if (!text.empty() && text.front() == '-') {
        negative = true;
        text.remove_prefix(1);
    }
    uint64_t mag = 1;
    size_t pi_at = text.find("pi");
    if (pi_at == std::string_view::npos) {
        throw std::invalid_argument("malformed angle '" + std::string(whole) + "'");
    }
    if (pi_at != 0) {
        std::string_view prefix = text.substr(0, pi_at);
        if (prefix.back() != '*') {
            throw std::invalid_argument("malformed angle '" + std::string(whole) + "'");
        }
        prefix.remove_suffix(1);
        mag = parse_u64(prefix, whole);
    }
    std::string_view rest = text.substr(pi_at + 2);
    uint64_t den = 1;
    if (!rest.empty()) {
        if (rest.front() != '/') {
            throw std::invalid_argument("malformed angle '" + std::string(whole) + "'");
        }
        den = parse_u64(rest.substr(1), whole);
        if (den == 0) {
            throw std::invalid_argument("malformed angle '" + std::string(whole) + "'");
        }
    }
    int64_t n = static_cast<int64_t>(mag);
    return PiFraction{negative ? -n : n, den}.normalized();
}

bool PiFraction::operator==(const PiFraction &other) const {
    PiFraction a = normalized();
    PiFraction b = other.normalized();
    return a.num == b.num && a.den == b.den;
}

bool Gate::operator==(const Gate &other) const {
    if (kind != other.kind || q0 != other.q0) {
        return false;
    }
    switch (kind) {
        case GateKind::H:
        case GateKind::MEASURE:
            return true;
        case GateKind::PHASE:
            return angle == other.angle;
        case GateKind::CP:
            return q1 == other.q1 && angle == other.angle;
        case GateKind::SWAP:
            return q1 == other.q1;
        case GateKind::CMODADD:
            return addend == other.addend && modulus == other.modulus;
    }
    return false;
}

std::vector<Gate> inverse_qft_gates(uint32_t t) {
    if (t == 0) {
        throw std::domain_error("inverse_qft_gates: t must be positive");
    }
    std::vector<Gate> gates;
    for (uint32_t i = 0; i < t / 2; i++) {
        gates.push_back(Gate::swap(i, t - 1 - i));
    }
    for (uint32_t a = 0; a < t; a++) {
        for (uint32_t b = 0; b < a; b++) {
            // Conjugate of R_k with k = a - b + 1, i.e. -2 pi / 2^k.
            gates.push_back(Gate::cp(b, a, PiFraction{-1, uint64_t{1} << (a - b)}));
        }
        gates.push_back(Gate::h(a));
    }
    return gates;
}

}  // namespace qgcd
