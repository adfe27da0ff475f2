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

#include "qgcd/qpe.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

#include "qgcd/error.h"

namespace qgcd {

const char *to_string(SampleMethod method) {
    switch (method) {
        case SampleMethod::Exact:
            return "exact";
        case SampleMethod::StateVector:
            return "statevector";
        case SampleMethod::Kitaev:
            return "kitaev";
    }
    return "?";
}

SampleMethod parse_sample_method(std::string_view name) {
    if (name == "exact") {
        return SampleMethod::Exact;
    }
    if (name == "statevector") {
        return SampleMethod::StateVector;
    }
    if (name == "kitaev") {
        return SampleMethod::Kitaev;
    }
    throw std::invalid_argument("unknown method '" + std::string(name) + "'");
}

TChoice choose_t(uint64_t r, double epsilon) {
    uint32_t pad = accuracy_padding_bits(epsilon);
    if (r < 2) {
        throw std::domain_error("choose_t: r must be at least 2");
    }
    TChoice c;
    c.L = ceil_log2(r);
    c.n = c.L + 1;
    c.t = c.n + pad;
    if (c.t > kMaxControlQubits) {
        throw ResourceError("choose_t: t = " + std::to_string(c.t) + " exceeds the limit of " +
                            std::to_string(kMaxControlQubits));
    }
    return c;
}

std::vector<Amplitude> eigenstate(uint64_t x, uint64_t r, uint64_t s, uint64_t y) {
    ProblemInstance inst = ProblemInstance::make(x, r);
    if (s >= inst.N) {
        throw std::out_of_range("eigenstate: s = " + std::to_string(s) + " must be below N = " +
                                std::to_string(inst.N));
    }
    if (y >= r) {
        throw std::out_of_range("eigenstate: y must be below r");
    }
    std::vector<Amplitude> out(r, Amplitude{0, 0});
    const double scale = 1.0 / std::sqrt(static_cast<double>(inst.N));
    uint64_t w = y;
    for (uint64_t k = 0; k < inst.N; k++) {
        // Reduce s*k mod N before converting to an angle.
        uint64_t e = (s * k) % inst.N;
        double theta = -2.0 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(inst.N);
        out[w] = std::polar(scale, theta);
        w += inst.addend;
        if (w >= r) {
            w -= r;
        }
    }
    return out;
}

std::vector<double> exact_distribution(uint64_t x, uint64_t r, uint32_t t) {
    ProblemInstance inst = ProblemInstance::make(x, r);
    if (t == 0 || t > kMaxControlQubits) {
        throw ResourceError("t must lie in [1, " + std::to_string(kMaxControlQubits) + "]");
    }
    const uint64_t M = uint64_t{1} << t;
    std::vector<double> probs(M, 0.0);
    if (inst.trivial()) {
        probs[0] = 1.0;
        return probs;
    }
    const uint64_t N = inst.N;
    // Residue classes a < rem hold q + 1 indices j, the others hold q.
    const uint64_t q = M / N;
    const uint64_t rem = M % N;
    const double inv_m2 = 1.0 / (static_cast<double>(M) * static_cast<double>(M));
    for (uint64_t m = 0; m < M; m++) {
        // Per-step phase of the series is 2 pi f / M with f = N m mod M.
        const uint64_t f = static_cast<uint64_t>((static_cast<unsigned __int128>(N) * m) % M);
        auto series = [&](uint64_t count) -> double {
            if (count == 0) {
                return 0.0;
            }
            if (f == 0) {
                return static_cast<double>(count) * static_cast<double>(count);
            }
            const uint64_t top = static_cast<uint64_t>((static_cast<unsigned __int128>(count) * f) % M);
            const double num = std::sin(std::numbers::pi * static_cast<double>(top) / static_cast<double>(M));
            const double den = std::sin(std::numbers::pi * static_cast<double>(f) / static_cast<double>(M));
            return (num * num) / (den * den);
        };
        const double total = static_cast<double>(rem) * series(q + 1) + static_cast<double>(N - rem) * series(q);
        probs[m] = total * inv_m2;
    }
    return probs;
}

StateVector run_qpe_pipeline(uint64_t x, uint64_t r, uint32_t t) {
    ProblemInstance inst = ProblemInstance::make(x, r);
    StateVector state(t, r);
    for (uint32_t q = 0; q < t; q++) {
        state.apply(Gate::h(q));
    }
    std::vector<uint64_t> addends = precompute_multiples(inst.addend, r, t);
    for (uint32_t j = 0; j < t; j++) {
        state.apply(Gate::cmodadd(j, addends[j], r));
    }
    state.apply_inverse_qft();
    return state;
}

namespace {

// Correction applied to the control before reading bit i, for an earlier bit j
// that came out 1: cancels the 2^{j-i-1} turn that bit j contributes.
PiFraction feedback_angle(uint32_t i, uint32_t j) {
    return PiFraction{-1, uint64_t{1} << (i - j)};
}

}  // namespace

std::vector<PiFraction> kitaev_feedback_angles(uint32_t t) {
    std::set<uint64_t> dens;
    for (uint32_t i = 0; i < t; i++) {
        for (uint32_t j = 0; j < i; j++) {
            dens.insert(feedback_angle(i, j).den);
        }
    }
    std::vector<PiFraction> out;
    for (uint64_t d : dens) {
        out.push_back(PiFraction{1, d});
    }
    return out;
}

PhaseSampler::PhaseSampler(const ProblemInstance &instance, uint32_t t, SampleMethod method)
    : instance_(instance), t_(t), method_(method) {
    if (t == 0 || t > kMaxControlQubits) {
        throw ResourceError("t must lie in [1, " + std::to_string(kMaxControlQubits) + "]");
    }
    std::vector<double> probs;
    switch (method) {
        case SampleMethod::Exact:
            probs = exact_distribution(instance.x, instance.r, t);
            break;
        case SampleMethod::StateVector:
            probs = run_qpe_pipeline(instance.x, instance.r, t).distribution();
            break;
        case SampleMethod::Kitaev:
            // Validates the 1-qubit state size up front.
            StateVector probe(1, instance.r);
            addends_ = precompute_multiples(instance.addend, instance.r, t);
            return;
    }
    cdf_.resize(probs.size());
    double acc = 0;
    for (size_t m = 0; m < probs.size(); m++) {
        acc += probs[m];
        cdf_[m] = acc;
        if (probs[m] > 0) {
            last_nonzero_ = m;
        }
    }
}

uint64_t PhaseSampler::draw(std::mt19937_64 &rng) const {
    if (method_ == SampleMethod::Kitaev) {
        return draw_kitaev(rng);
    }
    double u = uniform01(rng) * cdf_.back();
    uint64_t m = std::upper_bound(cdf_.begin(), cdf_.end(), u) - cdf_.begin();
    return std::min(m, last_nonzero_);
}

std::vector<PhaseEstimate> PhaseSampler::draw_many(std::mt19937_64 &rng, uint64_t shots) const {
    std::vector<PhaseEstimate> out;
    out.reserve(shots);
    for (uint64_t s = 0; s < shots; s++) {
        out.push_back({draw(rng), t_});
    }
    return out;
}

uint64_t PhaseSampler::draw_kitaev(std::mt19937_64 &rng) const {
    const uint64_t r = instance_.r;
    StateVector state(1, r);
    std::span<Amplitude> amps = state.mutable_amplitudes();
    uint64_t m = 0;
    // Bit i of m (least significant first) is read off controlled-U^{2^{t-1-i}}.
    for (uint32_t i = 0; i < t_; i++) {
        const uint32_t k = t_ - 1 - i;
        state.apply(Gate::h(0));
        state.apply(Gate::cmodadd(0, addends_[k], r));
        for (uint32_t j = 0; j < i; j++) {
            if ((m >> j) & 1) {
                state.apply(Gate::phase(0, feedback_angle(i, j)));
            }
        }
        state.apply(Gate::h(0));

        double p0 = 0, p1 = 0;
        for (uint64_t w = 0; w < r; w++) {
            p0 += std::norm(amps[w]);
        }
        for (uint64_t w = 0; w < r; w++) {
            p1 += std::norm(amps[r + w]);
        }
        const double u = uniform01(rng) * (p0 + p1);
        const uint64_t bit = (u < p0 || p1 == 0) ? 0 : 1;
        const double renorm = 1.0 / std::sqrt(bit ? p1 : p0);
        // Collapse and reset the control to |0>, keeping the work register.
        for (uint64_t w = 0; w < r; w++) {
            amps[w] = (bit ? amps[r + w] : amps[w]) * renorm;
            amps[r + w] = 0;
        }
        m |= bit << i;
    }
    return m;
}

std::vector<PhaseEstimate> run_statevector_qpe(uint64_t x, uint64_t r, uint32_t t, uint64_t shots, uint64_t seed) {
    PhaseSampler sampler(ProblemInstance::make(x, r), t, SampleMethod::StateVector);
    std::mt19937_64 rng(seed);
    return sampler.draw_many(rng, shots);
}

std::vector<PhaseEstimate> run_kitaev_qpe(uint64_t x, uint64_t r, uint32_t t, uint64_t shots, uint64_t seed) {
    PhaseSampler sampler(ProblemInstance::make(x, r), t, SampleMethod::Kitaev);
    std::mt19937_64 rng(seed);
    return sampler.draw_many(rng, shots);
}

RecoveredFraction recover_fraction(uint64_t m_out, uint32_t t, uint64_t r) {
    if (t >= 63 || m_out >= (uint64_t{1} << t)) {
        throw std::out_of_range("recover_fraction: m_out must be below 2^t");
    }
    if (r == 0) {
        throw std::domain_error("recover_fraction: r must be positive");
    }
    using i128 = __int128;
    const i128 M = i128{1} << t;
    // ceil((2 m r - M) / (2M)); the numerator is >= -M so this never drops below 0.
    const i128 num = 2 * i128(m_out) * i128(r) - M;
    const i128 den = 2 * M;
    i128 p = num >= 0 ? (num + den - 1) / den : -((-num) / den);
    RecoveredFraction out;
    out.exact = (num % den) != 0;
    out.r = r;
    out.p = static_cast<uint64_t>(p) % r;
    out.reduced = reduce_fraction(out.p, r);
    return out;
}

bool within_recovery_window(uint64_t m_out, uint32_t t, uint64_t s, uint64_t N, uint64_t r) {
    using i128 = __int128;
    const i128 M = i128{1} << t;
    // r |s M - m N| / (N M) <= 1/2
    i128 diff = i128(s) * M - i128(m_out) * i128(N);
    if (diff < 0) {
        diff = -diff;
    }
    return 2 * i128(r) * diff <= i128(N) * M;
}

uint64_t derive_seed(uint64_t seed, uint64_t index) {
    // splitmix64 finalizer over the pair.
    uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

RunRecord protocol_a(uint64_t x, uint64_t r, double epsilon, uint64_t m_reps, uint64_t seed, SampleMethod method) {
    if (m_reps == 0) {
        throw std::domain_error("protocol_a: m_reps must be at least 1");
    }
    RunRecord rec;
    rec.instance = ProblemInstance::make(x, r);
    rec.config.epsilon = epsilon;
    rec.config.shots = m_reps;
    rec.config.seed = seed;
    rec.config.protocol = 'a';
    rec.config.method = method;
    TChoice tc = choose_t(r, epsilon);
    rec.config.t = tc.t;
    if (rec.instance.trivial()) {
        rec.n_hat = 1;
        rec.claimed_gcd = r;
        rec.diagnostic = "r divides x; no quantum run needed";
        return rec;
    }

    PhaseSampler sampler(rec.instance, tc.t, method);
    for (uint64_t rep = 0; rep < m_reps; rep++) {
        std::mt19937_64 rng(derive_seed(seed, rep));
        PhaseEstimate est{sampler.draw(rng), tc.t};
        RecoveredFraction frac = recover_fraction(est.m_out, est.t, r);
        rec.samples.push_back(est);
        rec.recoveries.push_back(frac);
        rec.n_hat = std::max(rec.n_hat, frac.reduced.den);
    }
    const uint64_t n_hat = rec.n_hat;
    if (r % n_hat == 0 && x % (r / n_hat) == 0) {
        rec.claimed_gcd = r / n_hat;
    } else {
        rec.diagnostic = "largest recovered N = " + std::to_string(n_hat) + " gives r/N not dividing x";
    }
    return rec;
}

RunRecord protocol_b(uint64_t x, uint64_t r, double epsilon, uint64_t seed, uint64_t max_iters, SampleMethod method) {
    constexpr int kZeroRedraws = 3;
    RunRecord rec;
    rec.instance = ProblemInstance::make(x, r);
    rec.config.epsilon = epsilon;
    rec.config.seed = seed;
    rec.config.protocol = 'b';
    rec.config.method = method;
    rec.config.t = choose_t(r, epsilon).t;
    if (max_iters == 0) {
        max_iters = 10 * uint64_t{rec.instance.L};
    }

    uint64_t x_i = x;
    uint64_t r_i = r;
    std::optional<uint64_t> previous;
    for (uint64_t iter = 0; iter < max_iters; iter++) {
        IterationStep step;
        step.x_i = x_i;
        step.r_i = r_i;
        const uint64_t x_small = std::min(x_i, r_i);

        if (x_i % r_i == 0) {
            // gcd(x_i, r_i) = r_i outright.
            step.quantum = false;
            step.s_over_N = {0, 1};
            step.candidate = r_i;
        } else {
            ProblemInstance inst = ProblemInstance::make(x_i, r_i);
            TChoice tc = choose_t(r_i, epsilon);
            PhaseSampler sampler(inst, tc.t, method);
            std::mt19937_64 rng(derive_seed(seed, iter));
            for (int attempt = 0; attempt <= kZeroRedraws; attempt++) {
                PhaseEstimate est{sampler.draw(rng), tc.t};
                RecoveredFraction frac = recover_fraction(est.m_out, est.t, r_i);
                step.draws.push_back(est);
                rec.samples.push_back(est);
                rec.recoveries.push_back(frac);
                step.s_over_N = frac.reduced;
                step.candidate = frac.reduced.num * (r_i / frac.reduced.den);
                if (step.candidate != 0) {
                    break;
                }
            }
        }
        if (step.candidate == 0) {
            // Every draw came back s = 0; spend the round and try again.
            rec.iterations.push_back(step);
            continue;
        }
        step.alternative = x_small > step.candidate ? x_small - step.candidate : step.candidate - x_small;

        for (uint64_t c : {step.candidate, step.alternative}) {
            if (c != 0 && x % c == 0 && r % c == 0) {
                step.divides_x = step.divides_r = true;
                rec.iterations.push_back(step);
                rec.claimed_gcd = c;
                return rec;
            }
        }
        step.divides_x = x % step.candidate == 0;
        step.divides_r = r % step.candidate == 0;

        uint64_t chosen = step.candidate;
        if (step.alternative != 0 && step.alternative < step.candidate) {
            chosen = step.alternative;
        }
        if (previous == chosen) {
            step.stuck = true;
            x_i = (x % chosen != 0) ? x : r;
        } else {
            x_i = x_small;
        }
        r_i = chosen;
        previous = chosen;
        rec.iterations.push_back(step);
    }
    rec.diagnostic = "no common divisor found within " + std::to_string(max_iters) + " iterations";
    return rec;
}

}  // namespace qgcd
