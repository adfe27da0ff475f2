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

#ifndef QGCD_QPE_H
#define QGCD_QPE_H

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qgcd/gate.h"
#include "qgcd/numerics.h"
#include "qgcd/statevector.h"

namespace qgcd {

/// One measured control-register value m_out in [0, 2^t).
struct PhaseEstimate {
    uint64_t m_out = 0;
    uint32_t t = 0;

    /// b = m_out / 2^t.
    Rational b() const {
        return {m_out, uint64_t{1} << t};
    }
    bool operator==(const PhaseEstimate &other) const {
        return m_out == other.m_out && t == other.t;
    }
};

/// p = ceil(b r - 1/2) together with p/r in lowest terms.
struct RecoveredFraction {
    uint64_t p = 0;
    uint64_t r = 1;
    Rational reduced{};
    /// False only when b r lies exactly half-way between two integers, so the
    /// window |b - p'/r| <= 1/(2r) holds two candidates.
    bool exact = true;
};

/// Where phase-estimation outcomes come from.
enum class SampleMethod {
    Exact,        // analytic distribution, sampled by inverse CDF
    StateVector,  // full 2^t * r simulation, sampled by inverse CDF
    Kitaev,       // one control qubit, measured bit by bit with feedback
};
const char *to_string(SampleMethod method);
SampleMethod parse_sample_method(std::string_view name);

struct TChoice {
    uint32_t t = 0;
    uint32_t n = 0;
    uint32_t L = 0;
};

/// L = ceil(log2 r), n = L + 1, t = n + ceil(log2(2 + 1/(2 eps))).
/// Throws std::domain_error for eps outside (0, 1) and ResourceError when t
/// exceeds kMaxControlQubits.
TChoice choose_t(uint64_t r, double epsilon);

/// Work-register state N^{-1/2} sum_k e^{-2 pi i s k/N} |(k x + y) mod r>.
/// Throws std::out_of_range unless s < N and y < r.
std::vector<Amplitude> eigenstate(uint64_t x, uint64_t r, uint64_t s, uint64_t y);

/// P(m) = 2^{-2t} sum_{a<N} |sum_{j<2^t, j=a mod N} e^{-2 pi i j m/2^t}|^2,
/// evaluated without a state vector. Each inner sum is a geometric series over
/// one of two possible lengths, so the cost is O(2^t).
std::vector<double> exact_distribution(uint64_t x, uint64_t r, uint32_t t);

/// The four-step pipeline (H on all controls, controlled-U^{2^j}, inverse QFT)
/// on a fresh state; measurement is left to the caller.
StateVector run_qpe_pipeline(uint64_t x, uint64_t r, uint32_t t);

/// Absolute feedback-rotation angles the single-qubit schedule can use for a
/// t-bit estimate. Bit i (LSB first) is corrected by -pi/2^{i-j} for every
/// earlier bit j that measured 1.
std::vector<PiFraction> kitaev_feedback_angles(uint32_t t);

/// Draws outcomes for one (instance, t) pair. Exact and StateVector compute the
/// outcome distribution once on construction; Kitaev simulates every shot.
class PhaseSampler {
   public:
    PhaseSampler(const ProblemInstance &instance, uint32_t t, SampleMethod method);

    uint64_t draw(std::mt19937_64 &rng) const;
    std::vector<PhaseEstimate> draw_many(std::mt19937_64 &rng, uint64_t shots) const;
    uint32_t t() const {
        return t_;
    }

   private:
    uint64_t draw_kitaev(std::mt19937_64 &rng) const;

    ProblemInstance instance_;
    uint32_t t_;
    SampleMethod method_;
    std::vector<uint64_t> addends_;
    std::vector<double> cdf_;
    uint64_t last_nonzero_ = 0;
};

/// Full state-vector phase estimation, `shots` measurements of one prepared
/// state. Deterministic in `seed`.
std::vector<PhaseEstimate> run_statevector_qpe(uint64_t x, uint64_t r, uint32_t t, uint64_t shots, uint64_t seed);

/// Semiclassical phase estimation with one control qubit reused t times.
std::vector<PhaseEstimate> run_kitaev_qpe(uint64_t x, uint64_t r, uint32_t t, uint64_t shots, uint64_t seed);

/// p = ceil(m_out r / 2^t - 1/2) in exact arithmetic, taken mod r so a phase
/// just below 1 recovers 0. Throws std::out_of_range unless m_out < 2^t.
RecoveredFraction recover_fraction(uint64_t m_out, uint32_t t, uint64_t r);

/// r |s/N - m_out/2^t| <= 1/2, evaluated exactly.
bool within_recovery_window(uint64_t m_out, uint32_t t, uint64_t s, uint64_t N, uint64_t r);

/// One round of the iterative protocol.
struct IterationStep {
    uint64_t x_i = 0;
    uint64_t r_i = 0;
    /// False when r_i divides x_i and the round needed no quantum run.
    bool quantum = true;
    std::vector<PhaseEstimate> draws;
    Rational s_over_N{};
    uint64_t candidate = 0;
    uint64_t alternative = 0;
    bool divides_x = false;
    bool divides_r = false;
    bool stuck = false;
};

struct RunConfig {
    uint32_t t = 0;
    double epsilon = 0.25;
    uint64_t shots = 0;
    uint64_t seed = 0;
    char protocol = 'a';
    SampleMethod method = SampleMethod::StateVector;
};

struct RunRecord {
    ProblemInstance instance;
    RunConfig config;
    std::vector<PhaseEstimate> samples;
    std::vector<RecoveredFraction> recoveries;
    std::vector<IterationStep> iterations;
    /// Largest denominator seen (protocol A).
    uint64_t n_hat = 0;
    /// Empty means the protocol failed.
    std::optional<uint64_t> claimed_gcd;
    std::string diagnostic;

    bool succeeded() const {
        return claimed_gcd.has_value();
    }
};

/// Independent per-repetition seed.
uint64_t derive_seed(uint64_t seed, uint64_t index);

/// Repeat-and-take-the-largest-N: `m_reps` single-shot runs with t from
/// choose_t, each outcome reduced to s'/N'; the claim is r / max N' when that
/// divides both inputs. Needs no quantum run when r divides x.
RunRecord protocol_a(uint64_t x, uint64_t r, double epsilon, uint64_t m_reps, uint64_t seed,
                     SampleMethod method = SampleMethod::StateVector);

/// Iterative replacement: each round measures s/N on (x_i, r_i), forms
/// g = (s/N) r_i and |min(x_i, r_i) - g|, returns the first of them that divides
/// both original inputs, and otherwise continues on (min(x_i, r_i), smaller
/// nonzero candidate). When the same candidate comes back twice in a row the
/// next x is whichever original input it does not divide. s = 0 outcomes are
/// redrawn up to 3 times per round. `max_iters == 0` selects 10 ceil(log2 r).
RunRecord protocol_b(uint64_t x, uint64_t r, double epsilon, uint64_t seed, uint64_t max_iters = 0,
                     SampleMethod method = SampleMethod::StateVector);

/// Stable JSON rendering of a run record.
std::string run_record_json(const RunRecord &record, int indent = 2);

}  // namespace qgcd

#endif
