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

#include "qgcd/verify.h"

#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "qgcd/circuit.h"
#include "qgcd/numerics.h"
#include "qgcd/qpe.h"

namespace qgcd {

namespace {

// Empty string means the check passed.
using Check = std::function<std::string()>;

uint64_t euclid_by_subtraction(uint64_t a, uint64_t b) {
    if (a == 0) {
        return b;
    }
    while (b != 0) {
        if (a > b) {
            a -= b;
        } else {
            b -= a;
        }
    }
    return a;
}

std::string describe(uint64_t x, uint64_t r) {
    return "x=" + std::to_string(x) + " r=" + std::to_string(r);
}

}  // namespace

std::vector<CheckResult> run_verify_suite(const VerifyOptions &options) {
    const uint64_t r_max = options.quick ? 24 : 64;
    const uint32_t t_max = options.quick ? 6 : 8;
    std::vector<std::pair<std::string, Check>> checks;

    checks.emplace_back("stein_gcd matches subtraction gcd", [&]() -> std::string {
        const uint64_t limit = options.quick ? 200 : 1000;
        for (uint64_t a = 0; a <= limit; a++) {
            for (uint64_t b = 0; b <= limit; b++) {
                if (stein_gcd(a, b) != euclid_by_subtraction(a, b)) {
                    return "a=" + std::to_string(a) + " b=" + std::to_string(b);
                }
            }
        }
        return "";
    });

    checks.emplace_back("eigenstate eigenvalue e^{2 pi i s/N}", [&]() -> std::string {
        const double sign = options.inject_phase_fault ? -1.0 : 1.0;
        for (uint64_t r = 2; r <= r_max; r++) {
            for (uint64_t x = 1; x < r; x++) {
                ProblemInstance inst = ProblemInstance::make(x, r);
                for (uint64_t s = 0; s < inst.N; s++) {
                    std::vector<Amplitude> u = eigenstate(x, r, s, 0);
                    StateVector state(1, r);
                    auto amps = state.mutable_amplitudes();
                    for (uint64_t w = 0; w < r; w++) {
                        amps[w] = 0;
                        amps[r + w] = u[w];
                    }
                    state.apply(Gate::cmodadd(0, inst.addend, r));
                    Amplitude expected_phase =
                        std::polar(1.0, sign * 2 * std::numbers::pi * double(s) / double(inst.N));
                    double err = 0;
                    for (uint64_t w = 0; w < r; w++) {
                        err = std::max(err, std::abs(state.amplitude(1, w) - expected_phase * u[w]));
                    }
                    if (err > 1e-10) {
                        return describe(x, r) + " s=" + std::to_string(s) + " error " + std::to_string(err);
                    }
                }
            }
        }
        return "";
    });

    checks.emplace_back("state-vector pipeline equals analytic distribution", [&]() -> std::string {
        const uint64_t r_lim = std::min<uint64_t>(r_max, 24);
        for (uint64_t r = 3; r <= r_lim; r++) {
            for (uint64_t x = 2; x < r; x++) {
                for (uint32_t t = 3; t <= t_max; t++) {
                    std::vector<double> a = run_qpe_pipeline(x, r, t).distribution();
                    std::vector<double> b = exact_distribution(x, r, t);
                    for (size_t m = 0; m < a.size(); m++) {
                        if (std::abs(a[m] - b[m]) > 1e-10) {
                            return describe(x, r) + " t=" + std::to_string(t) + " m=" + std::to_string(m);
                        }
                    }
                }
            }
        }
        return "";
    });

    checks.emplace_back("exact peaks when N divides 2^t", [&]() -> std::string {
        for (uint64_t r = 2; r <= r_max; r++) {
            for (uint64_t x = 1; x < r; x++) {
                ProblemInstance inst = ProblemInstance::make(x, r);
                if ((inst.N & (inst.N - 1)) != 0) {
                    continue;
                }
                const uint32_t t = std::max<uint32_t>(ceil_log2(inst.N), 1);
                std::vector<double> p = exact_distribution(x, r, t);
                const uint64_t step = (uint64_t{1} << t) / inst.N;
                for (uint64_t m = 0; m < p.size(); m++) {
                    double want = (m % step == 0) ? 1.0 / double(inst.N) : 0.0;
                    if (std::abs(p[m] - want) > 1e-12) {
                        return describe(x, r) + " m=" + std::to_string(m);
                    }
                }
            }
        }
        return "";
    });

    checks.emplace_back("rounding recovery is exact inside the window", [&]() -> std::string {
        for (uint64_t r = 2; r <= r_max; r++) {
            const uint32_t t = choose_t(r, 0.25).t;
            for (uint64_t x = 1; x < r; x++) {
                ProblemInstance inst = ProblemInstance::make(x, r);
                for (uint64_t s = 0; s < inst.N; s++) {
                    const uint64_t center = (s << t) / inst.N;
                    for (uint64_t m = center == 0 ? 0 : center - 1; m <= center + 2 && m < (uint64_t{1} << t); m++) {
                        if (!within_recovery_window(m, t, s, inst.N, r)) {
                            continue;
                        }
                        RecoveredFraction f = recover_fraction(m, t, r);
                        if (!(Rational{f.p, r} == Rational{s, inst.N})) {
                            return describe(x, r) + " s=" + std::to_string(s) + " m=" + std::to_string(m);
                        }
                    }
                }
            }
        }
        return "";
    });

    checks.emplace_back("inverse QFT network equals DFT adjoint", []() -> std::string {
        for (uint32_t t = 1; t <= 5; t++) {
            const uint64_t M = uint64_t{1} << t;
            for (uint64_t j = 0; j < M; j++) {
                StateVector state(t, 2);
                auto amps = state.mutable_amplitudes();
                amps[0] = 0;
                amps[j * 2] = 1;
                state.apply_inverse_qft();
                for (uint64_t k = 0; k < M; k++) {
                    Amplitude want = std::polar(1.0 / std::sqrt(double(M)),
                                                -2 * std::numbers::pi * double((j * k) % M) / double(M));
                    if (std::abs(state.amplitude(k, 0) - want) > 1e-10) {
                        return "t=" + std::to_string(t) + " column " + std::to_string(j);
                    }
                }
            }
        }
        return "";
    });

    checks.emplace_back("circuit text round trip and replay", [&]() -> std::string {
        for (uint64_t r = 3; r <= std::min<uint64_t>(r_max, 24); r++) {
            for (uint64_t x = 1; x < r; x++) {
                const uint32_t t = 5;
                Circuit c = build_qpe_circuit(x, r, t);
                if (parse_circuit(emit_text(c)) != c) {
                    return describe(x, r) + " round trip";
                }
                std::vector<double> a = simulate(c).distribution();
                std::vector<double> b = exact_distribution(x, r, t);
                for (size_t m = 0; m < a.size(); m++) {
                    if (std::abs(a[m] - b[m]) > 1e-10) {
                        return describe(x, r) + " replay m=" + std::to_string(m);
                    }
                }
            }
        }
        return "";
    });

    checks.emplace_back("protocol A claims divide gcd(x, r)", [&]() -> std::string {
        // A misrounded sample can push the largest denominator past N, so a
        // claim is only guaranteed to be a divisor of the gcd. When N divides
        // 2^t there is no misrounding and the claim must be the gcd itself.
        const uint64_t r_lim = options.quick ? 16 : 32;
        for (uint64_t r = 2; r <= r_lim; r++) {
            for (uint64_t x = 1; x <= r; x++) {
                RunRecord rec = protocol_a(x, r, 0.25, 20, derive_seed(x, r), SampleMethod::Exact);
                if (!rec.succeeded()) {
                    continue;  // allowed failure; the claim is only checked when made
                }
                const uint64_t g = euclid_by_subtraction(x, r);
                const bool sharp = (uint64_t{1} << rec.config.t) % rec.instance.N == 0;
                if (g % *rec.claimed_gcd != 0 || (sharp && *rec.claimed_gcd != g)) {
                    return describe(x, r) + " claimed " + std::to_string(*rec.claimed_gcd);
                }
            }
        }
        return "";
    });

    checks.emplace_back("protocol B returns gcd(x, r)", [&]() -> std::string {
        const uint64_t r_lim = options.quick ? 16 : 32;
        for (uint64_t r = 3; r <= r_lim; r++) {
            for (uint64_t x = 2; x < r; x++) {
                for (uint64_t seed = 0; seed < 2; seed++) {
                    RunRecord rec = protocol_b(x, r, 1e-5, seed, 0, SampleMethod::Kitaev);
                    if (!rec.succeeded() || *rec.claimed_gcd != euclid_by_subtraction(x, r)) {
                        return describe(x, r) + " seed=" + std::to_string(seed);
                    }
                    if (rec.iterations.size() > 5 * uint64_t{ceil_log2(r)}) {
                        return describe(x, r) + " took " + std::to_string(rec.iterations.size()) + " rounds";
                    }
                }
            }
        }
        return "";
    });

    std::vector<CheckResult> results;
    for (auto &[name, check] : checks) {
        auto start = std::chrono::steady_clock::now();
        CheckResult res;
        res.name = name;
        try {
            res.detail = check();
            res.passed = res.detail.empty();
        } catch (const std::exception &e) {
            res.detail = std::string("exception: ") + e.what();
            res.passed = false;
        }
        res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        results.push_back(std::move(res));
    }
    return results;
}

}  // namespace qgcd
