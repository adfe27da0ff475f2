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

#include <numbers>
#include <set>

#include "gtest/gtest.h"
#include "oracles.h"
#include "qgcd/error.h"

using namespace qgcd;

namespace {

std::vector<double> histogram(const std::vector<PhaseEstimate> &draws, uint32_t t) {
    std::vector<double> h(size_t{1} << t);
    for (const PhaseEstimate &e : draws) {
        h[e.m_out] += 1.0 / double(draws.size());
    }
    return h;
}

}  // namespace

TEST(eigenstate, s0_is_uniform_over_orbit) {
    std::vector<Amplitude> psi = eigenstate(35, 40, 0, 0);
    ASSERT_EQ(psi.size(), 40u);
    std::set<uint64_t> support;
    for (uint64_t w = 0; w < 40; w++) {
        if (std::abs(psi[w]) > 1e-12) {
            support.insert(w);
            ASSERT_NEAR(std::abs(psi[w] - Amplitude(1 / std::sqrt(8.0), 0)), 0, 1e-12);
        }
    }
    ASSERT_EQ(support, (std::set<uint64_t>{0, 5, 10, 15, 20, 25, 30, 35}));
    ASSERT_THROW(eigenstate(35, 40, 8, 0), std::out_of_range);
    ASSERT_THROW(eigenstate(35, 40, 0, 40), std::out_of_range);
}

TEST(eigenstate, eigenvalue_equation) {
    for (uint64_t r = 2; r <= 64; r++) {
        for (uint64_t x = 1; x < r; x++) {
            uint64_t N = oracle::orbit_order(x, r);
            for (uint64_t s = 0; s < N; s++) {
                std::vector<Amplitude> psi = eigenstate(x, r, s, 0);
                // U|w> = |w + x mod r>, applied by hand.
                std::vector<Amplitude> moved(r);
                for (uint64_t w = 0; w < r; w++) {
                    moved[(w + x) % r] = psi[w];
                }
                Amplitude lambda = std::polar(1.0, 2 * std::numbers::pi * double(s) / double(N));
                for (uint64_t w = 0; w < r; w++) {
                    ASSERT_NEAR(std::abs(moved[w] - lambda * psi[w]), 0, 1e-10) << x << " " << r << " " << s;
                }
            }
        }
    }
}

TEST(eigenstate, orthonormal_and_complete_on_orbit) {
    for (auto [x, r] : {std::pair<uint64_t, uint64_t>{35, 40}, {21, 126}, {4, 30}, {7, 9}}) {
        uint64_t N = oracle::orbit_order(x, r);
        std::vector<std::vector<Amplitude>> basis;
        for (uint64_t s = 0; s < N; s++) {
            basis.push_back(eigenstate(x, r, s, 0));
        }
        for (uint64_t a = 0; a < N; a++) {
            for (uint64_t b = 0; b < N; b++) {
                Amplitude ip = 0;
                for (uint64_t w = 0; w < r; w++) {
                    ip += std::conj(basis[a][w]) * basis[b][w];
                }
                ASSERT_NEAR(std::abs(ip - Amplitude(a == b ? 1.0 : 0.0)), 0, 1e-10);
            }
        }
        // N^{-1/2} sum_s |u_s> = |0>.
        for (uint64_t w = 0; w < r; w++) {
            Amplitude acc = 0;
            for (uint64_t s = 0; s < N; s++) {
                acc += basis[s][w];
            }
            acc /= std::sqrt(double(N));
            ASSERT_NEAR(std::abs(acc - Amplitude(w == 0 ? 1.0 : 0.0)), 0, 1e-10);
        }
    }
}

TEST(exact_distribution, matches_double_sum) {
    for (uint64_t r = 2; r <= 30; r++) {
        for (uint64_t x = 1; x <= r; x++) {
            for (uint32_t t = 1; t <= 7; t++) {
                std::vector<double> got = exact_distribution(x, r, t);
                std::vector<double> want = oracle::double_sum_distribution(x, r, t);
                ASSERT_EQ(got.size(), want.size());
                for (size_t m = 0; m < got.size(); m++) {
                    ASSERT_NEAR(got[m], want[m], 1e-12) << x << " " << r << " " << t << " " << m;
                }
            }
        }
    }
    for (uint32_t t : {4u, 5u, 6u, 10u}) {
        std::vector<double> got = exact_distribution(21, 126, t);
        std::vector<double> want = oracle::double_sum_distribution(21, 126, t);
        for (size_t m = 0; m < got.size(); m++) {
            ASSERT_NEAR(got[m], want[m], 1e-12);
        }
    }
}

TEST(exact_distribution, x21_r126_t4_values) {
    std::vector<double> p = exact_distribution(21, 126, 4);
    std::vector<double> head{0.171875, 0.00725728272, 0.03125, 0.11774271728,
                             0.015625, 0.11774271728, 0.03125, 0.00725728272};
    for (size_t m = 0; m < 16; m++) {
        ASSERT_NEAR(p[m], head[m % 8], 1e-10) << m;
    }
}

TEST(exact_distribution, x35_r40_eight_equal_peaks) {
    std::vector<double> p = exact_distribution(35, 40, 4);
    for (uint64_t m = 0; m < 16; m++) {
        ASSERT_NEAR(p[m], m % 2 == 0 ? 0.125 : 0.0, 1e-12);
    }
}

TEST(exact_distribution, normalized_and_peaked_when_N_divides_2t) {
    for (uint64_t r = 2; r <= 64; r++) {
        for (uint64_t x = 1; x <= r; x++) {
            uint64_t N = oracle::orbit_order(x, r);
            for (uint32_t t = 1; t <= 8; t++) {
                std::vector<double> p = exact_distribution(x, r, t);
                double total = 0;
                for (double v : p) {
                    ASSERT_GE(v, -1e-15);
                    total += v;
                }
                ASSERT_NEAR(total, 1, 1e-10);
                const uint64_t M = uint64_t{1} << t;
                if (M % N == 0) {
                    for (uint64_t m = 0; m < M; m++) {
                        ASSERT_NEAR(p[m], m % (M / N) == 0 ? 1.0 / double(N) : 0.0, 1e-12);
                    }
                }
            }
        }
    }
}

TEST(exact_distribution, trivial_instance_is_delta) {
    std::vector<double> p = exact_distribution(80, 40, 5);
    ASSERT_NEAR(p[0], 1, 1e-15);
    for (size_t m = 1; m < p.size(); m++) {
        ASSERT_NEAR(p[m], 0, 1e-15);
    }
}

TEST(run_qpe_pipeline, matches_exact_distribution) {
    for (uint64_t r = 2; r <= 16; r++) {
        for (uint64_t x = 1; x < r; x++) {
            for (uint32_t t = 1; t <= 6; t++) {
                std::vector<double> got = run_qpe_pipeline(x, r, t).distribution();
                std::vector<double> want = exact_distribution(x, r, t);
                for (size_t m = 0; m < got.size(); m++) {
                    ASSERT_NEAR(got[m], want[m], 1e-10);
                }
            }
        }
    }
}

TEST(choose_t, values) {
    TChoice a = choose_t(40, 0.25);
    ASSERT_EQ(a.L, 6u);
    ASSERT_EQ(a.n, 7u);
    ASSERT_EQ(a.t, 9u);
    ASSERT_EQ(choose_t(126, 0.25).t, 10u);
    ASSERT_EQ(choose_t(2, 0.25).t, 4u);
    ASSERT_EQ(choose_t(48, 1e-5).t, 6u + 1 + 16);
    ASSERT_THROW(choose_t(40, 0), std::domain_error);
    ASSERT_THROW(choose_t(40, 1), std::domain_error);
    ASSERT_THROW(choose_t((1 << 19) + 1, 1e-6), ResourceError);
}

TEST(recover_fraction, x35_r40_outcome2) {
    RecoveredFraction f = recover_fraction(2, 4, 40);
    ASSERT_EQ(f.p, 5u);
    ASSERT_EQ(f.reduced.num, 1u);
    ASSERT_EQ(f.reduced.den, 8u);
    ASSERT_TRUE(f.exact);
    ASSERT_EQ(40 / f.reduced.den, 5u);
}

TEST(recover_fraction, examples) {
    // 171/1024 * 126 = 21.04 -> 21, 21/126 = 1/6.
    RecoveredFraction a = recover_fraction(171, 10, 126);
    ASSERT_EQ(a.p, 21u);
    ASSERT_EQ(a.reduced.den, 6u);
    // Just below 1 wraps to 0/1.
    RecoveredFraction b = recover_fraction(1023, 10, 126);
    ASSERT_EQ(b.p, 0u);
    ASSERT_EQ(b.reduced.num, 0u);
    ASSERT_EQ(b.reduced.den, 1u);
    ASSERT_THROW(recover_fraction(16, 4, 40), std::out_of_range);
}

TEST(recover_fraction, tie_rounds_down_and_is_flagged) {
    // b r = 1/2 * 3 = 1.5: ceil(1.0) = 1, and both 1/3 and 2/3 lie 1/6 away.
    RecoveredFraction f = recover_fraction(1, 1, 3);
    ASSERT_EQ(f.p, 1u);
    ASSERT_FALSE(f.exact);
    ASSERT_TRUE(within_recovery_window(1, 1, 1, 3, 3));
    ASSERT_TRUE(within_recovery_window(1, 1, 2, 3, 3));
    ASSERT_TRUE(recover_fraction(2, 4, 40).exact);
}

TEST(recover_fraction, matches_brute_force_nearest) {
    for (uint64_t r = 2; r <= 40; r++) {
        for (uint32_t t = 1; t <= 8; t++) {
            const uint64_t M = uint64_t{1} << t;
            for (uint64_t m = 0; m < M; m++) {
                RecoveredFraction f = recover_fraction(m, t, r);
                // Nearest p' in [0, r] to m r / M by scanning, ties to the lower one.
                uint64_t best = 0;
                for (uint64_t p = 1; p <= r; p++) {
                    int64_t d_best = std::abs(int64_t(2 * best * M) - int64_t(2 * m * r));
                    int64_t d = std::abs(int64_t(2 * p * M) - int64_t(2 * m * r));
                    if (d < d_best) {
                        best = p;
                    }
                }
                ASSERT_EQ(f.p, best % r) << m << " " << t << " " << r;
                ASSERT_EQ(f.reduced.num * r, f.p * f.reduced.den);
                ASSERT_TRUE(f.reduced.is_reduced());
            }
        }
    }
}

TEST(recover_fraction, sound_on_peak_adjacent_outcomes) {
    // For t = L + 3 every outcome within one step of a peak s 2^t / N
    // recovers exactly s/N.
    for (uint64_t r = 2; r <= 64; r++) {
        uint32_t t = choose_t(r, 0.25).t;
        const uint64_t M = uint64_t{1} << t;
        for (uint64_t x = 1; x < r; x++) {
            uint64_t N = oracle::orbit_order(x, r);
            for (uint64_t s = 0; s < N; s++) {
                uint64_t lo = s * M / N;
                for (uint64_t m : {lo + M - 1, lo, lo + 1, lo + 2}) {
                    m %= M;
                    if (!within_recovery_window(m, t, s, N, r)) {
                        continue;
                    }
                    RecoveredFraction f = recover_fraction(m, t, r);
                    ASSERT_TRUE(f.exact);
                    ASSERT_EQ(f.reduced, reduce_fraction(s, N)) << x << " " << r << " " << s << " " << m;
                }
            }
        }
    }
}

TEST(recover_fraction, exact_recovery_probability) {
    for (auto [x, r] : {std::pair<uint64_t, uint64_t>{35, 40}, {21, 126}, {4, 30}, {17, 63}, {5, 64}}) {
        uint32_t t = choose_t(r, 0.25).t;
        uint64_t N = oracle::orbit_order(x, r);
        std::vector<double> p = exact_distribution(x, r, t);
        double good = 0;
        for (uint64_t m = 0; m < p.size(); m++) {
            RecoveredFraction f = recover_fraction(m, t, r);
            good += (f.p * N) % r == 0 ? p[m] : 0.0;
        }
        ASSERT_GE(good, 0.75) << x << " " << r;
    }
}

TEST(PhaseSampler, methods_agree_in_distribution) {
    ProblemInstance inst = ProblemInstance::make(21, 126);
    std::vector<double> exact = exact_distribution(21, 126, 5);
    for (SampleMethod method : {SampleMethod::Exact, SampleMethod::StateVector, SampleMethod::Kitaev}) {
        PhaseSampler sampler(inst, 5, method);
        std::mt19937_64 rng(99);
        std::vector<double> h = histogram(sampler.draw_many(rng, 40000), 5);
        ASSERT_LE(oracle::total_variation(h, exact), 0.02) << to_string(method);
    }
}

TEST(PhaseSampler, deterministic_in_seed) {
    ProblemInstance inst = ProblemInstance::make(35, 40);
    for (SampleMethod method : {SampleMethod::Exact, SampleMethod::StateVector, SampleMethod::Kitaev}) {
        PhaseSampler sampler(inst, 6, method);
        std::mt19937_64 a(5), b(5), c(6);
        std::vector<PhaseEstimate> da = sampler.draw_many(a, 200);
        ASSERT_EQ(da, sampler.draw_many(b, 200));
        ASSERT_NE(da, sampler.draw_many(c, 200));
    }
    ASSERT_EQ(parse_sample_method("kitaev"), SampleMethod::Kitaev);
    ASSERT_THROW(parse_sample_method("magic"), std::invalid_argument);
}

TEST(run_kitaev_qpe, x35_r40_total_variation) {
    std::vector<PhaseEstimate> draws = run_kitaev_qpe(35, 40, 4, 100000, 1);
    ASSERT_EQ(draws.size(), 100000u);
    ASSERT_LE(oracle::total_variation(histogram(draws, 4), exact_distribution(35, 40, 4)), 0.02);
    ASSERT_EQ(run_kitaev_qpe(35, 40, 4, 1000, 3), run_kitaev_qpe(35, 40, 4, 1000, 3));
}

TEST(run_kitaev_qpe, single_bit_matches_statevector) {
    for (uint64_t r = 2; r <= 12; r++) {
        for (uint64_t x = 1; x < r; x++) {
            std::vector<double> exact = exact_distribution(x, r, 1);
            std::vector<double> h = histogram(run_kitaev_qpe(x, r, 1, 20000, r * 100 + x), 1);
            ASSERT_NEAR(h[0], exact[0], 0.02);
            std::vector<double> sv = histogram(run_statevector_qpe(x, r, 1, 20000, r * 100 + x), 1);
            ASSERT_NEAR(sv[0], exact[0], 0.02);
        }
    }
}

TEST(kitaev_feedback_angles, smallest_is_pi_over_2_to_t_minus_1) {
    std::vector<PiFraction> a = kitaev_feedback_angles(4);
    std::set<uint64_t> dens;
    for (const PiFraction &f : a) {
        ASSERT_EQ(f.normalized().num, 1);
        dens.insert(f.normalized().den);
    }
    ASSERT_EQ(dens, (std::set<uint64_t>{2, 4, 8}));
    ASSERT_TRUE(kitaev_feedback_angles(1).empty());
    ASSERT_EQ(kitaev_feedback_angles(10).size(), 9u);
}

TEST(within_recovery_window, exact_integer_test) {
    // |1/8 - 2/16| = 0.
    ASSERT_TRUE(within_recovery_window(2, 4, 1, 8, 40));
    // 40 |1/8 - 3/16| = 2.5.
    ASSERT_FALSE(within_recovery_window(3, 4, 1, 8, 40));
    // 126 |1/6 - 171/1024| = 0.041.
    ASSERT_TRUE(within_recovery_window(171, 10, 1, 6, 126));
}
