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

#include "qgcd/circuit.h"

#include <numbers>
#include <set>
#include <random>

#include "gtest/gtest.h"
#include "oracles.h"
#include "qgcd/error.h"
#include "qgcd/qpe.h"

using namespace qgcd;

namespace {

size_t count_kind(const Circuit &c, GateKind kind) {
    size_t n = 0;
    for (const Gate &g : c.gates) {
        n += g.kind == kind;
    }
    return n;
}

Circuit random_circuit(std::mt19937_64 &rng) {
    Circuit c;
    c.t = 1 + rng() % 8;
    c.work_dim = rng() % 2 ? 0 : 2 + rng() % 100;
    size_t n = rng() % 40;
    for (size_t i = 0; i < n; i++) {
        uint32_t q0 = rng() % c.t, q1 = rng() % c.t;
        int64_t num = int64_t(rng() % 31) - 15;
        uint64_t den = uint64_t{1} << (rng() % 10);
        switch (rng() % (c.work_dim ? 5 : 4)) {
            case 0:
                c.gates.push_back(Gate::h(q0));
                break;
            case 1:
                c.gates.push_back(Gate::cp(q0, q1, PiFraction{num, den}));
                break;
            case 2:
                c.gates.push_back(Gate::swap(q0, q1));
                break;
            case 3:
                c.gates.push_back(Gate::phase(q0, PiFraction{num, den}));
                break;
            default:
                c.gates.push_back(Gate::cmodadd(q0, rng() % c.work_dim, c.work_dim));
        }
    }
    for (uint32_t q = 0; q < c.t; q++) {
        if (rng() % 2) {
            c.gates.push_back(Gate::measure(q));
        }
    }
    return c;
}

}  // namespace

TEST(PiFraction, text_forms) {
    ASSERT_EQ((PiFraction{1, 8}).to_string(), "pi/8");
    ASSERT_EQ((PiFraction{-1, 2}).to_string(), "-pi/2");
    ASSERT_EQ((PiFraction{2, 8}).to_string(), "pi/4");
    ASSERT_EQ((PiFraction{3, 4}).to_string(), "3*pi/4");
    ASSERT_EQ((PiFraction{-6, 3}).to_string(), "-2*pi");
    ASSERT_EQ((PiFraction{1, 1}).to_string(), "pi");
    ASSERT_EQ((PiFraction{0, 7}).to_string(), "0");
    ASSERT_EQ(PiFraction::parse("-3*pi/16"), (PiFraction{-3, 16}));
    ASSERT_EQ(PiFraction::parse("pi"), (PiFraction{1, 1}));
    ASSERT_THROW(PiFraction::parse("0.5"), std::invalid_argument);
    ASSERT_THROW(PiFraction::parse("pi/0"), std::invalid_argument);
    ASSERT_THROW(PiFraction::parse("3pi"), std::invalid_argument);
}

TEST(build_qpe_circuit, x35_r40_structure) {
    Circuit c = build_qpe_circuit(35, 40, 4);
    ASSERT_EQ(c.t, 4u);
    ASSERT_EQ(c.work_dim, 40u);
    std::vector<uint64_t> addends;
    for (const Gate &g : c.gates) {
        if (g.kind == GateKind::CMODADD) {
            addends.push_back(g.addend);
        }
    }
    std::vector<uint64_t> want;
    for (uint32_t j = 0; j < 4; j++) {
        want.push_back(oracle::pow2_times(35, 40, j));
    }
    ASSERT_EQ(addends, want);
    ASSERT_EQ(addends, (std::vector<uint64_t>{35, 30, 20, 0}));
    for (uint32_t q = 0; q < 4; q++) {
        ASSERT_EQ(c.gates[q], Gate::h(q));
        ASSERT_EQ(c.gates[4 + q].q0, q);
    }
    // 4 preparation H + 4 IQFT H.
    ASSERT_EQ(count_kind(c, GateKind::H), 8u);
    ASSERT_EQ(count_kind(c, GateKind::CMODADD), 4u);
    ASSERT_EQ(count_kind(c, GateKind::MEASURE), 4u);
}

TEST(build_qpe_circuit, t1_structure) {
    Circuit c = build_qpe_circuit(3, 7, 1);
    ASSERT_EQ(c.gates.size(), 4u);
    ASSERT_EQ(c.gates[0], Gate::h(0));
    ASSERT_EQ(c.gates[1], Gate::cmodadd(0, 3, 7));
    ASSERT_EQ(c.gates[2], Gate::h(0));
    ASSERT_EQ(c.gates[3], Gate::measure(0));
}

TEST(build_qpe_circuit, trivial_instance_rejected) {
    ASSERT_THROW(build_qpe_circuit(40, 40, 3), TrivialInstance);
    ASSERT_THROW(build_qpe_circuit(80, 40, 3), TrivialInstance);
}

TEST(build_qpe_circuit, replay_matches_exact_distribution) {
    for (uint64_t r = 3; r <= 24; r++) {
        for (uint64_t x = 1; x < r; x++) {
            for (uint32_t t = 1; t <= 8; t++) {
                std::vector<double> got = simulate(build_qpe_circuit(x, r, t)).distribution();
                std::vector<double> want = exact_distribution(x, r, t);
                for (size_t m = 0; m < got.size(); m++) {
                    ASSERT_NEAR(got[m], want[m], 1e-10) << x << " " << r << " " << t << " " << m;
                }
            }
        }
    }
}

TEST(build_iqft_circuit, gate_counts) {
    ASSERT_EQ(build_iqft_circuit(1).gates, std::vector<Gate>{Gate::h(0)});
    Circuit c3 = build_iqft_circuit(3);
    ASSERT_EQ(count_kind(c3, GateKind::H), 3u);
    ASSERT_EQ(count_kind(c3, GateKind::CP), 3u);
    ASSERT_EQ(count_kind(c3, GateKind::SWAP), 1u);
    for (uint32_t t = 1; t <= 12; t++) {
        Circuit c = build_iqft_circuit(t);
        ASSERT_EQ(count_kind(c, GateKind::H), t);
        ASSERT_EQ(count_kind(c, GateKind::CP), t * (t - 1) / 2);
        ASSERT_EQ(count_kind(c, GateKind::SWAP), t / 2);
    }
}

TEST(build_iqft_circuit, angles_are_conjugated_textbook_rotations) {
    Circuit c = build_iqft_circuit(5);
    std::set<uint64_t> dens;
    for (const Gate &g : c.gates) {
        if (g.kind == GateKind::CP) {
            ASSERT_EQ(g.angle.num, -1);
            // -2 pi / 2^k with k = 2..t.
            dens.insert(g.angle.den * 2);
        }
    }
    ASSERT_EQ(dens, (std::set<uint64_t>{4, 8, 16, 32}));
}

TEST(build_iqft_circuit, matrix_equals_dft_adjoint) {
    for (uint32_t t = 1; t <= 6; t++) {
        Circuit c = build_iqft_circuit(t);
        auto mat = oracle::dft_adjoint(t);
        const uint64_t M = uint64_t{1} << t;
        for (uint64_t j = 0; j < M; j++) {
            StateVector s(t, 2);
            s.mutable_amplitudes()[0] = 0;
            s.mutable_amplitudes()[j * 2] = 1;
            s.apply_all(c.gates);
            for (uint64_t k = 0; k < M; k++) {
                ASSERT_NEAR(std::abs(s.amplitude(k, 0) - mat[k][j]), 0, 1e-10);
            }
        }
    }
}

TEST(emit_text, line_formats) {
    Circuit c;
    c.t = 3;
    c.work_dim = 40;
    c.gates = {Gate::h(0), Gate::cmodadd(2, 35, 40), Gate::cp(0, 1, PiFraction{-1, 8}), Gate::swap(0, 2),
               Gate::measure(1)};
    ASSERT_EQ(emit_text(c),
              "qreg q[3]; wreg w[40];\n"
              "h q[0]\n"
              "cmodadd(35,40) q[2], w\n"
              "cp(-pi/8) q[0], q[1]\n"
              "swap q[0], q[2]\n"
              "measure q[1]\n");
}

TEST(emit_text, x35_r40_circuit) {
    ASSERT_EQ(emit_text(build_qpe_circuit(35, 40, 2)),
              "qreg q[2]; wreg w[40];\n"
              "h q[0]\n"
              "h q[1]\n"
              "cmodadd(35,40) q[0], w\n"
              "cmodadd(30,40) q[1], w\n"
              "swap q[0], q[1]\n"
              "h q[0]\n"
              "cp(-pi/2) q[0], q[1]\n"
              "h q[1]\n"
              "measure q[0]\n"
              "measure q[1]\n");
}

TEST(emit_text, round_trip_property) {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 500; i++) {
        Circuit c = random_circuit(rng);
        std::string text = emit_text(c);
        Circuit back = parse_circuit(text);
        ASSERT_EQ(back, c) << text;
        ASSERT_EQ(emit_text(back), text);
    }
}

TEST(parse_circuit, rejects_malformed_text) {
    ASSERT_THROW(parse_circuit(""), std::invalid_argument);
    ASSERT_THROW(parse_circuit("h q[0]\n"), std::invalid_argument);
    ASSERT_THROW(parse_circuit("qreg q[2]; wreg w[5];\nx q[0]\n"), std::invalid_argument);
    ASSERT_THROW(parse_circuit("qreg q[2]; wreg w[5];\nh q[2]\n"), std::invalid_argument);
    ASSERT_THROW(parse_circuit("qreg q[2]; wreg w[5];\ncp(0.3) q[0], q[1]\n"), std::invalid_argument);
    ASSERT_THROW(parse_circuit("qreg q[2]; wreg w[5];\ncmodadd(3,6) q[0], w\n"), std::invalid_argument);
    ASSERT_THROW(parse_circuit("qreg q[2]; wreg w[5];\nmeasure q[0]\nh q[0]\n"), std::invalid_argument);
    ASSERT_THROW(parse_circuit("qreg q[2]; wreg w[5];\nh q[0];\n"), std::invalid_argument);
    // Comments and blank lines are skipped.
    Circuit c = parse_circuit("# header comment\nqreg q[1]; wreg w[0];\n\nh q[0]\n# trailing\n");
    ASSERT_EQ(c.gates, std::vector<Gate>{Gate::h(0)});
}

TEST(resource_report, x35_r40_counts) {
    Circuit c = build_qpe_circuit(35, 40, 4);
    ResourceReport rep = resource_report(c, 0.25);
    ASSERT_EQ(rep.L, 6u);
    ASSERT_EQ(rep.t_this, 9u);
    ASSERT_EQ(rep.t_shor, 15u);
    ASSERT_EQ(rep.modadd_macros, 4u);
    ASSERT_EQ(rep.modadd_elementary_estimate, 4u * (4 * 6 + 2));
    ASSERT_EQ(rep.modadd_elementary_estimate, 104u);
    ASSERT_EQ(rep.smallest_phase_angle, (PiFraction{1, 8}));
    ASSERT_NEAR(rep.smallest_phase_angle.radians(), std::numbers::pi / 8, 1e-15);
    ASSERT_EQ(rep.hadamards, 8u);
    ASSERT_EQ(rep.cphases, 6u);
    ASSERT_EQ(rep.measurements, 4u);
    ASSERT_THROW(resource_report(c, 0.0), std::domain_error);
    ASSERT_THROW(resource_report(c, 1.0), std::domain_error);
    ASSERT_THROW(resource_report(c, -0.5), std::domain_error);
}

TEST(resource_report, qubit_saving_holds_for_all_widths) {
    for (uint64_t r = 2; r < 4096; r = r * 3 / 2 + 1) {
        for (double eps : {0.5, 0.25, 0.1, 1e-3}) {
            uint32_t t = 3;
            uint64_t x = 1;
            ResourceReport rep = resource_report(build_qpe_circuit(x, r, t), eps);
            ASSERT_GE(rep.L, 1u);
            ASSERT_LT(rep.t_this, rep.t_shor);
            ASSERT_EQ(rep.t_shor - rep.t_this, rep.L);
        }
    }
}
