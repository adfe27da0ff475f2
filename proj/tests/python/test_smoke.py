# Copyright 2026 The qgcd Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import cmath
import math

import numpy as np
import pytest

import qgcd


def double_sum(x, r, t):
    n = next(k for k in range(1, r + 1) if (k * x) % r == 0)
    size = 2**t
    out = []
    for m in range(size):
        total = 0.0
        for a in range(n):
            acc = sum(cmath.exp(-2j * math.pi * j * m / size) for j in range(a, size, n))
            total += abs(acc) ** 2
        out.append(total / size**2)
    return np.array(out)


def test_gcd_helpers():
    assert qgcd.stein_gcd(35, 40) == 5
    assert qgcd.lcm(35, 40) == 280
    assert qgcd.precompute_multiples(35, 40, 4) == [35, 30, 20, 0]
    inst = qgcd.ProblemInstance(21, 126)
    assert (inst.N, inst.L, inst.gcd()) == (6, 7, 21)
    f = qgcd.reduce_fraction(84, 126)
    assert (f.num, f.den) == (2, 3)


def test_x35_r40_distribution():
    p = qgcd.exact_distribution(35, 40, 4)
    assert p.shape == (16,)
    np.testing.assert_allclose(p, [0.125 if m % 2 == 0 else 0.0 for m in range(16)], atol=1e-12)


@pytest.mark.parametrize("x,r,t", [(21, 126, 4), (4, 30, 5), (7, 9, 3)])
def test_distributions_match_python_double_sum(x, r, t):
    want = double_sum(x, r, t)
    np.testing.assert_allclose(qgcd.exact_distribution(x, r, t), want, atol=1e-12)
    np.testing.assert_allclose(qgcd.statevector_distribution(x, r, t), want, atol=1e-10)


def test_recover_fraction():
    f = qgcd.recover_fraction(2, 4, 40)
    assert f.p == 5
    assert (f.reduced.num, f.reduced.den) == (1, 8)
    assert f.exact
    assert qgcd.choose_t(40) == 9


def test_eigenstate_eigenvalue():
    x, r, s = 35, 40, 3
    psi = qgcd.eigenstate(x, r, s)
    moved = np.roll(psi, x)
    np.testing.assert_allclose(moved, cmath.exp(2j * math.pi * s / 8) * psi, atol=1e-12)


def test_kitaev_sampling_is_seeded():
    a = qgcd.run_kitaev_qpe(35, 40, 4, 5000, seed=3)
    b = qgcd.run_kitaev_qpe(35, 40, 4, 5000, seed=3)
    np.testing.assert_array_equal(a, b)
    hist = np.bincount(a, minlength=16) / len(a)
    assert 0.5 * np.abs(hist - qgcd.exact_distribution(35, 40, 4)).sum() < 0.05


def test_protocols():
    rec = qgcd.protocol_a(35, 40, seed=1)
    assert rec["gcd"] == 5
    assert rec["N_hat"] == 8
    rec = qgcd.protocol_b(21, 126, epsilon=1e-5, seed=7, method="kitaev")
    assert rec["gcd"] == 21


def test_circuit_and_report():
    text = qgcd.emit_circuit(35, 40, 4)
    assert text.startswith("qreg q[4]; wreg w[40];\n")
    assert "cmodadd(35,40) q[0], w\n" in text
    assert qgcd.canonical_circuit_text(text) == text
    rep = qgcd.resource_report(35, 40, 4)
    assert (rep["t_this"], rep["t_shor"], rep["modadd_elementary_estimate"]) == (9, 15, 104)
    assert rep["smallest_phase_angle"] == "pi/8"


def test_errors():
    with pytest.raises(qgcd.TrivialInstance):
        qgcd.emit_circuit(40, 40, 3)
    with pytest.raises(ValueError):
        qgcd.ProblemInstance(0, 5)
    with pytest.raises(ValueError):
        qgcd.canonical_circuit_text("h q[0]\n")
    with pytest.raises(qgcd.ResourceError):
        qgcd.statevector_distribution(3, 1000, 24)


def test_verify_quick():
    results = qgcd.verify(quick=True)
    assert results
    assert all(r["passed"] for r in results), results
