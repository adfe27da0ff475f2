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

"""Phase-estimation GCD simulator."""

from qgcd._qgcd import (
    ProblemInstance,
    Rational,
    RecoveredFraction,
    ResourceError,
    TrivialInstance,
    cf_convergents,
    canonical_circuit_text,
    choose_t,
    eigenstate,
    emit_circuit,
    exact_distribution,
    lcm,
    precompute_multiples,
    protocol_a,
    protocol_b,
    recover_fraction,
    reduce_fraction,
    resource_report,
    run_kitaev_qpe,
    run_statevector_qpe,
    statevector_distribution,
    stein_gcd,
    verify,
)

__all__ = [
    "ProblemInstance",
    "Rational",
    "RecoveredFraction",
    "ResourceError",
    "TrivialInstance",
    "cf_convergents",
    "canonical_circuit_text",
    "choose_t",
    "eigenstate",
    "emit_circuit",
    "exact_distribution",
    "lcm",
    "precompute_multiples",
    "protocol_a",
    "protocol_b",
    "recover_fraction",
    "reduce_fraction",
    "resource_report",
    "run_kitaev_qpe",
    "run_statevector_qpe",
    "statevector_distribution",
    "stein_gcd",
    "verify",
]
