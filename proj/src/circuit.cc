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

#include <charconv>
#include <sstream>
#include <stdexcept>

#include "qgcd/error.h"
#include "qgcd/numerics.h"

namespace qgcd {

uint32_t Circuit::work_bits() const {
    return work_dim == 0 ? 0 : ceil_log2(work_dim);
}

void Circuit::validate() const {
    std::vector<bool> measured(t, false);
    auto check = [&](uint32_t q, size_t index) {
        if (q >= t) {
            throw std::invalid_argument("gate " + std::to_string(index) + " uses qubit " + std::to_string(q) +
                                        " but the control register has " + std::to_string(t));
        }
        if (measured[q]) {
            throw std::invalid_argument("gate " + std::to_string(index) + " acts on qubit " + std::to_string(q) +
                                        " after it was measured");
        }
    };
    for (size_t i = 0; i < gates.size(); i++) {
        const Gate &g = gates[i];
        check(g.q0, i);
        switch (g.kind) {
            case GateKind::CP:
            case GateKind::SWAP:
                check(g.q1, i);
                break;
            case GateKind::CMODADD:
                if (work_dim == 0 || g.modulus != work_dim || g.addend >= work_dim) {
                    throw std::invalid_argument("gate " + std::to_string(i) + " has an invalid cmodadd");
                }
                break;
            case GateKind::MEASURE:
                measured[g.q0] = true;
                break;
            default:
                break;
        }
    }
}

Circuit build_qpe_circuit(uint64_t x, uint64_t r, uint32_t t) {
    ProblemInstance inst = ProblemInstance::make(x, r);
    if (inst.trivial()) {
        throw TrivialInstance("x = " + std::to_string(x) + " is 0 mod r = " + std::to_string(r) +
                              "; N = 1 and no circuit is needed");
    }
    if (t == 0 || t > kMaxControlQubits) {
        throw ResourceError("t must lie in [1, " + std::to_string(kMaxControlQubits) + "]");
    }
    Circuit c;
    c.t = t;
    c.work_dim = r;
    c.provenance = CircuitProvenance{x, r, t, std::nullopt};
    for (uint32_t q = 0; q < t; q++) {
        c.gates.push_back(Gate::h(q));
    }
    std::vector<uint64_t> addends = precompute_multiples(x, r, t);
    for (uint32_t j = 0; j < t; j++) {
        c.gates.push_back(Gate::cmodadd(j, addends[j], r));
    }
    for (const Gate &g : inverse_qft_gates(t)) {
        c.gates.push_back(g);
    }
    for (uint32_t q = 0; q < t; q++) {
        c.gates.push_back(Gate::measure(q));
    }
    return c;
}

Circuit build_iqft_circuit(uint32_t t) {
    if (t == 0 || t > kMaxControlQubits) {
        throw std::domain_error("t must lie in [1, " + std::to_string(kMaxControlQubits) + "]");
    }
    Circuit c;
    c.t = t;
    c.gates = inverse_qft_gates(t);
    return c;
}

std::string emit_text(const Circuit &circuit) {
    std::ostringstream out;
    out << "qreg q[" << circuit.t << "]; wreg w[" << circuit.work_dim << "];\n";
    for (const Gate &g : circuit.gates) {
        switch (g.kind) {
            case GateKind::H:
                out << "h q[" << g.q0 << "]\n";
                break;
            case GateKind::PHASE:
                out << "p(" << g.angle.to_string() << ") q[" << g.q0 << "]\n";
                break;
            case GateKind::CP:
                out << "cp(" << g.angle.to_string() << ") q[" << g.q0 << "], q[" << g.q1 << "]\n";
                break;
            case GateKind::SWAP:
                out << "swap q[" << g.q0 << "], q[" << g.q1 << "]\n";
                break;
            case GateKind::CMODADD:
                out << "cmodadd(" << g.addend << "," << g.modulus << ") q[" << g.q0 << "], w\n";
                break;
            case GateKind::MEASURE:
                out << "measure q[" << g.q0 << "]\n";
                break;
        }
    }
    return out.str();
}

namespace {

// Cursor over one line of circuit text; every expect_* throws on mismatch.
class LineParser {
   public:
    LineParser(std::string_view line, size_t line_no) : rest_(line), line_no_(line_no) {
    }

    [[noreturn]] void fail(const std::string &why) const {
        throw std::invalid_argument("circuit text line " + std::to_string(line_no_) + ": " + why);
    }

    bool consume(std::string_view token) {
        if (rest_.substr(0, token.size()) == token) {
            rest_.remove_prefix(token.size());
            return true;
        }
        return false;
    }

    void expect(std::string_view token) {
        if (!consume(token)) {
            fail("expected '" + std::string(token) + "' at '" + std::string(rest_) + "'");
        }
    }

    uint64_t number() {
        uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(rest_.data(), rest_.data() + rest_.size(), v);
        if (ec != std::errc() || ptr == rest_.data()) {
            fail("expected a number at '" + std::string(rest_) + "'");
        }
        rest_.remove_prefix(ptr - rest_.data());
        return v;
    }

    uint32_t qubit() {
        expect("q[");
        uint64_t q = number();
        expect("]");
        if (q > UINT32_MAX) {
            fail("qubit index too large");
        }
        return static_cast<uint32_t>(q);
    }

    std::string_view until(char c) {
        size_t at = rest_.find(c);
        if (at == std::string_view::npos) {
            fail(std::string("missing '") + c + "'");
        }
        std::string_view out = rest_.substr(0, at);
        rest_.remove_prefix(at);
        return out;
    }

    PiFraction angle() {
        std::string_view text = until(')');
        try {
            return PiFraction::parse(text);
        } catch (const std::invalid_argument &e) {
            fail(e.what());
        }
    }

    void finish() const {
        if (!rest_.empty()) {
            fail("trailing text '" + std::string(rest_) + "'");
        }
    }

   private:
    std::string_view rest_;
    size_t line_no_;
};

}  // namespace

Circuit parse_circuit(std::string_view text) {
    Circuit c;
    bool have_header = false;
    size_t line_no = 0;
    while (!text.empty()) {
        size_t nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
        line_no++;
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        if (line.empty() || line.front() == '#') {
            continue;
        }
        LineParser p(line, line_no);
        if (!have_header) {
            p.expect("qreg q[");
            uint64_t t = p.number();
            p.expect("]; wreg w[");
            c.work_dim = p.number();
            p.expect("];");
            p.finish();
            if (t > kMaxControlQubits) {
                p.fail("control register too large");
            }
            c.t = static_cast<uint32_t>(t);
            have_header = true;
            continue;
        }
        if (p.consume("h ")) {
            c.gates.push_back(Gate::h(p.qubit()));
        } else if (p.consume("p(")) {
            PiFraction a = p.angle();
            p.expect(") ");
            c.gates.push_back(Gate::phase(p.qubit(), a));
        } else if (p.consume("cp(")) {
            PiFraction a = p.angle();
            p.expect(") ");
            uint32_t q0 = p.qubit();
            p.expect(", ");
            c.gates.push_back(Gate::cp(q0, p.qubit(), a));
        } else if (p.consume("swap ")) {
            uint32_t q0 = p.qubit();
            p.expect(", ");
            c.gates.push_back(Gate::swap(q0, p.qubit()));
        } else if (p.consume("cmodadd(")) {
            uint64_t addend = p.number();
            p.expect(",");
            uint64_t modulus = p.number();
            p.expect(") ");
            uint32_t q0 = p.qubit();
            p.expect(", w");
            c.gates.push_back(Gate::cmodadd(q0, addend, modulus));
        } else if (p.consume("measure ")) {
            c.gates.push_back(Gate::measure(p.qubit()));
        } else {
            p.fail("unknown instruction '" + std::string(line) + "'");
        }
        p.finish();
    }
    if (!have_header) {
        throw std::invalid_argument("circuit text: missing 'qreg q[t]; wreg w[r];' header");
    }
    c.validate();
    return c;
}

ResourceReport resource_report(const Circuit &circuit, double epsilon) {
    const uint32_t pad = accuracy_padding_bits(epsilon);
    ResourceReport rep;
    rep.L = circuit.work_bits();
    rep.t = circuit.t;
    rep.t_this = rep.L + 1 + pad;
    rep.t_shor = 2 * rep.L + 1 + pad;
    for (const Gate &g : circuit.gates) {
        switch (g.kind) {
            case GateKind::H:
                rep.hadamards++;
                break;
            case GateKind::PHASE:
            case GateKind::CP:
                rep.cphases++;
                break;
            case GateKind::SWAP:
                rep.swaps++;
                break;
            case GateKind::CMODADD:
                rep.modadd_macros++;
                break;
            case GateKind::MEASURE:
                rep.measurements++;
                break;
        }
    }
    rep.modadd_elementary_estimate = rep.modadd_macros * (4 * uint64_t{rep.L} + 2);
    if (circuit.t >= 1) {
        rep.smallest_phase_angle = PiFraction{1, uint64_t{1} << (circuit.t - 1)};
    }
    return rep;
}

std::string format_report(const ResourceReport &report) {
    std::ostringstream out;
    out << "control qubits t: " << report.t << "\n";
    out << "work bits L: " << report.L << "\n";
    out << "t_this (L+1+pad): " << report.t_this << "\n";
    out << "t_shor (2L+1+pad): " << report.t_shor << "\n";
    out << "hadamards: " << report.hadamards << "\n";
    out << "controlled phases: " << report.cphases << "\n";
    out << "swaps: " << report.swaps << "\n";
    out << "measurements: " << report.measurements << "\n";
    out << "modadd macros: " << report.modadd_macros << "\n";
    out << "modadd elementary estimate (4L+2 per adder): " << report.modadd_elementary_estimate
        << "\n";
    out << "smallest angle " << report.smallest_phase_angle.to_string() << "\n";
    return out.str();
}

StateVector simulate(const Circuit &circuit) {
    circuit.validate();
    StateVector state(circuit.t, circuit.work_dim == 0 ? 2 : circuit.work_dim);
    for (const Gate &g : circuit.gates) {
        if (g.kind != GateKind::MEASURE) {
            state.apply(g);
        }
    }
    return state;
}

}  // namespace qgcd
