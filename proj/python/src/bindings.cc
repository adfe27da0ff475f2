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

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qgcd/circuit.h"
#include "qgcd/error.h"
#include "qgcd/numerics.h"
#include "qgcd/qpe.h"
#include "qgcd/verify.h"

namespace py = pybind11;
using namespace qgcd;

namespace {

template <typename T>
py::array_t<T> to_array(const std::vector<T> &v) {
    py::array_t<T> out(static_cast<py::ssize_t>(v.size()));
    std::copy(v.begin(), v.end(), out.mutable_data());
    return out;
}

std::vector<uint64_t> outcomes(const std::vector<PhaseEstimate> &draws) {
    std::vector<uint64_t> out;
    out.reserve(draws.size());
    for (const PhaseEstimate &e : draws) {
        out.push_back(e.m_out);
    }
    return out;
}

py::object parse_json(const std::string &text) {
    return py::module_::import("json").attr("loads")(text);
}

py::dict report_dict(const ResourceReport &rep) {
    py::dict d;
    d["t"] = rep.t;
    d["L"] = rep.L;
    d["t_this"] = rep.t_this;
    d["t_shor"] = rep.t_shor;
    d["hadamards"] = rep.hadamards;
    d["cphases"] = rep.cphases;
    d["swaps"] = rep.swaps;
    d["measurements"] = rep.measurements;
    d["modadd_macros"] = rep.modadd_macros;
    d["modadd_elementary_estimate"] = rep.modadd_elementary_estimate;
    d["smallest_phase_angle"] = rep.smallest_phase_angle.to_string();
    return d;
}

}  // namespace

PYBIND11_MODULE(_qgcd, m) {
    m.doc() = "Phase-estimation GCD simulator";

    py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
    py::register_exception<TrivialInstance>(m, "TrivialInstance", PyExc_ValueError);

    m.def("stein_gcd", &stein_gcd, py::arg("a"), py::arg("b"));
    m.def("lcm", &qgcd::lcm, py::arg("a"), py::arg("b"));
    m.def("precompute_multiples", &precompute_multiples, py::arg("x"), py::arg("r"), py::arg("t"));

    py::class_<Rational>(m, "Rational")
        .def(py::init<>())
        .def_readonly("num", &Rational::num)
        .def_readonly("den", &Rational::den)
        .def("__float__", &Rational::to_double)
        .def("__eq__", [](const Rational &a, const Rational &b) { return a == b; })
        .def("__repr__", [](const Rational &a) {
            return "Rational(" + std::to_string(a.num) + ", " + std::to_string(a.den) + ")";
        });
    m.def("reduce_fraction", &reduce_fraction, py::arg("p"), py::arg("q"));
    m.def("cf_convergents", [](uint64_t num, uint64_t den, uint64_t bound) {
        return cf_convergents(Rational{num, den}, bound);
    }, py::arg("num"), py::arg("den"), py::arg("bound"));

    py::class_<ProblemInstance>(m, "ProblemInstance")
        .def(py::init(&ProblemInstance::make), py::arg("x"), py::arg("r"))
        .def_readonly("x", &ProblemInstance::x)
        .def_readonly("r", &ProblemInstance::r)
        .def_readonly("addend", &ProblemInstance::addend)
        .def_readonly("L", &ProblemInstance::L)
        .def_readonly("N", &ProblemInstance::N)
        .def_readonly("P", &ProblemInstance::P)
        .def_readonly("k", &ProblemInstance::k)
        .def("gcd", &ProblemInstance::gcd)
        .def("trivial", &ProblemInstance::trivial);

    py::class_<RecoveredFraction>(m, "RecoveredFraction")
        .def_readonly("p", &RecoveredFraction::p)
        .def_readonly("r", &RecoveredFraction::r)
        .def_readonly("reduced", &RecoveredFraction::reduced)
        .def_readonly("exact", &RecoveredFraction::exact);

    m.def("choose_t", [](uint64_t r, double epsilon) { return choose_t(r, epsilon).t; }, py::arg("r"),
          py::arg("epsilon") = 0.25);
    m.def("recover_fraction", &recover_fraction, py::arg("m_out"), py::arg("t"), py::arg("r"));
    m.def("exact_distribution", [](uint64_t x, uint64_t r, uint32_t t) {
        return to_array(exact_distribution(x, r, t));
    }, py::arg("x"), py::arg("r"), py::arg("t"));
    m.def("statevector_distribution", [](uint64_t x, uint64_t r, uint32_t t) {
        return to_array(run_qpe_pipeline(x, r, t).distribution());
    }, py::arg("x"), py::arg("r"), py::arg("t"));
    m.def("eigenstate", [](uint64_t x, uint64_t r, uint64_t s, uint64_t y) {
        return to_array(eigenstate(x, r, s, y));
    }, py::arg("x"), py::arg("r"), py::arg("s"), py::arg("y") = 0);
    m.def("run_statevector_qpe", [](uint64_t x, uint64_t r, uint32_t t, uint64_t shots, uint64_t seed) {
        return to_array(outcomes(run_statevector_qpe(x, r, t, shots, seed)));
    }, py::arg("x"), py::arg("r"), py::arg("t"), py::arg("shots"), py::arg("seed") = 0);
    m.def("run_kitaev_qpe", [](uint64_t x, uint64_t r, uint32_t t, uint64_t shots, uint64_t seed) {
        return to_array(outcomes(run_kitaev_qpe(x, r, t, shots, seed)));
    }, py::arg("x"), py::arg("r"), py::arg("t"), py::arg("shots"), py::arg("seed") = 0);

    m.def("protocol_a", [](uint64_t x, uint64_t r, double epsilon, uint64_t reps, uint64_t seed,
                           const std::string &method) {
        return parse_json(run_record_json(protocol_a(x, r, epsilon, reps, seed, parse_sample_method(method))));
    }, py::arg("x"), py::arg("r"), py::arg("epsilon") = 0.25, py::arg("reps") = 20, py::arg("seed") = 0,
          py::arg("method") = "exact");
    m.def("protocol_b", [](uint64_t x, uint64_t r, double epsilon, uint64_t seed, uint64_t max_iters,
                           const std::string &method) {
        return parse_json(
            run_record_json(protocol_b(x, r, epsilon, seed, max_iters, parse_sample_method(method))));
    }, py::arg("x"), py::arg("r"), py::arg("epsilon") = 0.25, py::arg("seed") = 0, py::arg("max_iters") = 0,
          py::arg("method") = "exact");

    m.def("emit_circuit", [](uint64_t x, uint64_t r, uint32_t t) { return emit_text(build_qpe_circuit(x, r, t)); },
          py::arg("x"), py::arg("r"), py::arg("t"));
    m.def("canonical_circuit_text", [](const std::string &text) { return emit_text(parse_circuit(text)); },
          py::arg("text"));
    m.def("resource_report", [](uint64_t x, uint64_t r, uint32_t t, double epsilon) {
        return report_dict(resource_report(build_qpe_circuit(x, r, t), epsilon));
    }, py::arg("x"), py::arg("r"), py::arg("t"), py::arg("epsilon") = 0.25);

    m.def("verify", [](bool quick) {
        VerifyOptions opts;
        opts.quick = quick;
        py::list out;
        for (const CheckResult &res : run_verify_suite(opts)) {
            py::dict d;
            d["name"] = res.name;
            d["passed"] = res.passed;
            d["detail"] = res.detail;
            out.append(d);
        }
        return out;
    }, py::arg("quick") = true);
}
