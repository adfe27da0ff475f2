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

#include "cli.h"

#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qgcd/circuit.h"
#include "qgcd/error.h"
#include "qgcd/numerics.h"
#include "qgcd/qpe.h"
#include "qgcd/verify.h"

namespace qgcd::cli {

namespace {

std::string fmt12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

// Writes to --out when given, otherwise to `out`.
int emit(const CliConfig &config, std::ostream &out, std::ostream &err, const std::string &text) {
    if (config.out.empty() || config.out == "-") {
        out << text;
        return kSuccess;
    }
    std::ofstream file(config.out, std::ios::binary | std::ios::trunc);
    if (!file) {
        err << "error: cannot open '" << config.out << "' for writing\n";
        return kUsage;
    }
    file << text;
    return kSuccess;
}

void require_inputs(const CliConfig &config) {
    if (!config.x || !config.r) {
        throw std::invalid_argument("--x and --r are required");
    }
    if (*config.x < 1) {
        throw std::invalid_argument("--x must be at least 1");
    }
    if (*config.r < 2) {
        throw std::invalid_argument("--r must be at least 2");
    }
}

uint32_t resolve_t(const CliConfig &config) {
    if (config.t == "auto") {
        return choose_t(*config.r, config.epsilon).t;
    }
    uint64_t t = 0;
    std::istringstream in(config.t);
    if (!(in >> t) || !in.eof() || t == 0) {
        throw std::invalid_argument("--t must be a positive integer or 'auto'");
    }
    if (t > kMaxControlQubits) {
        throw ResourceError("--t " + config.t + " exceeds the limit of " + std::to_string(kMaxControlQubits));
    }
    return static_cast<uint32_t>(t);
}

int guarded(std::ostream &err, const std::function<int()> &body) {
    try {
        return body();
    } catch (const ResourceError &e) {
        err << "resource limit: " << e.what() << "\n";
        return kResource;
    } catch (const TrivialInstance &e) {
        err << "trivial instance: " << e.what() << "\n";
        return kUsage;
    } catch (const std::overflow_error &e) {
        err << "resource limit: " << e.what() << "\n";
        return kResource;
    } catch (const std::logic_error &e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
}

std::string render_gcd_text(const RunRecord &rec) {
    std::ostringstream s;
    if (rec.claimed_gcd) {
        s << "gcd = " << *rec.claimed_gcd << "\n";
        s << "N = " << rec.instance.r / *rec.claimed_gcd << "\n";
    } else {
        s << "gcd = failed\n";
    }
    s << "x = " << rec.instance.x << ", r = " << rec.instance.r << ", t = " << rec.config.t
      << ", epsilon = " << fmt12(rec.config.epsilon) << ", protocol = " << rec.config.protocol
      << ", method = " << to_string(rec.config.method) << ", seed = " << rec.config.seed << "\n";
    if (rec.config.protocol == 'a') {
        for (size_t i = 0; i < rec.samples.size(); i++) {
            const RecoveredFraction &f = rec.recoveries[i];
            s << "rep " << i << ": m = " << rec.samples[i].m_out << ", p = " << f.p << ", s/N = " << f.reduced
              << "\n";
        }
    } else {
        for (size_t i = 0; i < rec.iterations.size(); i++) {
            const IterationStep &st = rec.iterations[i];
            s << "round " << i << ": x = " << st.x_i << ", r = " << st.r_i;
            if (st.quantum) {
                s << ", draws =";
                for (const PhaseEstimate &d : st.draws) {
                    s << " " << d.m_out;
                }
                s << ", s/N = " << st.s_over_N;
            } else {
                s << ", r divides x";
            }
            s << ", candidate = " << st.candidate << ", alternative = " << st.alternative;
            if (st.stuck) {
                s << ", stuck";
            }
            s << "\n";
        }
    }
    if (!rec.claimed_gcd) {
        s << "diagnostic: " << rec.diagnostic << "\n";
    }
    return s.str();
}

}  // namespace

int cmd_gcd(const CliConfig &config, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        require_inputs(config);
        const uint64_t x = *config.x, r = *config.r;
        const SampleMethod method = parse_sample_method(config.method);
        RunRecord rec;
        if (config.protocol == "a") {
            rec = protocol_a(x, r, config.epsilon, config.reps, config.seed, method);
        } else if (config.protocol == "b") {
            rec = protocol_b(x, r, config.epsilon, config.seed, 0, method);
        } else {
            throw std::invalid_argument("--protocol must be a or b");
        }
        if (rec.claimed_gcd && (x % *rec.claimed_gcd != 0 || r % *rec.claimed_gcd != 0)) {
            rec.diagnostic = "claimed " + std::to_string(*rec.claimed_gcd) + " does not divide both inputs";
            rec.claimed_gcd.reset();
        }
        std::string text = config.format == "json" ? run_record_json(rec) : render_gcd_text(rec);
        int code = emit(config, out, err, text);
        if (code != kSuccess) {
            return code;
        }
        if (!rec.claimed_gcd) {
            err << "protocol failed: " << rec.diagnostic << "\n";
            return int{kProtocolFailed};
        }
        return int{kSuccess};
    });
}

int cmd_dist(const CliConfig &config, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        require_inputs(config);
        const uint64_t x = *config.x, r = *config.r;
        const uint32_t t = resolve_t(config);
        const SampleMethod method = parse_sample_method(config.method);
        std::vector<double> probs;
        if (method == SampleMethod::Exact) {
            probs = exact_distribution(x, r, t);
        } else {
            if (config.shots == 0) {
                throw std::invalid_argument("--shots must be positive");
            }
            PhaseSampler sampler(ProblemInstance::make(x, r), t, method);
            std::mt19937_64 rng(config.seed);
            std::vector<uint64_t> counts(uint64_t{1} << t, 0);
            for (uint64_t s = 0; s < config.shots; s++) {
                counts[sampler.draw(rng)]++;
            }
            probs.resize(counts.size());
            for (size_t m = 0; m < counts.size(); m++) {
                probs[m] = static_cast<double>(counts[m]) / static_cast<double>(config.shots);
            }
        }
        std::ostringstream s;
        if (config.format == "json") {
            nlohmann::ordered_json j;
            j["x"] = x;
            j["r"] = r;
            j["t"] = t;
            j["method"] = to_string(method);
            if (method != SampleMethod::Exact) {
                j["shots"] = config.shots;
                j["seed"] = config.seed;
            }
            j["probabilities"] = probs;
            s << j.dump(2) << "\n";
        } else {
            s << "m,probability\n";
            for (size_t m = 0; m < probs.size(); m++) {
                s << m << "," << fmt12(probs[m]) << "\n";
            }
        }
        return emit(config, out, err, s.str());
    });
}

int cmd_circuit(const CliConfig &config, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        require_inputs(config);
        const uint32_t t = resolve_t(config);
        Circuit c = build_qpe_circuit(*config.x, *config.r, t);
        c.provenance->epsilon = config.epsilon;
        ResourceReport rep = resource_report(c, config.epsilon);
        std::ostringstream s;
        if (config.format == "json") {
            nlohmann::ordered_json j;
            j["circuit"] = emit_text(c);
            j["report"] = {
                {"t", rep.t},
                {"L", rep.L},
                {"t_this", rep.t_this},
                {"t_shor", rep.t_shor},
                {"hadamards", rep.hadamards},
                {"cphases", rep.cphases},
                {"swaps", rep.swaps},
                {"measurements", rep.measurements},
                {"modadd_macros", rep.modadd_macros},
                {"modadd_elementary_estimate", rep.modadd_elementary_estimate},
                {"smallest_phase_angle", rep.smallest_phase_angle.to_string()},
            };
            s << j.dump(2) << "\n";
        } else {
            s << emit_text(c);
            std::istringstream lines(format_report(rep));
            std::string line;
            while (std::getline(lines, line)) {
                s << "# " << line << "\n";
            }
        }
        return emit(config, out, err, s.str());
    });
}

int cmd_verify(const CliConfig &config, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        VerifyOptions opts;
        opts.quick = config.quick;
        opts.inject_phase_fault = config.inject_fault;
        std::vector<CheckResult> results = run_verify_suite(opts);
        std::ostringstream s;
        bool all = true;
        for (const CheckResult &res : results) {
            all = all && res.passed;
            s << (res.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(52) << res.name << std::right
              << std::fixed << std::setprecision(2) << std::setw(8) << res.seconds << "s";
            if (!res.passed) {
                s << "  " << res.detail;
            }
            s << "\n";
        }
        s << (all ? "all invariants hold\n" : "invariant violations found\n");
        int code = emit(config, out, err, s.str());
        if (code != kSuccess) {
            return code;
        }
        return all ? int{kSuccess} : int{kCheckFailed};
    });
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Quantum phase-estimation GCD simulator", "qgcd"};
    app.require_subcommand(1);
    CliConfig config;

    auto add_instance = [&](CLI::App *sub) {
        sub->add_option("--x", config.x, "First input, x >= 1");
        sub->add_option("--r", config.r, "Second input and modulus, r >= 2");
        sub->add_option("--epsilon", config.epsilon, "Allowed failure probability in (0, 1)")->capture_default_str();
        sub->add_option("--seed", config.seed, "RNG seed")->capture_default_str();
        sub->add_option("--out", config.out, "Output path (default stdout)");
    };

    CLI::App *gcd = app.add_subcommand("gcd", "Run a GCD protocol");
    add_instance(gcd);
    gcd->add_option("--protocol", config.protocol, "a: largest N over repetitions; b: iterative replacement")
        ->check(CLI::IsMember({"a", "b"}))
        ->capture_default_str();
    gcd->add_option("--reps", config.reps, "Repetitions for protocol a")->capture_default_str();
    gcd->add_option("--method", config.method, "exact|statevector|kitaev")
        ->check(CLI::IsMember({"exact", "statevector", "kitaev"}))
        ->capture_default_str();
    gcd->add_option("--format", config.format, "text|json")->check(CLI::IsMember({"text", "json"}));

    CLI::App *dist = app.add_subcommand("dist", "Write the measurement distribution");
    add_instance(dist);
    dist->add_option("--t", config.t, "Control qubits, or 'auto'")->capture_default_str();
    dist->add_option("--method", config.method, "exact|statevector|kitaev")
        ->check(CLI::IsMember({"exact", "statevector", "kitaev"}))
        ->capture_default_str();
    dist->add_option("--shots", config.shots, "Shots for sampled methods")->capture_default_str();
    dist->add_option("--format", config.format, "csv|json|text")->check(CLI::IsMember({"csv", "json", "text"}));

    CLI::App *circ = app.add_subcommand("circuit", "Emit the phase-estimation circuit and resource report");
    add_instance(circ);
    circ->add_option("--t", config.t, "Control qubits, or 'auto'")->capture_default_str();
    circ->add_option("--format", config.format, "text|json")->check(CLI::IsMember({"text", "json"}));

    CLI::App *verify = app.add_subcommand("verify", "Run the small-instance invariant suite");
    verify->add_flag("--quick", config.quick, "Only instances with r <= 24");
    verify->add_flag("--inject-fault", config.inject_fault, "Negative control: expect the wrong eigenphase sign")
        ->group("");
    verify->add_option("--out", config.out, "Output path (default stdout)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError &e) {
        std::string help;
        for (CLI::App *sub : app.get_subcommands()) {
            help = sub->help();
        }
        err << "error: " << e.what() << "\n" << (help.empty() ? app.help() : help);
        return kUsage;
    }

    if (gcd->parsed()) {
        return cmd_gcd(config, out, err);
    }
    if (dist->parsed()) {
        return cmd_dist(config, out, err);
    }
    if (circ->parsed()) {
        return cmd_circuit(config, out, err);
    }
    return cmd_verify(config, out, err);
}

}  // namespace qgcd::cli
