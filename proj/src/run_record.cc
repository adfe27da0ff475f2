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

#include <string>

#include "json.hpp"
#include "qgcd/qpe.h"

namespace qgcd {

std::string run_record_json(const RunRecord &record, int indent) {
    using nlohmann::ordered_json;
    ordered_json j;
    j["instance"] = {
        {"x", record.instance.x},
        {"r", record.instance.r},
        {"L", record.instance.L},
        {"N", record.instance.N},
    };
    j["config"] = {
        {"t", record.config.t},
        {"epsilon", record.config.epsilon},
        {"shots", record.config.shots},
        {"seed", record.config.seed},
        {"protocol", std::string(1, record.config.protocol)},
        {"method", to_string(record.config.method)},
    };
    ordered_json samples = ordered_json::array();
    for (const PhaseEstimate &s : record.samples) {
        samples.push_back({{"m", s.m_out}, {"t", s.t}});
    }
    j["samples"] = std::move(samples);
    ordered_json recoveries = ordered_json::array();
    for (const RecoveredFraction &f : record.recoveries) {
        recoveries.push_back({
            {"p", f.p},
            {"r", f.r},
            {"s", f.reduced.num},
            {"N", f.reduced.den},
            {"exact", f.exact},
        });
    }
    j["recoveries"] = std::move(recoveries);
    ordered_json iterations = ordered_json::array();
    for (const IterationStep &step : record.iterations) {
        ordered_json draws = ordered_json::array();
        for (const PhaseEstimate &d : step.draws) {
            draws.push_back(d.m_out);
        }
        iterations.push_back({
            {"x", step.x_i},
            {"r", step.r_i},
            {"quantum", step.quantum},
            {"draws", std::move(draws)},
            {"s", step.s_over_N.num},
            {"N", step.s_over_N.den},
            {"candidate", step.candidate},
            {"alternative", step.alternative},
            {"divides_x", step.divides_x},
            {"divides_r", step.divides_r},
            {"stuck", step.stuck},
        });
    }
    j["iterations"] = std::move(iterations);
    if (record.config.protocol == 'a') {
        j["N_hat"] = record.n_hat;
    }
    if (record.claimed_gcd) {
        j["gcd"] = *record.claimed_gcd;
    } else {
        j["gcd"] = "failed";
        j["diagnostic"] = record.diagnostic;
    }
    return j.dump(indent) + "\n";
}

}  // namespace qgcd
