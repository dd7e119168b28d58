// Copyright 2026 The blockgof Authors
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

#ifndef BLOCKGOF_REPORT_HPP_
#define BLOCKGOF_REPORT_HPP_

#include <iosfwd>
#include <string>

#include "blockgof/fitters.hpp"
#include "blockgof/gof.hpp"
#include "blockgof/sim.hpp"

namespace blockgof {

// Semicolon-separated list of raised fit flags; empty when clean.
std::string flags_string(const FitFlags& flags);

// "reject", "accept", "undefined" (no triangle) or "failed" (fit threw).
std::string decision_string(const ModelGof& m);

// CSV header: model,T_n,C_n3,decision,flags
void write_gof_csv(const GofReport& report, std::ostream& out);
std::string gof_json(const GofReport& report);

// Communities reported in decreasing estimated size.
std::string fit_json(const FitResult& fit);

std::string estimate_k_json(const EstimateKResult& result, double alpha);
std::string snr_json(const SnrResult& result);
std::string nmf_json(const NmfDiagnostics& diag);

std::string sim_config_json(const SimConfig& config);
// One row per replicate, one T_n column per assumed model.
void write_replicates_csv(const ExperimentResult& result, std::ostream& out);
void write_histogram_csv(const ExperimentResult& result, std::ostream& out);
std::string experiment_summary_json(const ExperimentResult& result);

}  // namespace blockgof

#endif  // BLOCKGOF_REPORT_HPP_
