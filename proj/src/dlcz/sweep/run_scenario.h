// Copyright 2026 The dlcz-perf Authors
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

#ifndef DLCZ_SWEEP_RUN_SCENARIO_H
#define DLCZ_SWEEP_RUN_SCENARIO_H

#include <string>
#include <vector>

#include "dlcz/sweep/csv_writer.h"
#include "dlcz/sweep/scenario_config.h"

namespace dlcz::sweep {

enum ExitCode : int {
    kExitOk = 0,
    kExitToleranceBreach = 1,
    kExitConfigError = 2,
};

/// Residual statistics for one checked metric across the whole sweep.
struct MetricResidual {
    std::string metric;
    double max_residual = 0.0;
    double mean_residual = 0.0;
    size_t count = 0;
    size_t breaches = 0;
};

struct RunResult {
    Table table;
    /// In order of first appearance; empty when nothing was cross-checked.
    std::vector<MetricResidual> residuals;
    size_t breaches = 0;
};

/// Evaluates every sweep point. Rows come out in sweep order (first axis
/// slowest, then scheme) whatever the thread count. Model errors at a
/// point are reported as ConfigError naming that point.
RunResult evaluate(const ScenarioConfig &cfg);

/// Contents of the `<output>.meta.json` sidecar. Contains no timestamps or
/// host details so identical inputs give identical bytes.
std::string metadata_json(const ScenarioConfig &cfg, const RunResult &result);

struct RunSummary {
    RunResult result;
    std::string csv_path;
    std::string meta_path;
};

/// evaluate() plus the CSV and sidecar. Throws ConfigError when no output
/// path is configured and OutputError when it cannot be written.
RunSummary run_scenario(const ScenarioConfig &cfg);

/// evaluate() with the cross-checks forced on; writes nothing.
RunResult verify(ScenarioConfig cfg);

inline int exit_code(const RunResult &r) {
    return r.breaches ? kExitToleranceBreach : kExitOk;
}

}  // namespace dlcz::sweep

#endif
