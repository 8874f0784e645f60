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

#ifndef DLCZ_SWEEP_SCENARIO_CONFIG_H
#define DLCZ_SWEEP_SCENARIO_CONFIG_H

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dlcz/herald_metrics.h"

namespace dlcz::sweep {

inline constexpr int kSchemaVersion = 1;

enum class ScenarioKind {
    kDistribution,
    kAsymmetricMap,
    kPhaseNoise,
    kRepeater,
    kTeleport,
    kMitNuCompare,
};

std::string_view kind_name(ScenarioKind kind);

/// Malformed or inconsistent configuration. `where` is the offending field
/// path (e.g. "sweep[1].steps") or "line L, column C" for syntax errors.
struct ConfigError : std::runtime_error {
    ConfigError(std::string where, const std::string &what);
    std::string where;
};

/// One swept variable, already expanded to its grid.
struct SweepAxis {
    std::string name;
    std::vector<double> values;
};

struct OracleSettings {
    bool enabled = false;
    /// 0 selects the scenario default.
    int n_max = 0;
    /// Overrides the per-scenario residual tolerance.
    std::optional<double> tolerance;
};

struct ScenarioConfig {
    int schema_version = kSchemaVersion;
    ScenarioKind kind = ScenarioKind::kDistribution;
    /// Cartesian product, first axis varying slowest.
    std::vector<SweepAxis> axes;
    std::map<std::string, double> fixed;
    std::vector<DetectionScheme> schemes{DetectionScheme::Pnrd, DetectionScheme::Nrpd};
    OracleSettings oracle;
    std::string output;
    std::uint64_t seed = 0;
    int mc_samples = 100000;
    int threads = 1;

    /// 12 for the distribution scenarios, 3 for swap and teleport.
    int effective_n_max() const;
    size_t point_count() const;
    /// Axis values of sweep point `index`, in axis order.
    std::vector<double> point(size_t index) const;
};

/// Parameter names accepted by `sweep` and `fixed` for a scenario.
const std::vector<std::string> &allowed_parameters(ScenarioKind kind);

ScenarioConfig parse_config(std::string_view json_text);

/// Reads and parses a file; unreadable files are reported as ConfigError.
ScenarioConfig load_config(const std::string &path);

}  // namespace dlcz::sweep

#endif
