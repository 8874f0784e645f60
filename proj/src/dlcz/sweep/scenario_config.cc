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

#include "dlcz/sweep/scenario_config.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace dlcz::sweep {

using nlohmann::json;

namespace {

struct KindEntry {
    ScenarioKind kind;
    std::string_view name;
};

constexpr std::array<KindEntry, 6> kKinds{{
    {ScenarioKind::kDistribution, "distribution"},
    {ScenarioKind::kAsymmetricMap, "asymmetric-map"},
    {ScenarioKind::kPhaseNoise, "phase-noise"},
    {ScenarioKind::kRepeater, "repeater"},
    {ScenarioKind::kTeleport, "teleport"},
    {ScenarioKind::kMitNuCompare, "mitnu-compare"},
}};

const std::vector<std::string> kTopLevelKeys{
    "schema_version", "scenario", "description", "sweep", "fixed", "schemes",
    "oracle", "output", "seed", "monte_carlo", "threads",
};

std::string locate(std::string_view text, size_t byte) {
    size_t line = 1, column = 1;
    for (size_t i = 0; i + 1 < byte && i < text.size(); i++) {
        if (text[i] == '\n') {
            line++;
            column = 1;
        } else {
            column++;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

double finite_number(const json &j, const std::string &where) {
    if (!j.is_number()) {
        throw ConfigError(where, "expected a number");
    }
    double v = j.get<double>();
    if (!std::isfinite(v)) {
        throw ConfigError(where, "expected a finite number");
    }
    return v;
}

long long integer(const json &j, const std::string &where) {
    if (!j.is_number_integer()) {
        throw ConfigError(where, "expected an integer");
    }
    return j.get<long long>();
}

void check_keys(const json &obj, const std::vector<std::string> &allowed, const std::string &where) {
    for (const auto &[key, value] : obj.items()) {
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
            throw ConfigError(where.empty() ? key : where + "." + key, "unknown field");
        }
    }
}

void check_parameter(ScenarioKind kind, const std::string &name, const std::string &where) {
    const auto &allowed = allowed_parameters(kind);
    if (std::find(allowed.begin(), allowed.end(), name) == allowed.end()) {
        throw ConfigError(where, "parameter '" + name + "' not used by scenario " + std::string(kind_name(kind)));
    }
}

SweepAxis parse_axis(const json &j, const std::string &where) {
    if (!j.is_object()) {
        throw ConfigError(where, "expected an object");
    }
    check_keys(j, {"name", "start", "stop", "steps", "values"}, where);
    if (!j.contains("name") || !j["name"].is_string()) {
        throw ConfigError(where + ".name", "expected a string");
    }
    SweepAxis axis;
    axis.name = j["name"].get<std::string>();
    if (j.contains("values")) {
        if (j.contains("start") || j.contains("stop") || j.contains("steps")) {
            throw ConfigError(where, "give either values or start/stop/steps");
        }
        const json &vals = j["values"];
        if (!vals.is_array() || vals.empty()) {
            throw ConfigError(where + ".values", "expected a non-empty array");
        }
        for (size_t i = 0; i < vals.size(); i++) {
            axis.values.push_back(finite_number(vals[i], where + ".values[" + std::to_string(i) + "]"));
        }
        return axis;
    }
    if (!j.contains("start")) {
        throw ConfigError(where + ".start", "missing");
    }
    if (!j.contains("steps")) {
        throw ConfigError(where + ".steps", "missing");
    }
    double start = finite_number(j["start"], where + ".start");
    long long steps = integer(j["steps"], where + ".steps");
    if (steps < 1) {
        throw ConfigError(where + ".steps", "must be at least 1");
    }
    double stop = j.contains("stop") ? finite_number(j["stop"], where + ".stop") : start;
    if (stop < start) {
        throw ConfigError(where + ".stop", "range must satisfy start <= stop");
    }
    if (steps == 1) {
        if (stop != start) {
            throw ConfigError(where + ".steps", "a one-step range needs start == stop");
        }
        axis.values.push_back(start);
        return axis;
    }
    for (long long i = 0; i < steps; i++) {
        double t = static_cast<double>(i) / static_cast<double>(steps - 1);
        axis.values.push_back(i == steps - 1 ? stop : start + (stop - start) * t);
    }
    return axis;
}

}  // namespace

ConfigError::ConfigError(std::string where_, const std::string &what)
    : std::runtime_error(where_ + ": " + what), where(std::move(where_)) {
}

std::string_view kind_name(ScenarioKind kind) {
    for (const auto &k : kKinds) {
        if (k.kind == kind) {
            return k.name;
        }
    }
    throw std::invalid_argument("unknown scenario kind");
}

const std::vector<std::string> &allowed_parameters(ScenarioKind kind) {
    static const std::vector<std::string> distribution{
        "p_c", "eta_s", "eta_d", "p_cL", "p_cR", "eta_L", "eta_R", "eta_1", "eta_2", "theta_L", "theta_R",
    };
    static const std::vector<std::string> phase_noise{
        "sigma2", "p_c", "eta_s", "eta_d", "gain_sq", "eta_f", "coupling_ratio", "linewidth_ratio",
    };
    static const std::vector<std::string> repeater{"eta_m", "eta_c", "eta_d"};
    static const std::vector<std::string> teleport{"eta_m", "eta_c", "eta_d", "d0_abs2", "d_phase"};
    static const std::vector<std::string> mitnu{
        "distance_km", "p_c", "eta_d", "gain_sq", "coupling_ratio", "linewidth_ratio",
        "loss_db_per_km", "trial_rate_hz", "pair_factor",
    };
    switch (kind) {
        case ScenarioKind::kDistribution:
        case ScenarioKind::kAsymmetricMap:
            return distribution;
        case ScenarioKind::kPhaseNoise:
            return phase_noise;
        case ScenarioKind::kRepeater:
            return repeater;
        case ScenarioKind::kTeleport:
            return teleport;
        case ScenarioKind::kMitNuCompare:
            return mitnu;
    }
    throw std::invalid_argument("unknown scenario kind");
}

int ScenarioConfig::effective_n_max() const {
    if (oracle.n_max > 0) {
        return oracle.n_max;
    }
    return kind == ScenarioKind::kRepeater || kind == ScenarioKind::kTeleport ? 3 : 12;
}

size_t ScenarioConfig::point_count() const {
    size_t n = 1;
    for (const auto &a : axes) {
        n *= a.values.size();
    }
    return n;
}

std::vector<double> ScenarioConfig::point(size_t index) const {
    if (index >= point_count()) {
        throw std::out_of_range("sweep point index out of range");
    }
    std::vector<double> out(axes.size());
    for (size_t k = axes.size(); k-- > 0;) {
        size_t n = axes[k].values.size();
        out[k] = axes[k].values[index % n];
        index /= n;
    }
    return out;
}

ScenarioConfig parse_config(std::string_view text) {
    json j;
    try {
        j = json::parse(text.begin(), text.end());
    } catch (const json::parse_error &e) {
        throw ConfigError(locate(text, e.byte), "malformed JSON");
    }
    if (!j.is_object()) {
        throw ConfigError("<root>", "expected a JSON object");
    }
    check_keys(j, kTopLevelKeys, "");

    ScenarioConfig cfg;
    if (!j.contains("schema_version")) {
        throw ConfigError("schema_version", "missing");
    }
    cfg.schema_version = static_cast<int>(integer(j["schema_version"], "schema_version"));
    if (cfg.schema_version != kSchemaVersion) {
        throw ConfigError("schema_version", "unsupported version " + std::to_string(cfg.schema_version));
    }

    if (!j.contains("scenario") || !j["scenario"].is_string()) {
        throw ConfigError("scenario", "expected a scenario name");
    }
    std::string name = j["scenario"].get<std::string>();
    auto kind = std::find_if(kKinds.begin(), kKinds.end(), [&](const KindEntry &k) {
        return k.name == name;
    });
    if (kind == kKinds.end()) {
        throw ConfigError("scenario", "unknown scenario '" + name + "'");
    }
    cfg.kind = kind->kind;

    if (j.contains("description") && !j["description"].is_string()) {
        throw ConfigError("description", "expected a string");
    }

    if (j.contains("sweep")) {
        const json &sweep = j["sweep"];
        if (!sweep.is_array()) {
            throw ConfigError("sweep", "expected an array of axes");
        }
        for (size_t i = 0; i < sweep.size(); i++) {
            std::string where = "sweep[" + std::to_string(i) + "]";
            SweepAxis axis = parse_axis(sweep[i], where);
            check_parameter(cfg.kind, axis.name, where + ".name");
            for (const auto &other : cfg.axes) {
                if (other.name == axis.name) {
                    throw ConfigError(where + ".name", "axis '" + axis.name + "' swept twice");
                }
            }
            cfg.axes.push_back(std::move(axis));
        }
    }

    if (j.contains("fixed")) {
        const json &fixed = j["fixed"];
        if (!fixed.is_object()) {
            throw ConfigError("fixed", "expected an object");
        }
        for (const auto &[key, value] : fixed.items()) {
            std::string where = "fixed." + key;
            check_parameter(cfg.kind, key, where);
            for (const auto &axis : cfg.axes) {
                if (axis.name == key) {
                    throw ConfigError(where, "parameter is also swept");
                }
            }
            cfg.fixed[key] = finite_number(value, where);
        }
    }

    if (j.contains("schemes")) {
        const json &schemes = j["schemes"];
        if (!schemes.is_array() || schemes.empty()) {
            throw ConfigError("schemes", "expected a non-empty array");
        }
        cfg.schemes.clear();
        for (size_t i = 0; i < schemes.size(); i++) {
            std::string where = "schemes[" + std::to_string(i) + "]";
            if (!schemes[i].is_string()) {
                throw ConfigError(where, "expected \"pnrd\" or \"nrpd\"");
            }
            try {
                cfg.schemes.push_back(parse_scheme(schemes[i].get<std::string>()));
            } catch (const std::invalid_argument &e) {
                throw ConfigError(where, e.what());
            }
        }
    }

    if (j.contains("oracle")) {
        const json &o = j["oracle"];
        if (o.is_boolean()) {
            cfg.oracle.enabled = o.get<bool>();
        } else if (o.is_object()) {
            check_keys(o, {"enabled", "n_max", "tolerance"}, "oracle");
            if (o.contains("enabled")) {
                if (!o["enabled"].is_boolean()) {
                    throw ConfigError("oracle.enabled", "expected true or false");
                }
                cfg.oracle.enabled = o["enabled"].get<bool>();
            }
            if (o.contains("n_max")) {
                long long n = integer(o["n_max"], "oracle.n_max");
                if (n < 1 || n > 100) {
                    throw ConfigError("oracle.n_max", "must lie in [1, 100]");
                }
                cfg.oracle.n_max = static_cast<int>(n);
            }
            if (o.contains("tolerance")) {
                double t = finite_number(o["tolerance"], "oracle.tolerance");
                if (!(t >= 0.0)) {
                    throw ConfigError("oracle.tolerance", "must be non-negative");
                }
                cfg.oracle.tolerance = t;
            }
        } else {
            throw ConfigError("oracle", "expected a boolean or an object");
        }
    }

    if (j.contains("output")) {
        if (!j["output"].is_string()) {
            throw ConfigError("output", "expected a path string");
        }
        cfg.output = j["output"].get<std::string>();
    }

    if (j.contains("seed")) {
        if (!j["seed"].is_number_unsigned()) {
            throw ConfigError("seed", "expected a non-negative integer");
        }
        cfg.seed = j["seed"].get<std::uint64_t>();
    }

    if (j.contains("monte_carlo")) {
        const json &mc = j["monte_carlo"];
        if (!mc.is_object()) {
            throw ConfigError("monte_carlo", "expected an object");
        }
        check_keys(mc, {"samples"}, "monte_carlo");
        if (mc.contains("samples")) {
            long long n = integer(mc["samples"], "monte_carlo.samples");
            if (n < 2 || n > 100'000'000) {
                throw ConfigError("monte_carlo.samples", "must lie in [2, 1e8]");
            }
            cfg.mc_samples = static_cast<int>(n);
        }
    }

    if (j.contains("threads")) {
        long long n = integer(j["threads"], "threads");
        if (n < 1 || n > 256) {
            throw ConfigError("threads", "must lie in [1, 256]");
        }
        cfg.threads = static_cast<int>(n);
    }
    return cfg;
}

ScenarioConfig load_config(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError(path, "cannot open config file");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

}  // namespace dlcz::sweep
