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

// dlcz_sweep run <config> | verify <config>
//
// Exit codes: 0 success, 1 residual tolerance breach, 2 config, usage or
// output error.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "dlcz/sweep/run_scenario.h"

namespace {

using namespace dlcz::sweep;

struct Overrides {
    std::string config_path;
    std::optional<std::string> out;
    std::optional<std::uint64_t> seed;
    bool oracle = false;
    std::optional<int> n_max;
    std::optional<int> threads;
};

void add_common(CLI::App *cmd, Overrides &o) {
    cmd->add_option("config", o.config_path, "Scenario config (JSON)")->required();
    cmd->add_option("--out", o.out, "Output CSV path; overrides the config");
    cmd->add_option("--seed", o.seed, "Monte-Carlo seed; overrides the config");
    cmd->add_flag("--oracle", o.oracle, "Cross-check every point against the Fock-space oracle");
    cmd->add_option("--nmax", o.n_max, "Oracle truncation depth")->check(CLI::Range(1, 100));
    cmd->add_option("--threads", o.threads, "Worker threads")->check(CLI::Range(1, 256));
}

ScenarioConfig load(const Overrides &o) {
    ScenarioConfig cfg = load_config(o.config_path);
    if (o.out) {
        cfg.output = *o.out;
    }
    if (o.seed) {
        cfg.seed = *o.seed;
    }
    if (o.oracle) {
        cfg.oracle.enabled = true;
    }
    if (o.n_max) {
        cfg.oracle.n_max = *o.n_max;
    }
    if (o.threads) {
        cfg.threads = *o.threads;
    }
    return cfg;
}

void print_residuals(const RunResult &r) {
    for (const auto &m : r.residuals) {
        std::printf(
            "%-14s max=%.3e mean=%.3e checks=%zu breaches=%zu\n", m.metric.c_str(), m.max_residual, m.mean_residual,
            m.count, m.breaches);
    }
}

int do_run(const Overrides &o) {
    ScenarioConfig cfg = load(o);
    RunSummary s = run_scenario(cfg);
    std::printf("%s: %zu rows -> %s\n", std::string(kind_name(cfg.kind)).c_str(), s.result.table.rows.size(), s.csv_path.c_str());
    print_residuals(s.result);
    if (s.result.breaches) {
        std::printf("tolerance breaches: %zu\n", s.result.breaches);
    }
    return exit_code(s.result);
}

int do_verify(const Overrides &o) {
    ScenarioConfig cfg = load(o);
    RunResult r = verify(cfg);
    std::printf("%s: %zu rows checked\n", std::string(kind_name(cfg.kind)).c_str(), r.table.rows.size());
    if (r.residuals.empty()) {
        std::printf("no cross-checks apply to this scenario\n");
    }
    print_residuals(r);
    std::printf("%s\n", r.breaches ? "FAIL" : "OK");
    if (o.out) {
        write_csv_file(*o.out, r.table);
    }
    return exit_code(r);
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Parameter sweeps for DLCZ and MIT/NU performance models"};
    app.require_subcommand(1);
    Overrides run_opts, verify_opts;
    CLI::App *run = app.add_subcommand("run", "Evaluate a scenario and write its dataset");
    add_common(run, run_opts);
    CLI::App *ver = app.add_subcommand("verify", "Compare closed forms with the oracle and report residuals");
    add_common(ver, verify_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfigError;
    }

    try {
        if (run->parsed()) {
            return do_run(run_opts);
        }
        return do_verify(verify_opts);
    } catch (const ConfigError &e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const OutputError &e) {
        std::cerr << "output error: " << e.what() << "\n";
        return kExitConfigError;
    }
}
