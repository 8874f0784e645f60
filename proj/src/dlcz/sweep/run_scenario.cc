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

#include "dlcz/sweep/run_scenario.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <map>
#include <random>
#include <thread>

#include "dlcz/fock_oracle.h"
#include "dlcz/mitnu_compare.h"
#include "dlcz/swap_teleport.h"
#include "json.hpp"

namespace dlcz::sweep {

namespace {

constexpr double kExactTolerance = 1e-10;

struct Check {
    std::string metric;
    double residual;
    double tolerance;
};

struct PointResult {
    std::vector<std::vector<Cell>> rows;
    std::vector<Check> checks;
};

class Params {
   public:
    Params(const ScenarioConfig &cfg, const std::vector<double> &point) : values_(cfg.fixed) {
        for (size_t i = 0; i < cfg.axes.size(); i++) {
            values_[cfg.axes[i].name] = point[i];
        }
    }
    bool has(const std::string &name) const {
        return values_.count(name) != 0;
    }
    double get(const std::string &name, double fallback) const {
        auto it = values_.find(name);
        return it == values_.end() ? fallback : it->second;
    }

   private:
    std::map<std::string, double> values_;
};

const std::vector<std::string> kPerSideKeys{"p_cL", "p_cR", "eta_L", "eta_R", "eta_1", "eta_2", "theta_L", "theta_R"};

bool per_side(const Params &p) {
    return std::any_of(kPerSideKeys.begin(), kPerSideKeys.end(), [&](const std::string &k) {
        return p.has(k);
    });
}

ChannelParams channel_for(const Params &p) {
    ChannelParams cp;
    double p_c = p.get("p_c", 0.0);
    double eta_d = p.get("eta_d", 1.0);
    double eta_s = p.get("eta_s", eta_d);
    cp = SymmetricParams{p_c, eta_s}.to_channel(eta_d);
    cp.p_cL = p.get("p_cL", cp.p_cL);
    cp.p_cR = p.get("p_cR", cp.p_cR);
    cp.eta_L = p.get("eta_L", cp.eta_L);
    cp.eta_R = p.get("eta_R", cp.eta_R);
    cp.eta_1 = p.get("eta_1", cp.eta_1);
    cp.eta_2 = p.get("eta_2", cp.eta_2);
    cp.theta_L = p.get("theta_L", cp.theta_L);
    cp.theta_R = p.get("theta_R", cp.theta_R);
    cp.validate();
    return cp;
}

Cell text(std::string_view s) {
    return Cell{std::string(s)};
}

std::optional<double> ratio(double num, double den) {
    return den > 0.0 ? std::optional<double>(num / den) : std::nullopt;
}

// Appends the per-row residual columns and records the checks.
void close_row(std::vector<Cell> &row, PointResult &out, const std::vector<Check> &checks) {
    double worst = 0.0;
    bool ok = true;
    for (const auto &c : checks) {
        worst = std::max(worst, c.residual);
        ok = ok && c.residual <= c.tolerance;
        out.checks.push_back(c);
    }
    row.push_back(worst);
    row.push_back(text(ok ? "pass" : "fail"));
}

void add_check(std::vector<Check> &checks, std::string metric, const std::optional<double> &a, const std::optional<double> &b, double tol) {
    if (a && b) {
        checks.push_back({std::move(metric), std::abs(*a - *b), tol});
    } else if (a.has_value() != b.has_value()) {
        // One side defined, the other not: a breach whatever the tolerance.
        checks.push_back({std::move(metric), 1.0, -1.0});
    }
}

std::vector<std::string> metric_columns(const ScenarioConfig &cfg) {
    bool oracle = cfg.oracle.enabled;
    std::vector<std::string> cols;
    auto add = [&](std::initializer_list<const char *> names) {
        cols.insert(cols.end(), names.begin(), names.end());
    };
    switch (cfg.kind) {
        case ScenarioKind::kDistribution:
            add({"P1", "P2", "F1", "F2", "P_herald", "P_success", "F_E"});
            if (oracle) {
                add({"oracle_P1", "oracle_P2", "oracle_F1", "oracle_F2", "oracle_P_success", "tail_bound"});
            }
            break;
        case ScenarioKind::kAsymmetricMap:
            add({"P1", "P2", "F1", "F2", "F1_opt", "F2_opt", "opt1_dL_abs2", "opt2_dL_abs2"});
            if (oracle) {
                add({"oracle_F1", "oracle_F2", "oracle_F1_opt", "oracle_F2_opt", "tail_bound"});
            }
            break;
        case ScenarioKind::kPhaseNoise:
            add({"F_closed", "F_mc", "F_mc_stderr", "mitnu_F_closed", "mitnu_F_mc", "mitnu_F_mc_stderr"});
            break;
        case ScenarioKind::kRepeater:
            add({"eta_m_eff", "P00", "P01", "P10", "P11", "P_herald", "P_success", "F_R"});
            if (oracle) {
                add({"oracle_P11", "oracle_P_herald", "oracle_P_success", "oracle_F_R"});
            }
            break;
        case ScenarioKind::kTeleport:
            add({"eta_m_eff", "P_herald", "P_success", "F_T"});
            if (oracle) {
                add({"oracle_P_herald", "oracle_P_success", "oracle_F_T", "oracle_P_plus", "oracle_P_minus"});
            }
            break;
        case ScenarioKind::kMitNuCompare:
            add({"dlcz_P_success", "dlcz_throughput", "dlcz_F", "mitnu_P_success", "mitnu_throughput", "mitnu_F"});
            break;
    }
    bool checked = oracle || cfg.kind == ScenarioKind::kPhaseNoise;
    if (checked && cfg.kind != ScenarioKind::kMitNuCompare) {
        add({"max_residual", "within_tolerance"});
    }
    return cols;
}

double oracle_tolerance(const ScenarioConfig &cfg, double tail) {
    return cfg.oracle.tolerance ? *cfg.oracle.tolerance : tail + kExactTolerance;
}

void eval_distribution(const ScenarioConfig &cfg, const Params &p, std::vector<Cell> base, PointResult &out) {
    bool symmetric = !per_side(p);
    double p_c = p.get("p_c", 0.0);
    // The symmetric closed forms stay finite at p_c = 1, where the general
    // expressions are evaluated as their limit.
    bool at_unit_pc = symmetric && p_c == 1.0;
    std::optional<ChannelParams> cp;
    SymmetricParams sp{p_c, p.get("eta_s", p.get("eta_d", 1.0))};
    if (at_unit_pc) {
        SymmetricParams{0.0, sp.eta_s}.to_channel(p.get("eta_d", 1.0));  // range checks only
    } else {
        cp = channel_for(p);
    }
    for (DetectionScheme s : cfg.schemes) {
        std::vector<Cell> row = base;
        row.push_back(text(scheme_name(s)));
        HeraldReport r;
        std::optional<double> f_e;
        if (symmetric) {
            double pj = symmetric_heralding_probability(sp, s);
            std::optional<double> f;
            if (pj > 0.0 || at_unit_pc) {
                f = symmetric_fidelity(sp, s);
            }
            r.heralding = {pj, pj};
            r.fidelity = {f, f};
            r.herald = 2.0 * pj;
            r.success = symmetric_success_probability(sp);
            f_e = f;
        } else {
            r = herald_report(*cp, s);
            f_e = ratio(r.success, r.herald);
        }
        row.insert(row.end(), {r.heralding[0], r.heralding[1], cell(r.fidelity[0]), cell(r.fidelity[1]), r.herald, r.success, cell(f_e)});
        if (cfg.oracle.enabled) {
            std::vector<Check> checks;
            if (cp) {
                fock::OracleDistribution o = fock::oracle_distribution(*cp, s, {cfg.effective_n_max(), std::nullopt});
                const HeraldReport &q = o.report;
                double tol = oracle_tolerance(cfg, o.tail_bound);
                row.insert(row.end(), {q.heralding[0], q.heralding[1], cell(q.fidelity[0]), cell(q.fidelity[1]), q.success, o.tail_bound});
                add_check(checks, "P1", r.heralding[0], q.heralding[0], tol);
                add_check(checks, "P2", r.heralding[1], q.heralding[1], tol);
                add_check(checks, "F1", r.fidelity[0], q.fidelity[0], tol);
                add_check(checks, "F2", r.fidelity[1], q.fidelity[1], tol);
                add_check(checks, "P_success", r.success, q.success, tol);
            } else {
                row.insert(row.end(), 6, Cell{});
            }
            close_row(row, out, checks);
        }
        out.rows.push_back(std::move(row));
    }
}

double dl_abs2(const std::optional<AtomQubit> &q) {
    return q ? std::norm(q->d_L) : NAN;
}

void eval_asymmetric(const ScenarioConfig &cfg, const Params &p, std::vector<Cell> base, PointResult &out) {
    ChannelParams cp = channel_for(p);
    for (DetectionScheme s : cfg.schemes) {
        std::vector<Cell> row = base;
        row.push_back(text(scheme_name(s)));
        HeraldReport r = herald_report(cp, s);
        auto opt_cell = [&](int j) {
            return r.optimal_state[j] ? Cell{dl_abs2(r.optimal_state[j])} : Cell{};
        };
        row.insert(
            row.end(),
            {r.heralding[0], r.heralding[1], cell(r.fidelity[0]), cell(r.fidelity[1]), cell(r.optimal_fidelity[0]),
             cell(r.optimal_fidelity[1]), opt_cell(0), opt_cell(1)});
        if (cfg.oracle.enabled) {
            fock::OracleDistribution o = fock::oracle_distribution(cp, s, {cfg.effective_n_max(), std::nullopt});
            const HeraldReport &q = o.report;
            double tol = oracle_tolerance(cfg, o.tail_bound);
            row.insert(row.end(), {cell(q.fidelity[0]), cell(q.fidelity[1]), cell(q.optimal_fidelity[0]), cell(q.optimal_fidelity[1]), o.tail_bound});
            std::vector<Check> checks;
            add_check(checks, "F1", r.fidelity[0], q.fidelity[0], tol);
            add_check(checks, "F2", r.fidelity[1], q.fidelity[1], tol);
            add_check(checks, "F1_opt", r.optimal_fidelity[0], q.optimal_fidelity[0], tol);
            add_check(checks, "F2_opt", r.optimal_fidelity[1], q.optimal_fidelity[1], tol);
            close_row(row, out, checks);
        }
        out.rows.push_back(std::move(row));
    }
}

struct MeanAndError {
    double mean;
    double stderr_;
};

template <typename Sample>
MeanAndError monte_carlo(std::mt19937_64 &rng, double sigma2, int samples, Sample sample) {
    // Welford update; the naive sum of squares cancels badly when every
    // sample is equal, as at sigma2 = 0.
    double mean = 0.0, m2 = 0.0;
    std::normal_distribution<double> normal(0.0, 1.0);
    double sigma = std::sqrt(sigma2);
    for (int i = 0; i < samples; i++) {
        double a = sigma * normal(rng);
        double b = sigma * normal(rng);
        double v = sample(a, b);
        double delta = v - mean;
        mean += delta / (i + 1);
        m2 += delta * (v - mean);
    }
    double n = samples;
    double var = m2 / (n - 1.0);
    return {mean, std::sqrt(var / n)};
}

std::mt19937_64 stream(std::uint64_t seed, size_t point, std::uint64_t lane) {
    std::seed_seq seq{
        static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), static_cast<std::uint32_t>(point),
        static_cast<std::uint32_t>(point >> 32), static_cast<std::uint32_t>(lane)};
    return std::mt19937_64(seq);
}

MitNuParams mitnu_params(const Params &p) {
    MitNuParams m;
    m.gain_sq = p.get("gain_sq", m.gain_sq);
    m.eta_f = p.get("eta_f", m.eta_f);
    m.coupling_ratio = p.get("coupling_ratio", m.coupling_ratio);
    m.linewidth_ratio = p.get("linewidth_ratio", m.linewidth_ratio);
    m.validate();
    return m;
}

void eval_phase_noise(const ScenarioConfig &cfg, const Params &p, size_t index, std::vector<Cell> base, PointResult &out) {
    double sigma2 = p.get("sigma2", 0.0);
    if (!(sigma2 >= 0.0)) {
        throw std::invalid_argument("phase variance must be non-negative");
    }
    double eta_d = p.get("eta_d", 1.0);
    ChannelParams cp = SymmetricParams{p.get("p_c", 0.01), p.get("eta_s", eta_d)}.to_channel(eta_d);
    MitNuParams mp = mitnu_params(p);

    std::optional<double> mitnu_closed;
    if (mitnu_metrics(mp).fidelity) {
        mitnu_closed = phase_averaged_mitnu(mp, sigma2);
    }
    std::optional<MeanAndError> mitnu_mc;
    if (mitnu_closed) {
        std::mt19937_64 rng = stream(cfg.seed, index, 0);
        mitnu_mc = monte_carlo(rng, sigma2, cfg.mc_samples, [&](double a, double b) {
            MitNuParams q = mp;
            q.theta_1 = a;
            q.theta_2 = b;
            return *mitnu_metrics(q).fidelity;
        });
    }

    for (size_t k = 0; k < cfg.schemes.size(); k++) {
        DetectionScheme s = cfg.schemes[k];
        std::vector<Cell> row = base;
        row.push_back(text(scheme_name(s)));
        std::vector<Check> checks;
        if (heralding_probability(cp, s, Detector::D1) > 0.0) {
            double closed = phase_averaged_fidelity(cp, s, sigma2);
            std::mt19937_64 rng = stream(cfg.seed, index, 1 + static_cast<std::uint64_t>(s));
            MeanAndError mc = monte_carlo(rng, sigma2, cfg.mc_samples, [&](double a, double b) {
                ChannelParams q = cp;
                q.theta_L = a;
                q.theta_R = b;
                return fidelity_singlet_triplet(q, s, Detector::D1);
            });
            row.insert(row.end(), {closed, mc.mean, mc.stderr_});
            checks.push_back({"F_mc", std::abs(mc.mean - closed), 3.0 * mc.stderr_ + kExactTolerance});
        } else {
            row.insert(row.end(), 3, Cell{});
        }
        if (mitnu_mc) {
            row.insert(row.end(), {*mitnu_closed, mitnu_mc->mean, mitnu_mc->stderr_});
            checks.push_back({"mitnu_F_mc", std::abs(mitnu_mc->mean - *mitnu_closed), 3.0 * mitnu_mc->stderr_ + kExactTolerance});
        } else {
            row.insert(row.end(), 3, Cell{});
        }
        close_row(row, out, checks);
        out.rows.push_back(std::move(row));
    }
}

MeasurementModule module_for(const Params &p, DetectionScheme s) {
    double eta_d = p.get("eta_d", 1.0);
    double eta_c = p.get("eta_c", 1.0);
    if (p.has("eta_m")) {
        if (p.has("eta_c")) {
            throw std::invalid_argument("give eta_m or eta_c, not both");
        }
        if (!(eta_d > 0.0)) {
            throw std::invalid_argument("eta_m needs a positive detector efficiency");
        }
        eta_c = p.get("eta_m", 1.0) / eta_d;
    }
    MeasurementModule m{eta_c, eta_d, s};
    m.validate();
    return m;
}

void eval_repeater(const ScenarioConfig &cfg, const Params &p, std::vector<Cell> base, PointResult &out) {
    for (DetectionScheme s : cfg.schemes) {
        MeasurementModule m = module_for(p, s);
        SwapComponents c = swap_component_probabilities(m);
        ProtocolReport r = repeater_metrics(m);
        std::vector<Cell> row = base;
        row.push_back(text(scheme_name(s)));
        row.insert(row.end(), {m.eta_m(), c.p00, c.p01, c.p10, c.p11, r.herald, r.success, cell(r.fidelity)});
        if (cfg.oracle.enabled) {
            int n_max = cfg.effective_n_max();
            fock::OracleSwap o = fock::oracle_swap(m, n_max);
            SwapComponents oc = fock::oracle_swap_components(m, n_max);
            double tol = cfg.oracle.tolerance.value_or(kExactTolerance);
            row.insert(row.end(), {oc.p11, o.report.herald, o.report.success, cell(o.report.fidelity)});
            std::vector<Check> checks;
            add_check(checks, "P11", c.p11, oc.p11, tol);
            add_check(checks, "P_herald", r.herald, o.report.herald, tol);
            add_check(checks, "P_success", r.success, o.report.success, tol);
            add_check(checks, "F_R", r.fidelity, o.report.fidelity, tol);
            close_row(row, out, checks);
        }
        out.rows.push_back(std::move(row));
    }
}

void eval_teleport(const ScenarioConfig &cfg, const Params &p, std::vector<Cell> base, PointResult &out) {
    double d0_abs2 = p.get("d0_abs2", 0.5);
    if (!(d0_abs2 >= 0.0 && d0_abs2 <= 1.0)) {
        throw std::invalid_argument("d0_abs2 must lie in [0, 1]");
    }
    std::complex<double> d0 = std::sqrt(d0_abs2);
    std::complex<double> d1 = std::polar(std::sqrt(1.0 - d0_abs2), p.get("d_phase", 0.0));
    for (DetectionScheme s : cfg.schemes) {
        MeasurementModule m = module_for(p, s);
        ProtocolReport r = teleport_metrics(m);
        std::vector<Cell> row = base;
        row.push_back(text(scheme_name(s)));
        row.insert(row.end(), {m.eta_m(), r.herald, r.success, cell(r.fidelity)});
        if (cfg.oracle.enabled) {
            fock::OracleTeleport o = fock::oracle_teleport(m, d0, d1, cfg.effective_n_max());
            double tol = cfg.oracle.tolerance.value_or(kExactTolerance);
            row.insert(row.end(), {o.report.herald, o.report.success, cell(o.report.fidelity), o.p_plus, o.p_minus});
            std::vector<Check> checks;
            add_check(checks, "P_herald", r.herald, o.report.herald, tol);
            add_check(checks, "P_success", r.success, o.report.success, tol);
            add_check(checks, "F_T", r.fidelity, o.report.fidelity, tol);
            close_row(row, out, checks);
        }
        out.rows.push_back(std::move(row));
    }
}

void eval_mitnu(const ScenarioConfig &cfg, const Params &p, std::vector<Cell> base, PointResult &out) {
    ComparisonConfig cc;
    cc.p_c = p.get("p_c", cc.p_c);
    cc.eta_detector = p.get("eta_d", cc.eta_detector);
    cc.mitnu.gain_sq = p.get("gain_sq", cc.mitnu.gain_sq);
    cc.mitnu.coupling_ratio = p.get("coupling_ratio", cc.mitnu.coupling_ratio);
    cc.mitnu.linewidth_ratio = p.get("linewidth_ratio", cc.mitnu.linewidth_ratio);
    cc.loss_db_per_km = p.get("loss_db_per_km", cc.loss_db_per_km);
    cc.trial_rate_hz = p.get("trial_rate_hz", cc.trial_rate_hz);
    cc.dlcz_pair_factor = p.get("pair_factor", cc.dlcz_pair_factor);
    double distance = p.get("distance_km", 0.0);

    MitNuParams mp = cc.mitnu;
    mp.eta_f = fiber_transmissivity(cc.loss_db_per_km, distance / 2.0);
    MitNuMetrics mitnu = mitnu_metrics(mp);

    for (DetectionScheme s : cfg.schemes) {
        cc.dlcz_scheme = s;
        std::vector<double> d{distance};
        ThroughputRow t = throughput_comparison(cc, d).front();
        ChannelParams cp;
        cp.p_cL = cp.p_cR = cc.p_c;
        cp.eta_L = cp.eta_R = mp.eta_f;
        cp.eta_1 = cp.eta_2 = cc.eta_detector;
        std::vector<Cell> row = base;
        row.push_back(text(scheme_name(s)));
        row.insert(
            row.end(),
            {success_probability(cp, s), t.dlcz_throughput, cell(t.dlcz_fidelity), mitnu.success, t.mitnu_throughput,
             cell(t.mitnu_fidelity)});
        out.rows.push_back(std::move(row));
    }
}

PointResult evaluate_point(const ScenarioConfig &cfg, size_t index) {
    std::vector<double> point = cfg.point(index);
    Params p(cfg, point);
    std::vector<Cell> base(point.begin(), point.end());
    PointResult out;
    try {
        switch (cfg.kind) {
            case ScenarioKind::kDistribution:
                eval_distribution(cfg, p, base, out);
                break;
            case ScenarioKind::kAsymmetricMap:
                eval_asymmetric(cfg, p, base, out);
                break;
            case ScenarioKind::kPhaseNoise:
                eval_phase_noise(cfg, p, index, base, out);
                break;
            case ScenarioKind::kRepeater:
                eval_repeater(cfg, p, base, out);
                break;
            case ScenarioKind::kTeleport:
                eval_teleport(cfg, p, base, out);
                break;
            case ScenarioKind::kMitNuCompare:
                eval_mitnu(cfg, p, base, out);
                break;
        }
    } catch (const std::invalid_argument &e) {
        throw ConfigError("sweep point " + std::to_string(index), e.what());
    } catch (const std::domain_error &e) {
        throw ConfigError("sweep point " + std::to_string(index), e.what());
    }
    return out;
}

}  // namespace

RunResult evaluate(const ScenarioConfig &cfg) {
    size_t n = cfg.point_count();
    std::vector<PointResult> results(n);
    std::vector<std::exception_ptr> errors(n);
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i; (i = next.fetch_add(1)) < n;) {
            try {
                results[i] = evaluate_point(cfg, i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    size_t thread_count = std::min<size_t>(static_cast<size_t>(std::max(cfg.threads, 1)), n);
    if (thread_count <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (size_t t = 0; t < thread_count; t++) {
            pool.emplace_back(worker);
        }
        for (auto &t : pool) {
            t.join();
        }
    }
    for (const auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }

    RunResult r;
    for (const auto &a : cfg.axes) {
        r.table.columns.push_back(a.name);
    }
    r.table.columns.push_back("scheme");
    for (auto &c : metric_columns(cfg)) {
        r.table.columns.push_back(std::move(c));
    }
    std::map<std::string, size_t> slot;
    std::vector<double> sums;
    for (auto &pr : results) {
        for (auto &row : pr.rows) {
            r.table.rows.push_back(std::move(row));
        }
        for (const auto &c : pr.checks) {
            auto [it, fresh] = slot.try_emplace(c.metric, r.residuals.size());
            if (fresh) {
                r.residuals.push_back({c.metric});
                sums.push_back(0.0);
            }
            MetricResidual &m = r.residuals[it->second];
            m.max_residual = std::max(m.max_residual, c.residual);
            sums[it->second] += c.residual;
            m.count++;
            if (!(c.residual <= c.tolerance)) {
                m.breaches++;
                r.breaches++;
            }
        }
    }
    for (size_t i = 0; i < r.residuals.size(); i++) {
        r.residuals[i].mean_residual = sums[i] / static_cast<double>(r.residuals[i].count);
    }
    return r;
}

std::string metadata_json(const ScenarioConfig &cfg, const RunResult &result) {
    using nlohmann::json;
    json j;
    j["generator"] = "dlcz_sweep";
    j["schema_version"] = cfg.schema_version;
    j["scenario"] = std::string(kind_name(cfg.kind));
    j["seed"] = cfg.seed;
    j["rng"] = "mt19937_64";
    if (cfg.kind == ScenarioKind::kPhaseNoise) {
        j["monte_carlo_samples"] = cfg.mc_samples;
    }
    j["oracle"] = {{"enabled", cfg.oracle.enabled}, {"n_max", cfg.effective_n_max()}};
    j["oracle"]["tolerance"] = cfg.oracle.tolerance ? json(*cfg.oracle.tolerance) : json(nullptr);
    j["fixed"] = json::object();
    for (const auto &[k, v] : cfg.fixed) {
        j["fixed"][k] = v;
    }
    j["axes"] = json::array();
    for (const auto &a : cfg.axes) {
        j["axes"].push_back({{"name", a.name}, {"count", a.values.size()}, {"first", a.values.front()}, {"last", a.values.back()}});
    }
    j["schemes"] = json::array();
    for (DetectionScheme s : cfg.schemes) {
        j["schemes"].push_back(std::string(scheme_name(s)));
    }
    j["columns"] = result.table.columns;
    j["rows"] = result.table.rows.size();
    j["residuals"] = json::object();
    for (const auto &m : result.residuals) {
        j["residuals"][m.metric] = {{"max", m.max_residual}, {"mean", m.mean_residual}, {"count", m.count}, {"breaches", m.breaches}};
    }
    j["breaches"] = result.breaches;
    return j.dump(2) + "\n";
}

RunSummary run_scenario(const ScenarioConfig &cfg) {
    if (cfg.output.empty()) {
        throw ConfigError("output", "no output path configured");
    }
    RunSummary s;
    s.result = evaluate(cfg);
    s.csv_path = cfg.output;
    s.meta_path = cfg.output + ".meta.json";
    write_csv_file(s.csv_path, s.result.table);
    write_text_file(s.meta_path, metadata_json(cfg, s.result));
    return s;
}

RunResult verify(ScenarioConfig cfg) {
    cfg.oracle.enabled = true;
    return evaluate(cfg);
}

}  // namespace dlcz::sweep
