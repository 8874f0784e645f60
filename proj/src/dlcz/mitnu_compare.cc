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

#include "dlcz/mitnu_compare.h"

#include <cmath>
#include <stdexcept>

namespace dlcz {

void MitNuParams::validate() const {
    if (!(gain_sq >= 0.0 && gain_sq < 1.0)) {
        if (gain_sq == 1.0) {
            throw std::domain_error("OPA at oscillation threshold (|G| = 1)");
        }
        throw std::invalid_argument("pump gain |G|^2 must lie in [0, 1)");
    }
    if (!(eta_f >= 0.0 && eta_f <= 1.0)) {
        throw std::invalid_argument("fiber transmissivity must lie in [0, 1]");
    }
    if (!(coupling_ratio > 0.0 && coupling_ratio <= 1.0)) {
        throw std::invalid_argument("coupling ratio must lie in (0, 1]");
    }
    if (!(linewidth_ratio > 0.0) || !std::isfinite(linewidth_ratio)) {
        throw std::invalid_argument("linewidth ratio must be positive");
    }
}

MitNuMoments mitnu_moments(const MitNuParams &p) {
    p.validate();
    double g = std::sqrt(p.gain_sq);
    double prefactor = p.eta_f * p.coupling_ratio * g;
    MitNuMoments m;
    m.i_plus = prefactor / ((1.0 + g) * (1.0 + g + p.linewidth_ratio));
    m.i_minus = prefactor / ((1.0 - g) * (1.0 - g + p.linewidth_ratio));
    m.n_bar = m.i_minus - m.i_plus;
    m.n_tilde = m.i_minus + m.i_plus;
    m.n_cap = m.n_bar * (1.0 + m.n_bar) - m.n_tilde * m.n_tilde;
    return m;
}

namespace {

// N^2 + n~^2 (1 + phase_term) over its two denominators.
MitNuMetrics metrics_with_phase_term(const MitNuMoments &m, double phase_term) {
    double n2 = m.n_cap * m.n_cap;
    double t2 = m.n_tilde * m.n_tilde;
    double numerator = n2 + t2 * (1.0 + phase_term);
    double base = (1.0 + m.n_bar) * (1.0 + m.n_bar) - t2;
    MitNuMetrics out;
    out.success = numerator / std::pow(base, 4);
    double denominator = 4.0 * n2 + 2.0 * t2;
    if (denominator > 0.0) {
        out.fidelity = numerator / denominator;
    }
    return out;
}

}  // namespace

MitNuMetrics mitnu_metrics(const MitNuParams &p) {
    return metrics_with_phase_term(mitnu_moments(p), std::cos(p.theta_1 - p.theta_2));
}

double phase_averaged_mitnu(const MitNuParams &p, double sigma2) {
    if (!(sigma2 >= 0.0)) {
        throw std::invalid_argument("phase variance must be non-negative");
    }
    MitNuMetrics m = metrics_with_phase_term(mitnu_moments(p), std::exp(-sigma2));
    if (!m.fidelity) {
        throw UndefinedFidelity();
    }
    return *m.fidelity;
}

double fiber_transmissivity(double loss_db_per_km, double length_km) {
    if (!(loss_db_per_km >= 0.0) || !(length_km >= 0.0)) {
        throw std::invalid_argument("fiber loss and length must be non-negative");
    }
    return std::pow(10.0, -loss_db_per_km * length_km / 10.0);
}

std::vector<ThroughputRow> throughput_comparison(const ComparisonConfig &cfg, std::span<const double> total_distances_km) {
    if (!(cfg.trial_rate_hz > 0.0)) {
        throw std::invalid_argument("trial rate must be positive");
    }
    std::vector<ThroughputRow> rows;
    rows.reserve(total_distances_km.size());
    for (double total : total_distances_km) {
        double half = total / 2.0;
        double path = fiber_transmissivity(cfg.loss_db_per_km, half);

        ThroughputRow row;
        row.total_distance_km = total;

        ChannelParams cp;
        cp.p_cL = cp.p_cR = cfg.p_c;
        cp.eta_L = cp.eta_R = path;
        cp.eta_1 = cp.eta_2 = cfg.eta_detector;
        HeraldReport dlcz = herald_report(cp, cfg.dlcz_scheme);
        row.dlcz_throughput = cfg.trial_rate_hz * dlcz.success * cfg.dlcz_pair_factor;
        row.dlcz_fidelity = dlcz.fidelity[0];

        MitNuParams mp = cfg.mitnu;
        mp.eta_f = path;
        MitNuMetrics mitnu = mitnu_metrics(mp);
        row.mitnu_throughput = cfg.trial_rate_hz * mitnu.success;
        row.mitnu_fidelity = mitnu.fidelity;
        rows.push_back(row);
    }
    return rows;
}

double fitted_decay_rate(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw std::invalid_argument("decay fit needs at least two matching points");
    }
    double n = static_cast<double>(x.size());
    double sx = 0, sy = 0;
    for (size_t i = 0; i < x.size(); i++) {
        if (!(y[i] > 0.0)) {
            throw std::invalid_argument("decay fit needs positive values");
        }
        sx += x[i];
        sy += std::log(y[i]);
    }
    double mx = sx / n, my = sy / n;
    double sxy = 0, sxx = 0;
    for (size_t i = 0; i < x.size(); i++) {
        double dx = x[i] - mx;
        sxy += dx * (std::log(y[i]) - my);
        sxx += dx * dx;
    }
    return -sxy / sxx;
}

}  // namespace dlcz
