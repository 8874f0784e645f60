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

#ifndef DLCZ_MITNU_COMPARE_H
#define DLCZ_MITNU_COMPARE_H

#include <optional>
#include <span>
#include <vector>

#include "dlcz/herald_metrics.h"

namespace dlcz {

/// Trapped-atom (MIT/NU) link fed by a dual-OPA polarization-entangled source.
struct MitNuParams {
    /// |G|^2, normalized OPA pump gain; 1 at oscillation threshold.
    double gain_sq = 0.01;
    /// Source-to-memory fiber transmissivity.
    double eta_f = 1.0;
    /// gamma gamma_c / (Gamma Gamma_c); 10^-0.5 is a 5 dB fixed loss per path.
    double coupling_ratio = 0.31622776601683794;
    /// Gamma_c / Gamma.
    double linewidth_ratio = 0.5;
    double theta_1 = 0.0;
    double theta_2 = 0.0;

    void validate() const;
};

struct MitNuMoments {
    double i_plus = 0.0;
    double i_minus = 0.0;
    double n_bar = 0.0;
    double n_tilde = 0.0;
    double n_cap = 0.0;
};

struct MitNuMetrics {
    double success = 0.0;
    std::optional<double> fidelity;
};

/// Throws std::domain_error at threshold (|G| = 1).
MitNuMoments mitnu_moments(const MitNuParams &p);
MitNuMetrics mitnu_metrics(const MitNuParams &p);

/// Fidelity averaged over independent Gaussian OPA pump phases of variance
/// sigma2. Throws UndefinedFidelity when no pairs are produced.
double phase_averaged_mitnu(const MitNuParams &p, double sigma2);

struct LinkGeometry {
    double half_distance_km = 0.0;
    double loss_db_per_km = 0.2;
    double trial_rate_hz = 500e3;
};

/// 10^(-loss * length / 10).
double fiber_transmissivity(double loss_db_per_km, double length_km);

struct ComparisonConfig {
    double p_c = 0.01;
    double eta_detector = 0.5;
    DetectionScheme dlcz_scheme = DetectionScheme::Pnrd;
    MitNuParams mitnu;
    double loss_db_per_km = 0.2;
    double trial_rate_hz = 500e3;
    /// Multiplies the DLCZ throughput; every DLCZ application consumes two
    /// entangled pairs.
    double dlcz_pair_factor = 0.5;
};

struct ThroughputRow {
    double total_distance_km = 0.0;
    double dlcz_throughput = 0.0;
    double mitnu_throughput = 0.0;
    std::optional<double> dlcz_fidelity;
    std::optional<double> mitnu_fidelity;
};

/// One row per total distance 2 L_0. The DLCZ path transmissivity and the
/// MIT/NU fiber transmissivity both cover L_0 at the configured loss; the
/// MIT/NU fixed loss lives in its coupling ratio.
std::vector<ThroughputRow> throughput_comparison(const ComparisonConfig &cfg, std::span<const double> total_distances_km);

/// Least-squares slope of ln(y) against x, negated (a positive decay rate).
double fitted_decay_rate(std::span<const double> x, std::span<const double> y);

}  // namespace dlcz

#endif
