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

#ifndef DLCZ_SWAP_TELEPORT_H
#define DLCZ_SWAP_TELEPORT_H

#include <optional>

#include "dlcz/herald_metrics.h"

namespace dlcz {

/// Bell-measurement module: retrieval/channel transmissivity eta_c in front
/// of a 50/50 splitter, detectors of efficiency eta_d behind it.
struct MeasurementModule {
    double eta_c = 1.0;
    double eta_d = 1.0;
    DetectionScheme scheme = DetectionScheme::Pnrd;

    double eta_m() const {
        return eta_c * eta_d;
    }
    void validate() const;

    /// Module with eta_c = eta_m and ideal detectors.
    static MeasurementModule from_eta_m(double eta_m, DetectionScheme scheme);
};

/// Heralding probability (exactly one detector clicks) for each input
/// |i>_{R1}|j>_{L2} entering the module.
struct SwapComponents {
    double p00 = 0.0;
    double p01 = 0.0;
    double p10 = 0.0;
    double p11 = 0.0;
};

struct ProtocolReport {
    double herald = 0.0;
    double success = 0.0;
    std::optional<double> fidelity;

    /// Throws UndefinedFidelity when nothing can herald.
    double fidelity_or_throw() const;
};

/// How the two-photon input |1>|1> manages to herald anyway.
struct DoublePhotonHeraldBudget {
    /// One photon lost before the splitter, the other detected.
    double lost_before_splitter = 0.0;
    /// Both bunched photons reach the detector, one is missed.
    double lost_at_detector = 0.0;
    /// Both bunched photons detected by one non-resolving detector.
    double bunched_pair_detected = 0.0;

    double total() const {
        return lost_before_splitter + lost_at_detector + bunched_pair_detected;
    }
};

SwapComponents swap_component_probabilities(const MeasurementModule &m);

DoublePhotonHeraldBudget double_photon_herald_budget(const MeasurementModule &m);

/// Entanglement swap of two ideal singlets through one module.
ProtocolReport repeater_metrics(const MeasurementModule &m);

/// Conditional teleportation through two identical modules.
ProtocolReport teleport_metrics(const MeasurementModule &m);

double repeater_fidelity_closed_form(double eta_m, DetectionScheme s);
double teleport_fidelity_closed_form(double eta_m, DetectionScheme s);

}  // namespace dlcz

#endif
