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

#include "dlcz/swap_teleport.h"

#include <stdexcept>

namespace dlcz {

void MeasurementModule::validate() const {
    if (!(eta_c >= 0.0 && eta_c <= 1.0) || !(eta_d >= 0.0 && eta_d <= 1.0)) {
        throw std::invalid_argument("measurement efficiencies must lie in [0, 1]");
    }
}

MeasurementModule MeasurementModule::from_eta_m(double eta_m, DetectionScheme scheme) {
    MeasurementModule m{eta_m, 1.0, scheme};
    m.validate();
    return m;
}

double ProtocolReport::fidelity_or_throw() const {
    if (!fidelity) {
        throw UndefinedFidelity();
    }
    return *fidelity;
}

SwapComponents swap_component_probabilities(const MeasurementModule &m) {
    m.validate();
    double eta = m.eta_m();
    SwapComponents c;
    c.p00 = 0.0;
    c.p01 = eta;
    c.p10 = eta;
    c.p11 = m.scheme == DetectionScheme::Pnrd ? 2.0 * eta * (1.0 - eta) : 2.0 * eta * (1.0 - eta / 2.0);
    return c;
}

DoublePhotonHeraldBudget double_photon_herald_budget(const MeasurementModule &m) {
    m.validate();
    double eta = m.eta_m();
    DoublePhotonHeraldBudget b;
    b.lost_before_splitter = 2.0 * (1.0 - m.eta_c) * eta;
    b.lost_at_detector = 2.0 * m.eta_c * m.eta_c * m.eta_d * (1.0 - m.eta_d);
    b.bunched_pair_detected = m.scheme == DetectionScheme::Nrpd ? eta * eta : 0.0;
    return b;
}

ProtocolReport repeater_metrics(const MeasurementModule &m) {
    SwapComponents c = swap_component_probabilities(m);
    ProtocolReport r;
    r.herald = (c.p00 + c.p01 + c.p10 + c.p11) / 4.0;
    r.success = (c.p01 + c.p10) / 4.0;
    if (r.herald > 0.0) {
        r.fidelity = r.success / r.herald;
    }
    return r;
}

ProtocolReport teleport_metrics(const MeasurementModule &m) {
    SwapComponents c = swap_component_probabilities(m);
    ProtocolReport r;
    r.success = c.p01 * c.p10 / 4.0;
    r.herald = (c.p01 * c.p10 + c.p11 * c.p01) / 4.0;
    if (r.herald > 0.0) {
        r.fidelity = r.success / r.herald;
    }
    return r;
}

double repeater_fidelity_closed_form(double eta_m, DetectionScheme s) {
    return s == DetectionScheme::Pnrd ? 1.0 / (2.0 - eta_m) : 1.0 / (2.0 - eta_m / 2.0);
}

double teleport_fidelity_closed_form(double eta_m, DetectionScheme s) {
    return s == DetectionScheme::Pnrd ? 1.0 / (3.0 - 2.0 * eta_m) : 1.0 / (3.0 - eta_m);
}

}  // namespace dlcz
