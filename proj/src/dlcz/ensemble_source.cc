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

#include "dlcz/ensemble_source.h"

#include <cmath>
#include <stdexcept>

namespace dlcz {

void PumpParams::validate() const {
    if (atom_count < 1) {
        throw std::invalid_argument("atom count must be at least 1");
    }
    if (!(rabi_frequency > 0) || !(coupling > 0) || !(duration >= 0) || !(detuning > 0) || !(cavity_decay > 0)) {
        throw std::invalid_argument("pump rates must be strictly positive");
    }
}

double pump_exponent(const PumpParams &p) {
    double omega_g = p.rabi_frequency * p.coupling;
    return 2.0 * static_cast<double>(p.atom_count) * omega_g * omega_g * p.duration /
           (p.detuning * p.detuning * p.cavity_decay);
}

SourceState pump_to_source(const PumpParams &p, double phase) {
    p.validate();
    double e = pump_exponent(p);
    if (!std::isfinite(e)) {
        throw std::range_error("pump exponent overflows");
    }
    // cosh r = e^E. Written so neither small nor large E loses precision:
    // r = E + log1p(sqrt(1 - e^{-2E})), p_c = 1 - 1/cosh^2 r = 1 - e^{-2E}.
    double p_c = -std::expm1(-2.0 * e);
    if (p_c >= 1.0) {
        throw std::range_error("excitation probability saturates at 1 for these pump parameters");
    }
    SourceState s = pc_to_source(p_c, phase);
    s.squeeze = e + std::log1p(std::sqrt(p_c));
    s.mu = std::cosh(s.squeeze);
    s.nu = -std::sinh(s.squeeze) * std::polar(1.0, phase);
    return s;
}

SourceState pc_to_source(double excitation_probability, double phase) {
    if (!(excitation_probability >= 0.0) || !(excitation_probability < 1.0)) {
        throw std::domain_error("excitation probability must be < 1 (and >= 0)");
    }
    SourceState s;
    s.excitation_probability = excitation_probability;
    s.phase = phase;
    double t = std::sqrt(excitation_probability);
    s.squeeze = std::atanh(t);
    double mu = 1.0 / std::sqrt(1.0 - excitation_probability);
    s.mu = mu;
    s.nu = -(t * mu) * std::polar(1.0, phase);
    return s;
}

}  // namespace dlcz
