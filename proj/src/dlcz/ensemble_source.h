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

#ifndef DLCZ_ENSEMBLE_SOURCE_H
#define DLCZ_ENSEMBLE_SOURCE_H

#include <complex>

namespace dlcz {

/// Raman write-pump configuration of one atomic ensemble in a ring cavity.
/// Rates are angular (rad/s), the duration in seconds.
struct PumpParams {
    long long atom_count = 1;
    double rabi_frequency = 0.0;
    double coupling = 0.0;
    double duration = 0.0;
    double detuning = 1.0;
    double cavity_decay = 1.0;

    void validate() const;
};

/// Two-mode squeezed atom/Stokes state. mu = cosh r, nu = -sinh r e^{i phase}.
struct SourceState {
    double squeeze = 0.0;
    double excitation_probability = 0.0;
    double phase = 0.0;
    std::complex<double> mu{1.0, 0.0};
    std::complex<double> nu{0.0, 0.0};
};

/// The exponent E in cosh r = exp(E): 2 N_a |Omega g_c|^2 t / (Delta^2 kappa).
double pump_exponent(const PumpParams &p);

/// Maps pump settings to the squeezed state. Throws std::range_error when
/// the excitation probability rounds to 1 in double precision.
SourceState pump_to_source(const PumpParams &p, double phase);

/// Builds the state from its excitation probability p_c = tanh^2 r.
/// Throws std::domain_error unless 0 <= p_c < 1.
SourceState pc_to_source(double excitation_probability, double phase);

}  // namespace dlcz

#endif
