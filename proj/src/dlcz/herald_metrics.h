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

#ifndef DLCZ_HERALD_METRICS_H
#define DLCZ_HERALD_METRICS_H

#include <array>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string_view>

#include "dlcz/channel_model.h"

namespace dlcz {

/// Photon-number resolving (exactly one photon clicks) or non-resolving
/// (one or more photons click) detectors.
enum class DetectionScheme { Pnrd, Nrpd };

std::string_view scheme_name(DetectionScheme s);
DetectionScheme parse_scheme(std::string_view name);

/// Which detector fired. The heralded target for D_j is
/// (|0>_L|1>_R + (-1)^j |1>_L|0>_R)/sqrt(2): singlet for D1, triplet for D2.
enum class Detector { D1 = 1, D2 = 2 };

inline constexpr std::array<Detector, 2> kDetectors{Detector::D1, Detector::D2};

inline int detector_index(Detector d) {
    return static_cast<int>(d) - 1;
}

/// Raised when a fidelity is requested for a herald that cannot happen.
struct UndefinedFidelity : std::domain_error {
    UndefinedFidelity() : std::domain_error("herald impossible; fidelity undefined") {
    }
};

/// Pure single-excitation state d_L |1>_L|0>_R + d_R |0>_L|1>_R.
struct AtomQubit {
    std::complex<double> d_L;
    std::complex<double> d_R;
};

/// The singlet/triplet target heralded by `d`.
AtomQubit target_state(Detector d);

struct OptimalState {
    AtomQubit state;
    double fidelity = 0.0;
};

struct HeraldReport {
    DetectionScheme scheme = DetectionScheme::Pnrd;
    std::array<double, 2> heralding{};
    std::array<std::optional<double>, 2> fidelity;
    double herald = 0.0;
    double success = 0.0;
    std::array<std::optional<double>, 2> optimal_fidelity;
    std::array<std::optional<AtomQubit>, 2> optimal_state;
};

double heralding_probability(const ChannelParams &cp, DetectionScheme s, Detector d);

/// Joint probability that `d` fires and the ensembles are found in `target`.
/// Identical for both detection schemes.
double success_weight(const ChannelParams &cp, Detector d, const AtomQubit &target);

double fidelity_singlet_triplet(const ChannelParams &cp, DetectionScheme s, Detector d);

/// Throws std::invalid_argument if |d_L|^2 + |d_R|^2 deviates from 1 by more than 1e-12.
double fidelity_arbitrary(const ChannelParams &cp, DetectionScheme s, Detector d, const AtomQubit &target);

/// Fidelity-maximizing partially entangled state for detector `d`.
/// Throws std::domain_error("no excitation channel") when eta_L p_cL + eta_R p_cR == 0.
OptimalState optimal_state(const ChannelParams &cp, DetectionScheme s, Detector d);

/// P_1 F_1 + P_2 F_2, assembled from the scheme's own P_j and F_j.
double success_probability(const ChannelParams &cp, DetectionScheme s);

/// Average over independent zero-mean Gaussian pump phases with variance
/// sigma2 on each ensemble. Only valid when the link is symmetric apart
/// from the phases.
double phase_averaged_fidelity(const ChannelParams &cp, DetectionScheme s, double sigma2);

/// Everything above for one configuration; undefined fidelities are empty.
HeraldReport herald_report(const ChannelParams &cp, DetectionScheme s);

// Symmetric link closed forms. These accept p_c = 1, where they are
// evaluated as the limit of the general expressions.
double symmetric_heralding_probability(const SymmetricParams &sp, DetectionScheme s);
double symmetric_success_probability(const SymmetricParams &sp);
double symmetric_fidelity(const SymmetricParams &sp, DetectionScheme s);

/// Second route through the Gaussian moments of the characteristic function
/// (PNRD only). Used to cross-check the closed forms.
namespace gaussian_route {

/// From the photon-section covariance: 4/(eta1 eta2 D) (1 - E{|zeta_pj|^2}).
double heralding_probability_pnrd(const ChannelParams &cp, Detector d);

/// 16 sqrt(det K)/(eta1 eta2) E{(1 - |zeta_pj|^2)(1 - |w|^2)} with the fourth
/// moment factored by Isserlis.
double success_weight_pnrd(const ChannelParams &cp, Detector d, const AtomQubit &target);

}  // namespace gaussian_route

}  // namespace dlcz

#endif
