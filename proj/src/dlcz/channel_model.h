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

#ifndef DLCZ_CHANNEL_MODEL_H
#define DLCZ_CHANNEL_MODEL_H

#include <Eigen/Dense>

#include "dlcz/gaussian_core.h"

namespace dlcz {

/// Asymmetric entanglement-distribution link: two ensembles (L, R) whose
/// Stokes light crosses lossy paths to a 50/50 splitter and detectors D1, D2.
struct ChannelParams {
    double p_cL = 0.0;
    double p_cR = 0.0;
    double eta_L = 1.0;
    double eta_R = 1.0;
    double eta_1 = 1.0;
    double eta_2 = 1.0;
    double theta_L = 0.0;
    double theta_R = 0.0;

    /// Throws std::invalid_argument when a probability or efficiency is out of range.
    void validate() const;
    bool operator==(const ChannelParams &) const = default;
};

/// Fully symmetric link described by p_c and the system efficiency
/// eta_s = eta_L * eta_1.
struct SymmetricParams {
    double p_c = 0.0;
    double eta_s = 1.0;

    /// Expands with the given detector efficiency; the path transmissivity
    /// absorbs the rest (eta_L = eta_s / eta_d). Requires eta_s <= eta_d.
    ChannelParams to_channel(double detector_efficiency = 1.0) const;
};

/// Coefficients of the quadratic exponent of the post-channel
/// antinormally-ordered characteristic function.
struct QuadraticExponent {
    double alpha_L = 0.0;
    double alpha_R = 0.0;
    double beta_L = 0.0;
    double beta_R = 0.0;
    double gamma_L = 0.0;
    double gamma_R = 0.0;
    double delta = 0.0;
    double theta_L = 0.0;
    double theta_R = 0.0;
};

/// Throws std::domain_error("zero detector efficiency") if eta_1 * eta_2 == 0.
QuadraticExponent exponent_coefficients(const ChannelParams &cp);

/// Inverse covariance read off the exponent (the characteristic function
/// equals exp(-x^T M x / 2) in the real coordinate ordering of coord::).
Matrix8 exponent_matrix(const QuadraticExponent &q);

/// Closed-form covariance matrix. Finite for every valid ChannelParams,
/// including zero detector efficiencies.
CovarianceMatrix covariance_from_params(const ChannelParams &cp);

/// Covariance of the photon-only section chi(0, 0, zeta_p1, zeta_p2) in the
/// ordering [minus_re, minus_im, plus_re, plus_im].
Eigen::Matrix4d photon_section_covariance(const QuadraticExponent &q);

/// The (beta_L beta_R - delta^2) determinant factor.
double photon_determinant(const QuadraticExponent &q);

}  // namespace dlcz

#endif
