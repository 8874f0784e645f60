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

#include "dlcz/channel_model.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dlcz {

namespace {

void require_unit_interval(double v, const char *name, bool open_top) {
    bool ok = open_top ? (v >= 0.0 && v < 1.0) : (v >= 0.0 && v <= 1.0);
    if (!ok) {
        throw std::invalid_argument(std::string(name) + (open_top ? " must lie in [0, 1)" : " must lie in [0, 1]"));
    }
}

}  // namespace

void ChannelParams::validate() const {
    require_unit_interval(p_cL, "p_cL", true);
    require_unit_interval(p_cR, "p_cR", true);
    require_unit_interval(eta_L, "eta_L", false);
    require_unit_interval(eta_R, "eta_R", false);
    require_unit_interval(eta_1, "eta_1", false);
    require_unit_interval(eta_2, "eta_2", false);
    if (!std::isfinite(theta_L) || !std::isfinite(theta_R)) {
        throw std::invalid_argument("pump phases must be finite");
    }
}

ChannelParams SymmetricParams::to_channel(double detector_efficiency) const {
    if (!(detector_efficiency > 0.0) || detector_efficiency > 1.0) {
        throw std::invalid_argument("detector efficiency must lie in (0, 1]");
    }
    if (!(eta_s >= 0.0) || eta_s > detector_efficiency) {
        throw std::invalid_argument("system efficiency must lie in [0, detector efficiency]");
    }
    ChannelParams cp;
    cp.p_cL = cp.p_cR = p_c;
    cp.eta_L = cp.eta_R = eta_s / detector_efficiency;
    cp.eta_1 = cp.eta_2 = detector_efficiency;
    cp.validate();
    return cp;
}

QuadraticExponent exponent_coefficients(const ChannelParams &cp) {
    cp.validate();
    double detectors = cp.eta_1 * cp.eta_2;
    if (detectors == 0.0) {
        throw std::domain_error("zero detector efficiency");
    }
    QuadraticExponent q;
    q.alpha_L = 2.0 / (1.0 - cp.p_cL);
    q.alpha_R = 2.0 / (1.0 - cp.p_cR);
    double noise = (cp.eta_1 + cp.eta_2) / detectors;
    q.beta_L = cp.eta_L * cp.p_cL * q.alpha_L + noise;
    q.beta_R = cp.eta_R * cp.p_cR * q.alpha_R + noise;
    q.gamma_L = std::sqrt(cp.eta_L * cp.p_cL) * q.alpha_L;
    q.gamma_R = std::sqrt(cp.eta_R * cp.p_cR) * q.alpha_R;
    q.delta = (cp.eta_1 - cp.eta_2) / detectors;
    q.theta_L = cp.theta_L;
    q.theta_R = cp.theta_R;
    return q;
}

Matrix8 exponent_matrix(const QuadraticExponent &q) {
    using namespace coord;
    Matrix8 m = Matrix8::Zero();
    auto put = [&](int i, int j, double v) {
        m(i, j) = v;
        m(j, i) = v;
    };
    put(kAtomLRe, kAtomLRe, q.alpha_L);
    put(kAtomLIm, kAtomLIm, q.alpha_L);
    put(kPhotonMinusRe, kPhotonMinusRe, q.beta_L);
    put(kPhotonMinusIm, kPhotonMinusIm, q.beta_L);
    put(kPhotonPlusRe, kPhotonPlusRe, q.beta_R);
    put(kPhotonPlusIm, kPhotonPlusIm, q.beta_R);
    put(kAtomRRe, kAtomRRe, q.alpha_R);
    put(kAtomRIm, kAtomRIm, q.alpha_R);

    // gamma Re{e^{i theta} a^* p^*} expanded over real and imaginary parts.
    double cl = q.gamma_L * std::cos(q.theta_L);
    double sl = q.gamma_L * std::sin(q.theta_L);
    put(kAtomLRe, kPhotonMinusRe, cl);
    put(kAtomLIm, kPhotonMinusIm, -cl);
    put(kAtomLRe, kPhotonMinusIm, sl);
    put(kAtomLIm, kPhotonMinusRe, sl);

    double cr = q.gamma_R * std::cos(q.theta_R);
    double sr = q.gamma_R * std::sin(q.theta_R);
    put(kAtomRRe, kPhotonPlusRe, cr);
    put(kAtomRIm, kPhotonPlusIm, -cr);
    put(kAtomRRe, kPhotonPlusIm, sr);
    put(kAtomRIm, kPhotonPlusRe, sr);

    // delta Re{zeta_+ zeta_-^*}.
    put(kPhotonMinusRe, kPhotonPlusRe, q.delta);
    put(kPhotonMinusIm, kPhotonPlusIm, q.delta);
    return m;
}

CovarianceMatrix covariance_from_params(const ChannelParams &cp) {
    cp.validate();
    Matrix8 k = Matrix8::Zero();
    // 1-based helper so every line reads like the K_ij it fills.
    auto put = [&](int i, int j, double v) {
        k(i - 1, j - 1) = v;
        k(j - 1, i - 1) = v;
    };

    double sum = cp.eta_1 + cp.eta_2;
    double diff = cp.eta_1 - cp.eta_2;
    double left = std::sqrt(cp.eta_L * cp.p_cL);
    double right = std::sqrt(cp.eta_R * cp.p_cR);
    double cl = std::cos(cp.theta_L), sl = std::sin(cp.theta_L);
    double cr = std::cos(cp.theta_R), sr = std::sin(cp.theta_R);

    double atom_l = (1.0 - cp.p_cL) / 2.0 + cp.eta_L * cp.p_cL * sum / 4.0;
    put(1, 1, atom_l);
    put(2, 2, atom_l);

    double v = sum * left * cl / 4.0;
    put(2, 4, v);
    put(1, 3, -v);
    v = -sum * left * sl / 4.0;
    put(1, 4, v);
    put(2, 3, v);

    v = diff * left * cl / 4.0;
    put(1, 5, v);
    put(2, 6, -v);
    v = diff * left * sl / 4.0;
    put(1, 6, v);
    put(2, 5, v);

    v = -diff * left * right * std::cos(cp.theta_L - cp.theta_R) / 4.0;
    put(1, 7, v);
    put(2, 8, v);
    v = -diff * left * right * std::sin(cp.theta_R - cp.theta_L) / 4.0;
    put(1, 8, v);
    put(2, 7, -v);

    for (int i = 3; i <= 6; i++) {
        put(i, i, sum / 4.0);
    }
    put(3, 5, -diff / 4.0);
    put(4, 6, -diff / 4.0);

    v = diff * right * cr / 4.0;
    put(3, 7, v);
    put(4, 8, -v);
    v = diff * right * sr / 4.0;
    put(3, 8, v);
    put(4, 7, v);

    v = sum * right * cr / 4.0;
    put(6, 8, v);
    put(5, 7, -v);
    v = -sum * right * sr / 4.0;
    put(5, 8, v);
    put(6, 7, v);

    double atom_r = (1.0 - cp.p_cR) / 2.0 + cp.eta_R * cp.p_cR * sum / 4.0;
    put(7, 7, atom_r);
    put(8, 8, atom_r);
    return CovarianceMatrix(k);
}

double photon_determinant(const QuadraticExponent &q) {
    return q.beta_L * q.beta_R - q.delta * q.delta;
}

Eigen::Matrix4d photon_section_covariance(const QuadraticExponent &q) {
    double det = photon_determinant(q);
    Eigen::Matrix4d k = Eigen::Matrix4d::Zero();
    k(0, 0) = k(1, 1) = q.beta_R / det;
    k(2, 2) = k(3, 3) = q.beta_L / det;
    k(0, 2) = k(2, 0) = -q.delta / det;
    k(1, 3) = k(3, 1) = -q.delta / det;
    return k;
}

}  // namespace dlcz
