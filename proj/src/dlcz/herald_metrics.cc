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

#include "dlcz/herald_metrics.h"

#include <cmath>
#include <string>

namespace dlcz {

namespace {

constexpr double kNormalizationTolerance = 1e-12;
constexpr double kSymmetryTolerance = 1e-12;

double sign_of(Detector d) {
    return d == Detector::D1 ? -1.0 : 1.0;
}

double eta_of(const ChannelParams &cp, Detector d) {
    return d == Detector::D1 ? cp.eta_1 : cp.eta_2;
}

double eta_other(const ChannelParams &cp, Detector d) {
    return d == Detector::D1 ? cp.eta_2 : cp.eta_1;
}

void check_normalized(const AtomQubit &q) {
    double n = std::norm(q.d_L) + std::norm(q.d_R);
    if (!(std::abs(n - 1.0) <= kNormalizationTolerance)) {
        throw std::invalid_argument("target state (d_L, d_R) is not normalized");
    }
}

// Heralding probabilities written in y_A = eta_A p_cA and z_A = 1 - p_cA.
// Multiplying the (alpha, beta, delta) forms through by eta_1 eta_2 and
// (1 - p_cL)(1 - p_cR) removes every division by an efficiency, so the same
// expression covers eta_j = 0.
struct LinkTerms {
    double y_L, y_R, z_L, z_R;
    double cross;  // y_L z_R + y_R z_L
    double q;      // eta1 eta2 y_L y_R + (eta1 + eta2)/2 cross + z_L z_R
};

LinkTerms link_terms(const ChannelParams &cp) {
    LinkTerms t{};
    t.y_L = cp.eta_L * cp.p_cL;
    t.y_R = cp.eta_R * cp.p_cR;
    t.z_L = 1.0 - cp.p_cL;
    t.z_R = 1.0 - cp.p_cR;
    t.cross = t.y_L * t.z_R + t.y_R * t.z_L;
    t.q = cp.eta_1 * cp.eta_2 * t.y_L * t.y_R + 0.5 * (cp.eta_1 + cp.eta_2) * t.cross + t.z_L * t.z_R;
    return t;
}

double require_positive(double p) {
    if (!(p > 0.0)) {
        throw UndefinedFidelity();
    }
    return p;
}

}  // namespace

std::string_view scheme_name(DetectionScheme s) {
    return s == DetectionScheme::Pnrd ? "PNRD" : "NRPD";
}

DetectionScheme parse_scheme(std::string_view name) {
    if (name == "PNRD" || name == "pnrd") {
        return DetectionScheme::Pnrd;
    }
    if (name == "NRPD" || name == "nrpd") {
        return DetectionScheme::Nrpd;
    }
    throw std::invalid_argument("unknown detection scheme '" + std::string(name) + "'");
}

AtomQubit target_state(Detector d) {
    double h = 1.0 / std::sqrt(2.0);
    return AtomQubit{sign_of(d) * h, h};
}

double heralding_probability(const ChannelParams &cp, DetectionScheme s, Detector d) {
    cp.validate();
    LinkTerms t = link_terms(cp);
    double eta_j = eta_of(cp, d);
    double eta_i = eta_other(cp, d);
    double numerator = eta_j * (2.0 * eta_i * t.y_L * t.y_R + t.cross) * t.z_L * t.z_R;
    if (s == DetectionScheme::Pnrd) {
        return numerator / (2.0 * t.q * t.q);
    }
    return numerator / (t.q * (eta_i * t.cross + 2.0 * t.z_L * t.z_R));
}

double success_weight(const ChannelParams &cp, Detector d, const AtomQubit &target) {
    cp.validate();
    std::complex<double> amplitude =
        std::sqrt(cp.eta_L * cp.p_cL) * std::conj(target.d_L) * std::polar(1.0, cp.theta_L) +
        sign_of(d) * std::sqrt(cp.eta_R * cp.p_cR) * std::conj(target.d_R) * std::polar(1.0, cp.theta_R);
    return eta_of(cp, d) * (1.0 - cp.p_cL) * (1.0 - cp.p_cR) * std::norm(amplitude) / 2.0;
}

double fidelity_singlet_triplet(const ChannelParams &cp, DetectionScheme s, Detector d) {
    double p = require_positive(heralding_probability(cp, s, d));
    return success_weight(cp, d, target_state(d)) / p;
}

double fidelity_arbitrary(const ChannelParams &cp, DetectionScheme s, Detector d, const AtomQubit &target) {
    check_normalized(target);
    double p = require_positive(heralding_probability(cp, s, d));
    return success_weight(cp, d, target) / p;
}

OptimalState optimal_state(const ChannelParams &cp, DetectionScheme s, Detector d) {
    cp.validate();
    double y_L = cp.eta_L * cp.p_cL;
    double y_R = cp.eta_R * cp.p_cR;
    double total = y_L + y_R;
    if (!(total > 0.0)) {
        throw std::domain_error("no excitation channel");
    }
    OptimalState out;
    out.state.d_L = std::sqrt(y_L / total);
    out.state.d_R = sign_of(d) * std::polar(std::sqrt(y_R / total), cp.theta_R - cp.theta_L);
    double p = require_positive(heralding_probability(cp, s, d));
    out.fidelity = eta_of(cp, d) * (1.0 - cp.p_cL) * (1.0 - cp.p_cR) * total / (2.0 * p);
    return out;
}

double success_probability(const ChannelParams &cp, DetectionScheme s) {
    double total = 0.0;
    for (Detector d : kDetectors) {
        double p = heralding_probability(cp, s, d);
        if (p > 0.0) {
            total += p * fidelity_singlet_triplet(cp, s, d);
        }
    }
    return total;
}

double phase_averaged_fidelity(const ChannelParams &cp, DetectionScheme s, double sigma2) {
    cp.validate();
    if (!(sigma2 >= 0.0)) {
        throw std::invalid_argument("phase variance must be non-negative");
    }
    if (std::abs(cp.p_cL - cp.p_cR) > kSymmetryTolerance || std::abs(cp.eta_L - cp.eta_R) > kSymmetryTolerance ||
        std::abs(cp.eta_1 - cp.eta_2) > kSymmetryTolerance) {
        throw std::invalid_argument("closed form valid only for symmetric setup");
    }
    double f_sym = symmetric_fidelity(SymmetricParams{cp.p_cL, cp.eta_L * cp.eta_1}, s);
    return f_sym * (1.0 + std::exp(-sigma2)) / 2.0;
}

HeraldReport herald_report(const ChannelParams &cp, DetectionScheme s) {
    HeraldReport r;
    r.scheme = s;
    for (Detector d : kDetectors) {
        int i = detector_index(d);
        r.heralding[i] = heralding_probability(cp, s, d);
        r.herald += r.heralding[i];
        if (r.heralding[i] > 0.0) {
            r.fidelity[i] = fidelity_singlet_triplet(cp, s, d);
            r.success += r.heralding[i] * *r.fidelity[i];
            if (cp.eta_L * cp.p_cL + cp.eta_R * cp.p_cR > 0.0) {
                OptimalState opt = optimal_state(cp, s, d);
                r.optimal_fidelity[i] = opt.fidelity;
                r.optimal_state[i] = opt.state;
            }
        }
    }
    return r;
}

double symmetric_heralding_probability(const SymmetricParams &sp, DetectionScheme s) {
    double p = sp.p_c;
    double base = sp.eta_s * p + 1.0 - p;
    if (sp.eta_s * p * (1.0 - p) == 0.0) {
        return 0.0;  // also covers p_c = 1, eta_s = 0 where base vanishes
    }
    if (s == DetectionScheme::Pnrd) {
        return (1.0 - p) * (1.0 - p) * sp.eta_s * p / (base * base * base);
    }
    return (1.0 - p) * sp.eta_s * p / (base * base);
}

double symmetric_success_probability(const SymmetricParams &sp) {
    return 2.0 * sp.eta_s * sp.p_c * (1.0 - sp.p_c) * (1.0 - sp.p_c);
}

double symmetric_fidelity(const SymmetricParams &sp, DetectionScheme s) {
    double base = sp.eta_s * sp.p_c + 1.0 - sp.p_c;
    if (s == DetectionScheme::Pnrd) {
        return base * base * base;
    }
    return (1.0 - sp.p_c) * base * base;
}

namespace gaussian_route {

namespace {

// zeta_pj = (zeta_+ + (-1)^j zeta_-)/sqrt(2 eta_j).
ComplexWeights detector_variable(const ChannelParams &cp, Detector d) {
    return (complex_variable(coord::kPhotonPlusRe) + sign_of(d) * complex_variable(coord::kPhotonMinusRe)) /
           std::sqrt(2.0 * eta_of(cp, d));
}

ComplexWeights atom_projection(const AtomQubit &target) {
    return std::conj(target.d_L) * complex_variable(coord::kAtomLRe) +
           std::conj(target.d_R) * complex_variable(coord::kAtomRRe);
}

}  // namespace

double heralding_probability_pnrd(const ChannelParams &cp, Detector d) {
    QuadraticExponent q = exponent_coefficients(cp);
    Eigen::Matrix4d section = photon_section_covariance(q);
    // Same detector variable, restricted to [minus_re, minus_im, plus_re, plus_im].
    Eigen::Matrix<std::complex<double>, 4, 1> w;
    std::complex<double> i(0.0, 1.0);
    double scale = 1.0 / std::sqrt(2.0 * eta_of(cp, d));
    w << sign_of(d) * scale, sign_of(d) * scale * i, scale, scale * i;
    std::complex<double> second = (w.transpose() * section.cast<std::complex<double>>() * w.conjugate())(0, 0);
    double norm = 4.0 / (cp.eta_1 * cp.eta_2 * photon_determinant(q));
    return norm * (1.0 - second.real());
}

double success_weight_pnrd(const ChannelParams &cp, Detector d, const AtomQubit &target) {
    check_normalized(target);
    if (cp.eta_1 * cp.eta_2 == 0.0) {
        throw std::domain_error("zero detector efficiency");
    }
    CovarianceMatrix k = covariance_from_params(cp);
    ComplexWeights zp = detector_variable(cp, d);
    ComplexWeights w = atom_projection(target);
    ComplexWeights zp_c = zp.conjugate();
    ComplexWeights w_c = w.conjugate();

    double zz = pair_moment(k, zp, zp_c).real();
    double ww = pair_moment(k, w, w_c).real();
    double zzww = fourth_moment_factored(k, zp, zp_c, w, w_c).real();
    double expectation = 1.0 - zz - ww + zzww;
    return 16.0 * std::sqrt(k.determinant()) / (cp.eta_1 * cp.eta_2) * expectation;
}

}  // namespace gaussian_route

}  // namespace dlcz
