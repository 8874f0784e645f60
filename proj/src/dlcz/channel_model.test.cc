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
#include <numbers>
#include <random>

#include "gtest/gtest.h"

using namespace dlcz;

namespace {

ChannelParams random_params(std::mt19937_64 &rng, double min_detector) {
    std::uniform_real_distribution<double> pc(0.0, 0.95);
    std::uniform_real_distribution<double> eta(0.0, 1.0);
    std::uniform_real_distribution<double> det(min_detector, 1.0);
    std::uniform_real_distribution<double> phase(-std::numbers::pi, std::numbers::pi);
    ChannelParams cp;
    cp.p_cL = pc(rng);
    cp.p_cR = pc(rng);
    cp.eta_L = eta(rng);
    cp.eta_R = eta(rng);
    cp.eta_1 = det(rng);
    cp.eta_2 = det(rng);
    cp.theta_L = phase(rng);
    cp.theta_R = phase(rng);
    return cp;
}

}  // namespace

TEST(channel_model, exponent_examples) {
    ChannelParams vac;
    QuadraticExponent q = exponent_coefficients(vac);
    ASSERT_EQ(q.alpha_L, 2.0);
    ASSERT_EQ(q.alpha_R, 2.0);
    ASSERT_EQ(q.beta_L, 2.0);
    ASSERT_EQ(q.beta_R, 2.0);
    ASSERT_EQ(q.gamma_L, 0.0);
    ASSERT_EQ(q.gamma_R, 0.0);
    ASSERT_EQ(q.delta, 0.0);

    ChannelParams unequal;
    unequal.eta_1 = 0.5;
    unequal.eta_2 = 0.25;
    ASSERT_DOUBLE_EQ(exponent_coefficients(unequal).delta, 2.0);

    ChannelParams sym = SymmetricParams{0.01, 1.0}.to_channel();
    ASSERT_NEAR(exponent_coefficients(sym).beta_L, 0.01 * (2.0 / 0.99) + 2.0, 1e-15);
    ASSERT_NEAR(exponent_coefficients(sym).beta_L, 2.0202, 1e-4);
}

TEST(channel_model, exponent_rejects_dead_detector) {
    ChannelParams cp;
    cp.eta_2 = 0.0;
    ASSERT_THROW(exponent_coefficients(cp), std::domain_error);
    // The covariance path stays finite there.
    cp.p_cL = 0.1;
    CovarianceMatrix k = covariance_from_params(cp);
    ASSERT_TRUE(k.entries().allFinite());
}

TEST(channel_model, validate_ranges) {
    ChannelParams cp;
    cp.p_cL = 1.0;
    ASSERT_THROW(cp.validate(), std::invalid_argument);
    cp = ChannelParams{};
    cp.eta_R = 1.5;
    ASSERT_THROW(cp.validate(), std::invalid_argument);
    cp = ChannelParams{};
    cp.eta_1 = -0.1;
    ASSERT_THROW(cp.validate(), std::invalid_argument);
    cp = ChannelParams{};
    cp.theta_L = INFINITY;
    ASSERT_THROW(cp.validate(), std::invalid_argument);
}

TEST(channel_model, symmetric_expansion) {
    ChannelParams cp = SymmetricParams{0.02, 0.3}.to_channel(0.6);
    ASSERT_EQ(cp.p_cL, 0.02);
    ASSERT_EQ(cp.p_cR, 0.02);
    ASSERT_DOUBLE_EQ(cp.eta_L, 0.5);
    ASSERT_EQ(cp.eta_L, cp.eta_R);
    ASSERT_EQ(cp.eta_1, 0.6);
    ASSERT_EQ(cp.eta_2, 0.6);
    ASSERT_EQ(cp.theta_L, cp.theta_R);
    ASSERT_THROW(SymmetricParams({0.02, 0.7}).to_channel(0.6), std::invalid_argument);
    ASSERT_THROW(SymmetricParams({0.02, 0.3}).to_channel(0.0), std::invalid_argument);
}

TEST(channel_model, covariance_examples) {
    ChannelParams vac;
    vac.eta_1 = 0.7;
    vac.eta_2 = 0.4;
    CovarianceMatrix k = covariance_from_params(vac);
    for (int i : {0, 1, 6, 7}) {
        ASSERT_EQ(k(i, i), 0.5);
        for (int j : {2, 3, 4, 5}) {
            ASSERT_EQ(k(i, j), 0.0);
        }
    }

    ChannelParams equal;
    equal.p_cL = 0.05;
    equal.p_cR = 0.03;
    equal.eta_L = 0.6;
    equal.eta_R = 0.9;
    equal.eta_1 = equal.eta_2 = 0.8;
    equal.theta_L = 0.4;
    CovarianceMatrix ke = covariance_from_params(equal);
    for (int j : {4, 5, 6, 7}) {
        ASSERT_EQ(ke(0, j), 0.0);
        ASSERT_EQ(ke(1, j), 0.0);
    }
    ASSERT_EQ(ke(2, 4), 0.0);
    ASSERT_EQ(ke(2, 6), 0.0);

    ChannelParams quarter;
    quarter.p_cL = 0.04;
    quarter.theta_L = std::numbers::pi / 2;
    CovarianceMatrix kq = covariance_from_params(quarter);
    ASSERT_NEAR(kq(1, 3), 0.0, 1e-16);
    ASSERT_NEAR(kq(0, 2), 0.0, 1e-16);
    ASSERT_NEAR(kq(0, 3), -0.1, 1e-15);
    ASSERT_NEAR(kq(2, 2), 0.5, 1e-15);
}

TEST(channel_model, table_matches_inverted_exponent) {
    std::mt19937_64 rng(500);
    for (int draw = 0; draw < 500; draw++) {
        ChannelParams cp = random_params(rng, 0.05);
        Matrix8 table = covariance_from_params(cp).entries();
        Matrix8 inverted = invert_spd<8>(exponent_matrix(exponent_coefficients(cp)));
        for (int i = 0; i < 8; i++) {
            for (int j = 0; j < 8; j++) {
                double tol = table(i, j) == 0.0 ? 1e-12 : 1e-10;
                ASSERT_NEAR(table(i, j), inverted(i, j), tol) << "draw " << draw << " (" << i << "," << j << ")";
            }
        }
    }
}

TEST(channel_model, determinant_identity) {
    std::mt19937_64 rng(501);
    for (int draw = 0; draw < 500; draw++) {
        ChannelParams cp = random_params(rng, 0.05);
        QuadraticExponent q = exponent_coefficients(cp);
        double want = cp.eta_1 * cp.eta_2 / (4.0 * q.alpha_L * q.alpha_R);
        double got = std::sqrt(covariance_from_params(cp).determinant());
        ASSERT_NEAR(got / want, 1.0, 1e-10) << draw;
    }
}

TEST(channel_model, positive_definite) {
    std::mt19937_64 rng(502);
    for (int draw = 0; draw < 500; draw++) {
        ChannelParams cp = random_params(rng, 0.01);
        ASSERT_TRUE(covariance_from_params(cp).is_positive_definite()) << draw;
    }
}

TEST(channel_model, left_right_relabeling) {
    // L<->R with eta_1<->eta_2 swaps the atom blocks and the two photon
    // modes; the first four real coordinates change sign.
    const int perm[8] = {6, 7, 4, 5, 2, 3, 0, 1};
    std::mt19937_64 rng(503);
    for (int draw = 0; draw < 200; draw++) {
        ChannelParams a = random_params(rng, 0.0);
        ChannelParams b{a.p_cR, a.p_cL, a.eta_R, a.eta_L, a.eta_2, a.eta_1, a.theta_R, a.theta_L};
        Matrix8 p = Matrix8::Zero();
        for (int i = 0; i < 8; i++) {
            p(i, perm[i]) = i < 4 ? -1.0 : 1.0;
        }
        Matrix8 mapped = p * covariance_from_params(a).entries() * p.transpose();
        ASSERT_LE((mapped - covariance_from_params(b).entries()).cwiseAbs().maxCoeff(), 1e-15) << draw;
        if (a.eta_1 > 0 && a.eta_2 > 0) {
            ASSERT_EQ(exponent_coefficients(b).delta, -exponent_coefficients(a).delta);
        }
    }
}

TEST(channel_model, delta_vanishes_iff_equal_detectors) {
    std::mt19937_64 rng(504);
    for (int draw = 0; draw < 200; draw++) {
        ChannelParams cp = random_params(rng, 0.05);
        ASSERT_NE(exponent_coefficients(cp).delta, 0.0);
        cp.eta_2 = cp.eta_1;
        ASSERT_EQ(exponent_coefficients(cp).delta, 0.0);
        Matrix8 k = covariance_from_params(cp).entries();
        for (auto [i, j] : {std::pair{0, 4}, {0, 5}, {0, 6}, {0, 7}, {1, 4}, {1, 5}, {1, 6}, {1, 7}, {2, 4}, {3, 5}, {2, 6}, {2, 7}, {3, 6}, {3, 7}}) {
            ASSERT_EQ(k(i, j), 0.0) << i << "," << j;
        }
    }
}

TEST(channel_model, photon_section_inverts_photon_block) {
    ChannelParams cp;
    cp.p_cL = 0.07;
    cp.p_cR = 0.02;
    cp.eta_L = 0.5;
    cp.eta_1 = 0.9;
    cp.eta_2 = 0.3;
    QuadraticExponent q = exponent_coefficients(cp);
    Eigen::Matrix4d block;
    block << q.beta_L, 0, q.delta, 0, 0, q.beta_L, 0, q.delta, q.delta, 0, q.beta_R, 0, 0, q.delta, 0, q.beta_R;
    Eigen::Matrix4d prod = block * photon_section_covariance(q);
    ASSERT_TRUE(prod.isApprox(Eigen::Matrix4d::Identity(), 1e-14));
    ASSERT_DOUBLE_EQ(photon_determinant(q), q.beta_L * q.beta_R - q.delta * q.delta);
}
