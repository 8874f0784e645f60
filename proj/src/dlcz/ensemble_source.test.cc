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
#include <numbers>
#include <random>

#include "gtest/gtest.h"

using namespace dlcz;

namespace {

PumpParams unit_pump(double duration) {
    PumpParams p;
    p.atom_count = 1;
    p.rabi_frequency = 1.0;
    p.coupling = 1.0;
    p.duration = duration;
    return p;
}

}  // namespace

TEST(ensemble_source, no_pumping_is_vacuum) {
    SourceState s = pump_to_source(unit_pump(0.0), 0.0);
    ASSERT_EQ(s.squeeze, 0.0);
    ASSERT_EQ(s.excitation_probability, 0.0);
    ASSERT_EQ(s.mu, std::complex<double>(1.0, 0.0));
    ASSERT_EQ(std::abs(s.nu), 0.0);
}

TEST(ensemble_source, cosh_two) {
    // E = 2 t with unit rates, so t = ln(2)/2 gives cosh r = 2.
    SourceState s = pump_to_source(unit_pump(std::log(2.0) / 2.0), 0.0);
    ASSERT_NEAR(s.squeeze, std::acosh(2.0), 1e-14);
    ASSERT_NEAR(s.excitation_probability, 0.75, 1e-15);
    ASSERT_NEAR(std::abs(s.mu), 2.0, 1e-14);
    ASSERT_NEAR(std::abs(s.nu), std::sqrt(3.0), 1e-14);
}

TEST(ensemble_source, excitation_grows_with_duration) {
    double last = -1.0;
    for (double t = 0.0; t <= 3.0; t += 0.05) {
        double p = pump_to_source(unit_pump(t), 0.0).excitation_probability;
        ASSERT_GT(p, last);
        last = p;
    }
}

TEST(ensemble_source, pump_exponent_formula) {
    PumpParams p;
    p.atom_count = 1000;
    p.rabi_frequency = 2.0;
    p.coupling = 0.5;
    p.duration = 1e-3;
    p.detuning = 4.0;
    p.cavity_decay = 0.25;
    ASSERT_NEAR(pump_exponent(p), 2.0 * 1000 * 1.0 * 1e-3 / (16.0 * 0.25), 1e-15);
}

TEST(ensemble_source, pump_errors) {
    PumpParams p = unit_pump(1.0);
    p.atom_count = 0;
    ASSERT_THROW(pump_to_source(p, 0.0), std::invalid_argument);
    p = unit_pump(1.0);
    p.detuning = 0.0;
    ASSERT_THROW(pump_to_source(p, 0.0), std::invalid_argument);
    p = unit_pump(-1.0);
    ASSERT_THROW(pump_to_source(p, 0.0), std::invalid_argument);

    ASSERT_THROW(pump_to_source(unit_pump(100.0), 0.0), std::range_error);
    ASSERT_THROW(pump_to_source(unit_pump(1e308), 0.0), std::range_error);
}

TEST(ensemble_source, pc_to_source_examples) {
    SourceState vac = pc_to_source(0.0, 1.3);
    ASSERT_EQ(vac.squeeze, 0.0);
    ASSERT_EQ(vac.mu, std::complex<double>(1.0, 0.0));
    ASSERT_EQ(std::abs(vac.nu), 0.0);

    SourceState s = pc_to_source(0.75, 0.0);
    ASSERT_NEAR(s.mu.real(), 2.0, 1e-14);
    ASSERT_NEAR(s.nu.real(), -std::sqrt(3.0), 1e-14);
    ASSERT_NEAR(s.nu.imag(), 0.0, 1e-15);

    SourceState pi = pc_to_source(0.01, std::numbers::pi);
    // sinh(atanh 0.1) = 0.1/sqrt(0.99)
    ASSERT_NEAR(std::abs(pi.nu), 0.10050378152592121, 1e-15);
    ASSERT_NEAR(pi.nu.real(), 0.10050378152592121, 1e-15);
}

TEST(ensemble_source, pc_to_source_rejects) {
    ASSERT_THROW(pc_to_source(1.0, 0.0), std::domain_error);
    ASSERT_THROW(pc_to_source(1.5, 0.0), std::domain_error);
    ASSERT_THROW(pc_to_source(-0.1, 0.0), std::domain_error);
    ASSERT_THROW(pc_to_source(std::nan(""), 0.0), std::domain_error);
}

TEST(ensemble_source, state_invariants) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> pc(0.0, 0.99);
    std::uniform_real_distribution<double> phase(-4.0, 4.0);
    for (int k = 0; k < 1000; k++) {
        double p = pc(rng);
        SourceState s = pc_to_source(p, phase(rng));
        ASSERT_NEAR(std::norm(s.mu) - std::norm(s.nu), 1.0, 1e-12 * std::norm(s.mu));
        ASSERT_NEAR(std::norm(s.nu / s.mu), p, 1e-14);
        ASSERT_NEAR(std::tanh(s.squeeze) * std::tanh(s.squeeze), p, 1e-14);
        ASSERT_NEAR(std::abs(s.mu), std::cosh(s.squeeze), 1e-12 * std::abs(s.mu));
    }
}

TEST(ensemble_source, pump_and_pc_round_trip) {
    for (double t : {1e-9, 1e-4, 0.01, 0.3, 1.0}) {
        SourceState pumped = pump_to_source(unit_pump(t), 0.4);
        SourceState back = pc_to_source(pumped.excitation_probability, 0.4);
        ASSERT_NEAR(back.squeeze, pumped.squeeze, 1e-12 * std::max(1.0, pumped.squeeze)) << t;
        if (t >= 0.01) {
            ASSERT_NEAR(pumped.squeeze, std::acosh(std::exp(2.0 * t)), 1e-12 * std::max(1.0, pumped.squeeze)) << t;
        }
    }
}
