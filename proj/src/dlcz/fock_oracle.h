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

// Brute-force photon-number-basis simulation of the distribution, swap and
// teleport protocols. Shares no formulas with the Gaussian modules: states
// are built from their Fock expansions, every optical element is applied as
// an exact unitary on the occupation basis, and detection is an explicit sum
// over photon-count outcomes.

#ifndef DLCZ_FOCK_ORACLE_H
#define DLCZ_FOCK_ORACLE_H

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "dlcz/herald_metrics.h"
#include "dlcz/swap_teleport.h"

namespace dlcz::fock {

/// Sparse pure state (not necessarily normalized) over labelled modes.
///
/// Occupations are packed 8 bits per mode into a 64-bit key, so a tensor
/// holds at most 8 modes with at most 255 photons each. `n_max` is the
/// source truncation depth the tensor was built with.
class FockTensor {
   public:
    static constexpr size_t kMaxModes = 8;
    static constexpr int kMaxOccupation = 255;

    struct Entry {
        std::uint64_t key;
        std::complex<double> amplitude;
    };

    FockTensor(std::vector<std::string> labels, int n_max);

    /// All modes empty, amplitude 1.
    static FockTensor vacuum(std::vector<std::string> labels, int n_max);

    const std::vector<std::string> &mode_labels() const {
        return labels_;
    }
    size_t mode_count() const {
        return labels_.size();
    }
    int n_max() const {
        return n_max_;
    }
    /// Throws std::invalid_argument("unknown mode ...").
    size_t mode_index(std::string_view label) const;

    std::complex<double> amplitude(std::span<const int> occupations) const;
    /// Accumulates onto any existing amplitude.
    void add(std::span<const int> occupations, std::complex<double> amplitude);

    const std::vector<Entry> &entries() const {
        return entries_;
    }
    double norm_squared() const;
    /// Largest occupation of any mode in any stored entry.
    int max_occupation() const;

    static int occupation(std::uint64_t key, size_t mode) {
        return static_cast<int>((key >> (8 * mode)) & 0xFF);
    }
    static std::uint64_t with_occupation(std::uint64_t key, size_t mode, int n) {
        std::uint64_t mask = std::uint64_t{0xFF} << (8 * mode);
        return (key & ~mask) | (static_cast<std::uint64_t>(n) << (8 * mode));
    }

    // Low-level construction used by the operations below. Entries may hold
    // duplicate keys until canonicalize() merges them.
    void push(std::uint64_t key, std::complex<double> amplitude) {
        entries_.push_back({key, amplitude});
    }
    void canonicalize();
    void rename_mode(std::string_view from, std::string to);

   private:
    std::vector<std::string> labels_;
    int n_max_;
    std::vector<Entry> entries_;
    bool canonical_ = true;
};

/// Mixed state as an ensemble of unnormalized pure branches over the same
/// modes: rho = sum_b |b><b|.
struct MixedFockState {
    std::vector<FockTensor> branches;

    double trace() const;
};

/// Two-mode squeezed atom/photon state truncated at n_max excitations:
/// amplitude(n, n) = sqrt(1 - p_c) (sqrt(p_c) e^{i theta})^n.
FockTensor build_tms(double p_c, double theta, int n_max, std::string atom_label, std::string photon_label);

FockTensor tensor_product(const FockTensor &a, const FockTensor &b);

/// Real two-mode splitter acting on creation operators:
///   a^dag -> u(0,0) a'^dag + u(0,1) b'^dag,  b^dag -> u(1,0) a'^dag + u(1,1) b'^dag.
FockTensor apply_splitter(const FockTensor &t, std::string_view mode_a, std::string_view mode_b, const Eigen::Matrix2d &u);

/// Loss of transmissivity eta, modelled as a splitter against a fresh
/// vacuum ancilla appended as the last mode.
FockTensor apply_loss(const FockTensor &t, std::string_view mode, double eta, std::string ancilla_label);

enum class SplitterSign {
    /// First output (b - a)/sqrt(2), second (b + a)/sqrt(2).
    kFirstOutputDifference,
    /// First output (a + b)/sqrt(2), second (b - a)/sqrt(2).
    kSecondOutputDifference,
};

/// 50/50 splitter. Output modes reuse the input slots: mode_a carries the
/// first output, mode_b the second.
FockTensor apply_5050(const FockTensor &t, std::string_view mode_a, std::string_view mode_b, SplitterSign sign);

/// Traces out `mode`, one branch per occupation of that mode.
MixedFockState trace_out(const FockTensor &t, std::string_view mode);

struct DetectorOutcome {
    std::string mode;
    bool clicked = false;
};

/// Click on a PNRD means exactly one photon; on an NRPD one or more.
/// No click means zero photons for both.
struct Measurement {
    double probability = 0.0;
    std::optional<MixedFockState> post_state;

    /// Throws std::domain_error for a zero-probability outcome.
    const MixedFockState &post() const;
};

Measurement measure(const MixedFockState &state, std::span<const DetectorOutcome> outcomes, DetectionScheme scheme);
Measurement measure(const FockTensor &state, std::span<const DetectorOutcome> outcomes, DetectionScheme scheme);

/// <target| rho |target> with rho given by its branches.
double population(const MixedFockState &rho, const FockTensor &target);

/// Probability mass beyond n_max in a geometric photon-number distribution.
double tail_bound(double p_c, int n_max);

/// Combined bound for two independent sources.
double tail_bound(double p_cL, double p_cR, int n_max);

// ---------------------------------------------------------------------------
// Protocol oracles.

enum class OracleWarning { kNone, kTruncationExceedsTolerance };

struct OracleOptions {
    int n_max = 12;
    /// If set and the tail bound exceeds it, the result carries a warning.
    std::optional<double> tolerance;
};

struct OracleDistribution {
    HeraldReport report;
    /// Single-excitation block of P_j * rho_pm_j in the basis
    /// {|1>_L|0>_R, |0>_L|1>_R}; every single-excitation fidelity follows.
    std::array<Eigen::Matrix2cd, 2> excitation_block;
    double tail_bound = 0.0;
    double norm_squared = 0.0;
    OracleWarning warning = OracleWarning::kNone;

    /// <target| rho_pm_j |target>; throws UndefinedFidelity if P_j == 0.
    double fidelity(Detector d, const AtomQubit &target) const;
};

OracleDistribution oracle_distribution(const ChannelParams &cp, DetectionScheme s, const OracleOptions &options = {});

/// Measurement module acting on (mode_a, mode_b): eta_c loss on both
/// inputs, 50/50 splitter (first output in mode_a's slot, relabelled
/// out_1), eta_d loss on both outputs. Ancillas are traced as they appear.
MixedFockState apply_measurement_module(
    const MixedFockState &in,
    std::string_view mode_a,
    std::string_view mode_b,
    const MeasurementModule &m,
    std::string out_1,
    std::string out_2);

struct OracleSwap {
    ProtocolReport report;
    std::array<double, 2> heralding{};
};

/// Swap of two ideal singlets {L1,R1}, {L2,R2} by measuring R1 and L2.
OracleSwap oracle_swap(const MeasurementModule &m, int n_max = 3);

/// Heralding probability for each photon-number input |i>|j> of a module.
SwapComponents oracle_swap_components(const MeasurementModule &m, int n_max = 3);

/// Six-ensemble teleport input: qubit on {I1, I2}, singlets on {L1, R1} and
/// {L2, R2}. Modes ordered I1, I2, L1, L2, R1, R2.
FockTensor teleport_input_state(std::complex<double> d0, std::complex<double> d1, int n_max = 3);

struct TeleportHerald {
    /// +1 when both modules fire the same-numbered output, -1 otherwise.
    int sign = 0;
    Measurement measurement;
};

/// Runs both modules (upper on L1/I1, lower on L2/I2) and returns the four
/// heralding outcomes. Post-states live on R1, R2.
std::vector<TeleportHerald> teleport_heralds(const FockTensor &input, const MeasurementModule &m);

struct OracleTeleport {
    ProtocolReport report;
    double p_plus = 0.0;
    double p_minus = 0.0;
};

OracleTeleport oracle_teleport(const MeasurementModule &m, std::complex<double> d0, std::complex<double> d1, int n_max = 3);

}  // namespace dlcz::fock

#endif
