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

#include "dlcz/fock_oracle.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace dlcz::fock {

namespace {

constexpr int kMaxSourceDepth = 100;

std::uint64_t remove_mode(std::uint64_t key, size_t mode) {
    std::uint64_t low = mode == 0 ? 0 : key & ((std::uint64_t{1} << (8 * mode)) - 1);
    std::uint64_t high = mode + 1 >= 8 ? 0 : key >> (8 * (mode + 1));
    return low | (high << (8 * mode));
}

std::uint64_t pack(std::span<const int> occupations) {
    std::uint64_t key = 0;
    for (size_t i = 0; i < occupations.size(); i++) {
        int n = occupations[i];
        if (n < 0 || n > FockTensor::kMaxOccupation) {
            throw std::invalid_argument("occupation out of range");
        }
        key = FockTensor::with_occupation(key, i, n);
    }
    return key;
}

double log_factorial(int n) {
    return std::lgamma(static_cast<double>(n) + 1.0);
}

double binomial(int n, int k) {
    return std::exp(log_factorial(n) - log_factorial(k) - log_factorial(n - k));
}

// Output amplitudes for |n>_a|m>_b -> |k>_a|n+m-k>_b, k = 0..n+m.
std::vector<double> splitter_row(int n, int m, const Eigen::Matrix2d &u) {
    int total = n + m;
    std::vector<double> out(total + 1, 0.0);
    for (int k = 0; k <= total; k++) {
        double sum = 0.0;
        for (int i = std::max(0, k - m); i <= std::min(n, k); i++) {
            int j = k - i;
            sum += std::round(binomial(n, i)) * std::round(binomial(m, j)) * std::pow(u(0, 0), i) *
                   std::pow(u(0, 1), n - i) * std::pow(u(1, 0), j) * std::pow(u(1, 1), m - j);
        }
        double norm = 0.5 * (log_factorial(k) + log_factorial(total - k) - log_factorial(n) - log_factorial(m));
        out[k] = sum * std::exp(norm);
    }
    return out;
}

std::vector<size_t> indices_of(const FockTensor &t, std::span<const DetectorOutcome> outcomes) {
    std::vector<size_t> idx;
    for (const auto &o : outcomes) {
        size_t i = t.mode_index(o.mode);
        if (std::find(idx.begin(), idx.end(), i) != idx.end()) {
            throw std::invalid_argument("detector mode listed twice: " + o.mode);
        }
        idx.push_back(i);
    }
    return idx;
}

bool accepts(int count, bool clicked, DetectionScheme s) {
    if (!clicked) {
        return count == 0;
    }
    return s == DetectionScheme::Pnrd ? count == 1 : count >= 1;
}

void measure_into(
    const FockTensor &t,
    std::span<const DetectorOutcome> outcomes,
    DetectionScheme s,
    double &probability,
    MixedFockState &post) {
    std::vector<size_t> idx = indices_of(t, outcomes);
    std::vector<size_t> keep;
    std::vector<std::string> labels;
    for (size_t i = 0; i < t.mode_count(); i++) {
        if (std::find(idx.begin(), idx.end(), i) == idx.end()) {
            keep.push_back(i);
            labels.push_back(t.mode_labels()[i]);
        }
    }
    std::map<std::uint64_t, FockTensor> by_pattern;
    for (const auto &e : t.entries()) {
        std::uint64_t pattern = 0;
        bool ok = true;
        for (size_t d = 0; d < idx.size(); d++) {
            int c = FockTensor::occupation(e.key, idx[d]);
            if (!accepts(c, outcomes[d].clicked, s)) {
                ok = false;
                break;
            }
            pattern = FockTensor::with_occupation(pattern, d, c);
        }
        if (!ok) {
            continue;
        }
        probability += std::norm(e.amplitude);
        std::uint64_t reduced = 0;
        for (size_t k = 0; k < keep.size(); k++) {
            reduced = FockTensor::with_occupation(reduced, k, FockTensor::occupation(e.key, keep[k]));
        }
        auto it = by_pattern.try_emplace(pattern, labels, t.n_max()).first;
        it->second.push(reduced, e.amplitude);
    }
    for (auto &[pattern, branch] : by_pattern) {
        branch.canonicalize();
        post.branches.push_back(std::move(branch));
    }
}

Eigen::Vector2cd excitation_vector(const FockTensor &t) {
    std::array<int, 2> one_zero{1, 0};
    std::array<int, 2> zero_one{0, 1};
    return {t.amplitude(one_zero), t.amplitude(zero_one)};
}

FockTensor qubit_on(std::string a, std::string b, std::complex<double> ca, std::complex<double> cb, int n_max) {
    FockTensor t({std::move(a), std::move(b)}, n_max);
    std::array<int, 2> one_zero{1, 0};
    std::array<int, 2> zero_one{0, 1};
    t.add(one_zero, ca);
    t.add(zero_one, cb);
    return t;
}

void check_module_depth(int n_max) {
    if (n_max < 2 || n_max > kMaxSourceDepth) {
        throw std::invalid_argument("n_max must allow two photons per mode");
    }
}

}  // namespace

FockTensor::FockTensor(std::vector<std::string> labels, int n_max) : labels_(std::move(labels)), n_max_(n_max) {
    if (labels_.size() > kMaxModes) {
        throw std::invalid_argument("too many modes");
    }
    for (size_t i = 0; i < labels_.size(); i++) {
        for (size_t j = i + 1; j < labels_.size(); j++) {
            if (labels_[i] == labels_[j]) {
                throw std::invalid_argument("duplicate mode label: " + labels_[i]);
            }
        }
    }
}

FockTensor FockTensor::vacuum(std::vector<std::string> labels, int n_max) {
    FockTensor t(std::move(labels), n_max);
    t.push(0, 1.0);
    return t;
}

size_t FockTensor::mode_index(std::string_view label) const {
    for (size_t i = 0; i < labels_.size(); i++) {
        if (labels_[i] == label) {
            return i;
        }
    }
    throw std::invalid_argument("unknown mode " + std::string(label));
}

std::complex<double> FockTensor::amplitude(std::span<const int> occupations) const {
    if (occupations.size() != labels_.size()) {
        throw std::invalid_argument("occupation count does not match mode count");
    }
    std::uint64_t key = pack(occupations);
    if (canonical_) {
        auto it = std::lower_bound(entries_.begin(), entries_.end(), key, [](const Entry &e, std::uint64_t k) {
            return e.key < k;
        });
        return it != entries_.end() && it->key == key ? it->amplitude : std::complex<double>{};
    }
    std::complex<double> sum{};
    for (const auto &e : entries_) {
        if (e.key == key) {
            sum += e.amplitude;
        }
    }
    return sum;
}

void FockTensor::add(std::span<const int> occupations, std::complex<double> amplitude) {
    if (occupations.size() != labels_.size()) {
        throw std::invalid_argument("occupation count does not match mode count");
    }
    entries_.push_back({pack(occupations), amplitude});
    canonicalize();
}

void FockTensor::canonicalize() {
    std::sort(entries_.begin(), entries_.end(), [](const Entry &a, const Entry &b) {
        return a.key < b.key;
    });
    size_t out = 0;
    for (size_t i = 0; i < entries_.size();) {
        Entry merged = entries_[i];
        size_t j = i + 1;
        while (j < entries_.size() && entries_[j].key == merged.key) {
            merged.amplitude += entries_[j].amplitude;
            j++;
        }
        if (merged.amplitude != std::complex<double>{}) {
            entries_[out++] = merged;
        }
        i = j;
    }
    entries_.resize(out);
    canonical_ = true;
}

double FockTensor::norm_squared() const {
    double s = 0.0;
    for (const auto &e : entries_) {
        s += std::norm(e.amplitude);
    }
    return s;
}

int FockTensor::max_occupation() const {
    int best = 0;
    for (const auto &e : entries_) {
        for (size_t m = 0; m < labels_.size(); m++) {
            best = std::max(best, occupation(e.key, m));
        }
    }
    return best;
}

void FockTensor::rename_mode(std::string_view from, std::string to) {
    size_t i = mode_index(from);
    for (size_t j = 0; j < labels_.size(); j++) {
        if (j != i && labels_[j] == to) {
            throw std::invalid_argument("duplicate mode label: " + to);
        }
    }
    labels_[i] = std::move(to);
}

double MixedFockState::trace() const {
    double s = 0.0;
    for (const auto &b : branches) {
        s += b.norm_squared();
    }
    return s;
}

FockTensor build_tms(double p_c, double theta, int n_max, std::string atom_label, std::string photon_label) {
    if (!(p_c >= 0.0 && p_c < 1.0)) {
        throw std::domain_error("excitation probability must be < 1 (and >= 0)");
    }
    if (n_max < 0 || n_max > kMaxSourceDepth) {
        throw std::invalid_argument("n_max out of range");
    }
    FockTensor t({std::move(atom_label), std::move(photon_label)}, n_max);
    std::complex<double> step = std::polar(std::sqrt(p_c), theta);
    std::complex<double> amp = std::sqrt(1.0 - p_c);
    for (int n = 0; n <= n_max; n++) {
        std::uint64_t key = FockTensor::with_occupation(FockTensor::with_occupation(0, 0, n), 1, n);
        t.push(key, amp);
        amp *= step;
    }
    t.canonicalize();
    return t;
}

FockTensor tensor_product(const FockTensor &a, const FockTensor &b) {
    std::vector<std::string> labels = a.mode_labels();
    labels.insert(labels.end(), b.mode_labels().begin(), b.mode_labels().end());
    FockTensor t(std::move(labels), std::max(a.n_max(), b.n_max()));
    unsigned shift = 8 * static_cast<unsigned>(a.mode_count());
    for (const auto &ea : a.entries()) {
        for (const auto &eb : b.entries()) {
            t.push(ea.key | (eb.key << shift), ea.amplitude * eb.amplitude);
        }
    }
    t.canonicalize();
    return t;
}

FockTensor apply_splitter(const FockTensor &t, std::string_view mode_a, std::string_view mode_b, const Eigen::Matrix2d &u) {
    size_t ia = t.mode_index(mode_a);
    size_t ib = t.mode_index(mode_b);
    if (ia == ib) {
        throw std::invalid_argument("splitter needs two distinct modes");
    }
    if (!(u * u.transpose()).isIdentity(1e-12)) {
        throw std::invalid_argument("splitter matrix must be orthogonal");
    }
    std::map<std::pair<int, int>, std::vector<double>> rows;
    FockTensor out(t.mode_labels(), t.n_max());
    for (const auto &e : t.entries()) {
        int n = FockTensor::occupation(e.key, ia);
        int m = FockTensor::occupation(e.key, ib);
        if (n + m > FockTensor::kMaxOccupation) {
            throw std::overflow_error("splitter output exceeds occupation limit");
        }
        auto it = rows.find({n, m});
        if (it == rows.end()) {
            it = rows.emplace(std::pair{n, m}, splitter_row(n, m, u)).first;
        }
        const std::vector<double> &row = it->second;
        for (int k = 0; k <= n + m; k++) {
            if (row[k] == 0.0) {
                continue;
            }
            std::uint64_t key = FockTensor::with_occupation(FockTensor::with_occupation(e.key, ia, k), ib, n + m - k);
            out.push(key, e.amplitude * row[k]);
        }
    }
    out.canonicalize();
    return out;
}

FockTensor apply_loss(const FockTensor &t, std::string_view mode, double eta, std::string ancilla_label) {
    if (!(eta >= 0.0 && eta <= 1.0)) {
        throw std::invalid_argument("transmissivity must lie in [0, 1]");
    }
    std::vector<std::string> labels = t.mode_labels();
    labels.push_back(ancilla_label);
    FockTensor widened(std::move(labels), t.n_max());
    for (const auto &e : t.entries()) {
        widened.push(e.key, e.amplitude);
    }
    widened.canonicalize();
    double s = std::sqrt(eta);
    double c = std::sqrt(1.0 - eta);
    Eigen::Matrix2d u;
    u << s, c, -c, s;
    return apply_splitter(widened, mode, ancilla_label, u);
}

FockTensor apply_5050(const FockTensor &t, std::string_view mode_a, std::string_view mode_b, SplitterSign sign) {
    double h = std::numbers::sqrt2 / 2.0;
    Eigen::Matrix2d u;
    if (sign == SplitterSign::kFirstOutputDifference) {
        // a^dag = (d^dag - c^dag)/sqrt2, b^dag = (c^dag + d^dag)/sqrt2.
        u << -h, h, h, h;
    } else {
        // a^dag = (c^dag - d^dag)/sqrt2, b^dag = (c^dag + d^dag)/sqrt2.
        u << h, -h, h, h;
    }
    return apply_splitter(t, mode_a, mode_b, u);
}

MixedFockState trace_out(const FockTensor &t, std::string_view mode) {
    size_t idx = t.mode_index(mode);
    std::vector<std::string> labels = t.mode_labels();
    labels.erase(labels.begin() + static_cast<std::ptrdiff_t>(idx));
    std::map<int, FockTensor> groups;
    for (const auto &e : t.entries()) {
        int n = FockTensor::occupation(e.key, idx);
        auto it = groups.try_emplace(n, labels, t.n_max()).first;
        it->second.push(remove_mode(e.key, idx), e.amplitude);
    }
    MixedFockState out;
    out.branches.reserve(groups.size());
    for (auto &[n, branch] : groups) {
        branch.canonicalize();
        out.branches.push_back(std::move(branch));
    }
    return out;
}

const MixedFockState &Measurement::post() const {
    if (!post_state) {
        throw std::domain_error("measurement outcome has zero probability");
    }
    return *post_state;
}

Measurement measure(const MixedFockState &state, std::span<const DetectorOutcome> outcomes, DetectionScheme scheme) {
    Measurement m;
    MixedFockState post;
    for (const auto &b : state.branches) {
        measure_into(b, outcomes, scheme, m.probability, post);
    }
    if (m.probability > 0.0) {
        m.post_state = std::move(post);
    }
    return m;
}

Measurement measure(const FockTensor &state, std::span<const DetectorOutcome> outcomes, DetectionScheme scheme) {
    Measurement m;
    MixedFockState post;
    measure_into(state, outcomes, scheme, m.probability, post);
    if (m.probability > 0.0) {
        m.post_state = std::move(post);
    }
    return m;
}

double population(const MixedFockState &rho, const FockTensor &target) {
    double total = 0.0;
    for (const auto &b : rho.branches) {
        if (b.mode_labels() != target.mode_labels()) {
            throw std::invalid_argument("target modes do not match state modes");
        }
        std::complex<double> overlap{};
        for (const auto &e : target.entries()) {
            auto it = std::lower_bound(b.entries().begin(), b.entries().end(), e.key, [](const auto &x, std::uint64_t k) {
                return x.key < k;
            });
            if (it != b.entries().end() && it->key == e.key) {
                overlap += std::conj(e.amplitude) * it->amplitude;
            }
        }
        total += std::norm(overlap);
    }
    return total;
}

double tail_bound(double p_c, int n_max) {
    return std::pow(p_c, n_max + 1);
}

double tail_bound(double p_cL, double p_cR, int n_max) {
    return 1.0 - (1.0 - tail_bound(p_cL, n_max)) * (1.0 - tail_bound(p_cR, n_max));
}

double OracleDistribution::fidelity(Detector d, const AtomQubit &target) const {
    int j = detector_index(d);
    if (!(report.heralding[j] > 0.0)) {
        throw UndefinedFidelity();
    }
    Eigen::Vector2cd t(target.d_L, target.d_R);
    return (t.adjoint() * excitation_block[j] * t)(0).real() / report.heralding[j];
}

OracleDistribution oracle_distribution(const ChannelParams &cp, DetectionScheme s, const OracleOptions &options) {
    cp.validate();
    int n_max = options.n_max;
    if (n_max < 1 || n_max > kMaxSourceDepth) {
        throw std::invalid_argument("n_max out of range");
    }
    FockTensor source = tensor_product(
        build_tms(cp.p_cL, cp.theta_L, n_max, "atom_L", "photon_L"),
        build_tms(cp.p_cR, cp.theta_R, n_max, "atom_R", "photon_R"));

    OracleDistribution out;
    out.report.scheme = s;
    out.norm_squared = source.norm_squared();
    out.tail_bound = tail_bound(cp.p_cL, cp.p_cR, n_max);
    if (options.tolerance && out.tail_bound > *options.tolerance) {
        out.warning = OracleWarning::kTruncationExceedsTolerance;
    }
    out.excitation_block = {Eigen::Matrix2cd::Zero(), Eigen::Matrix2cd::Zero()};

    const std::array<std::array<DetectorOutcome, 2>, 2> heralds{{
        {{{"det_1", true}, {"det_2", false}}},
        {{{"det_1", false}, {"det_2", true}}},
    }};

    // Branches are consumed as soon as they are produced so only one path
    // through the loss tree is alive at a time.
    for (const auto &after_l : trace_out(apply_loss(source, "photon_L", cp.eta_L, "loss"), "loss").branches) {
        for (const auto &after_r : trace_out(apply_loss(after_l, "photon_R", cp.eta_R, "loss"), "loss").branches) {
            FockTensor split = apply_5050(after_r, "photon_L", "photon_R", SplitterSign::kFirstOutputDifference);
            split.rename_mode("photon_L", "det_1");
            split.rename_mode("photon_R", "det_2");
            for (const auto &after_1 : trace_out(apply_loss(split, "det_1", cp.eta_1, "loss"), "loss").branches) {
                for (const auto &after_2 : trace_out(apply_loss(after_1, "det_2", cp.eta_2, "loss"), "loss").branches) {
                    for (int j = 0; j < 2; j++) {
                        Measurement m = measure(after_2, heralds[j], s);
                        if (!(m.probability > 0.0)) {
                            continue;
                        }
                        out.report.heralding[j] += m.probability;
                        for (const auto &b : m.post().branches) {
                            Eigen::Vector2cd v = excitation_vector(b);
                            out.excitation_block[j] += v * v.adjoint();
                        }
                    }
                }
            }
        }
    }

    HeraldReport &r = out.report;
    r.herald = r.heralding[0] + r.heralding[1];
    for (Detector d : kDetectors) {
        int j = detector_index(d);
        if (!(r.heralding[j] > 0.0)) {
            continue;
        }
        double f = out.fidelity(d, target_state(d));
        r.fidelity[j] = f;
        r.success += f * r.heralding[j];

        Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> eig(out.excitation_block[j]);
        Eigen::Vector2cd v = eig.eigenvectors().col(1);
        std::complex<double> anchor = std::abs(v(0)) > 1e-300 ? v(0) : v(1);
        v *= std::conj(anchor) / std::abs(anchor);
        r.optimal_fidelity[j] = eig.eigenvalues()(1) / r.heralding[j];
        r.optimal_state[j] = AtomQubit{v(0), v(1)};
    }
    return out;
}

MixedFockState apply_measurement_module(
    const MixedFockState &in,
    std::string_view mode_a,
    std::string_view mode_b,
    const MeasurementModule &m,
    std::string out_1,
    std::string out_2) {
    m.validate();
    MixedFockState out;
    for (const auto &b : in.branches) {
        for (const auto &la : trace_out(apply_loss(b, mode_a, m.eta_c, "loss"), "loss").branches) {
            for (const auto &lb : trace_out(apply_loss(la, mode_b, m.eta_c, "loss"), "loss").branches) {
                FockTensor split = apply_5050(lb, mode_a, mode_b, SplitterSign::kFirstOutputDifference);
                split.rename_mode(mode_a, out_1);
                split.rename_mode(mode_b, out_2);
                for (const auto &d1 : trace_out(apply_loss(split, out_1, m.eta_d, "loss"), "loss").branches) {
                    for (auto &d2 : trace_out(apply_loss(d1, out_2, m.eta_d, "loss"), "loss").branches) {
                        out.branches.push_back(std::move(d2));
                    }
                }
            }
        }
    }
    return out;
}

OracleSwap oracle_swap(const MeasurementModule &m, int n_max) {
    check_module_depth(n_max);
    double h = std::numbers::sqrt2 / 2.0;
    FockTensor input = tensor_product(qubit_on("L1", "R1", h, -h, n_max), qubit_on("L2", "R2", h, -h, n_max));
    MixedFockState after = apply_measurement_module(MixedFockState{{input}}, "R1", "L2", m, "det_1", "det_2");

    const std::array<FockTensor, 2> targets{
        qubit_on("L1", "R2", h, -h, n_max),
        qubit_on("L1", "R2", h, h, n_max),
    };
    const std::array<std::array<DetectorOutcome, 2>, 2> heralds{{
        {{{"det_1", true}, {"det_2", false}}},
        {{{"det_1", false}, {"det_2", true}}},
    }};
    OracleSwap out;
    for (int j = 0; j < 2; j++) {
        Measurement meas = measure(after, heralds[j], m.scheme);
        out.heralding[j] = meas.probability;
        out.report.herald += meas.probability;
        if (meas.post_state) {
            out.report.success += population(*meas.post_state, targets[j]);
        }
    }
    if (out.report.herald > 0.0) {
        out.report.fidelity = out.report.success / out.report.herald;
    }
    return out;
}

SwapComponents oracle_swap_components(const MeasurementModule &m, int n_max) {
    check_module_depth(n_max);
    const std::array<std::array<DetectorOutcome, 2>, 2> heralds{{
        {{{"det_1", true}, {"det_2", false}}},
        {{{"det_1", false}, {"det_2", true}}},
    }};
    auto herald_for = [&](int i, int j) {
        FockTensor t({"A", "B"}, n_max);
        std::array<int, 2> occ{i, j};
        t.add(occ, 1.0);
        MixedFockState after = apply_measurement_module(MixedFockState{{t}}, "A", "B", m, "det_1", "det_2");
        double p = 0.0;
        for (const auto &h : heralds) {
            p += measure(after, h, m.scheme).probability;
        }
        return p;
    };
    SwapComponents c;
    c.p00 = herald_for(0, 0);
    c.p01 = herald_for(0, 1);
    c.p10 = herald_for(1, 0);
    c.p11 = herald_for(1, 1);
    return c;
}

FockTensor teleport_input_state(std::complex<double> d0, std::complex<double> d1, int n_max) {
    check_module_depth(n_max);
    if (std::abs(std::norm(d0) + std::norm(d1) - 1.0) > 1e-12) {
        throw std::invalid_argument("input qubit must be normalized");
    }
    double h = std::numbers::sqrt2 / 2.0;
    FockTensor qubit = qubit_on("I1", "I2", d0, d1, n_max);
    // (|0>_L|1>_R - |1>_L|0>_R)/sqrt2 for each pair, written over (L, R).
    FockTensor upper = qubit_on("L1", "R1", -h, h, n_max);
    FockTensor lower = qubit_on("L2", "R2", -h, h, n_max);
    FockTensor pairs = tensor_product(upper, lower);  // L1 R1 L2 R2
    FockTensor t({"I1", "I2", "L1", "L2", "R1", "R2"}, n_max);
    for (const auto &eq : qubit.entries()) {
        for (const auto &ep : pairs.entries()) {
            std::array<int, 6> occ{
                FockTensor::occupation(eq.key, 0),
                FockTensor::occupation(eq.key, 1),
                FockTensor::occupation(ep.key, 0),
                FockTensor::occupation(ep.key, 2),
                FockTensor::occupation(ep.key, 1),
                FockTensor::occupation(ep.key, 3),
            };
            t.push(pack(occ), eq.amplitude * ep.amplitude);
        }
    }
    t.canonicalize();
    return t;
}

std::vector<TeleportHerald> teleport_heralds(const FockTensor &input, const MeasurementModule &m) {
    MixedFockState upper = apply_measurement_module(MixedFockState{{input}}, "L1", "I1", m, "up_1", "up_2");
    MixedFockState both = apply_measurement_module(upper, "L2", "I2", m, "low_1", "low_2");
    std::vector<TeleportHerald> out;
    for (int a = 1; a <= 2; a++) {
        for (int b = 1; b <= 2; b++) {
            std::array<DetectorOutcome, 4> outcomes{{
                {"up_1", a == 1},
                {"up_2", a == 2},
                {"low_1", b == 1},
                {"low_2", b == 2},
            }};
            out.push_back({a == b ? 1 : -1, measure(both, outcomes, m.scheme)});
        }
    }
    return out;
}

OracleTeleport oracle_teleport(const MeasurementModule &m, std::complex<double> d0, std::complex<double> d1, int n_max) {
    FockTensor input = teleport_input_state(d0, d1, n_max);
    FockTensor plus = qubit_on("R1", "R2", d0, d1, n_max);
    FockTensor minus = qubit_on("R1", "R2", d0, -d1, n_max);
    OracleTeleport out;
    for (const auto &h : teleport_heralds(input, m)) {
        double p = h.measurement.probability;
        out.report.herald += p;
        (h.sign > 0 ? out.p_plus : out.p_minus) += p;
        if (h.measurement.post_state) {
            out.report.success += population(*h.measurement.post_state, h.sign > 0 ? plus : minus);
        }
    }
    if (out.report.herald > 0.0) {
        out.report.fidelity = out.report.success / out.report.herald;
    }
    return out;
}

}  // namespace dlcz::fock
