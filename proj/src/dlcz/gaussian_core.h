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

#ifndef DLCZ_GAUSSIAN_CORE_H
#define DLCZ_GAUSSIAN_CORE_H

#include <array>
#include <complex>
#include <stdexcept>

#include <Eigen/Cholesky>
#include <Eigen/Dense>

namespace dlcz {

using Matrix8 = Eigen::Matrix<double, 8, 8>;
using ComplexWeights = Eigen::Matrix<std::complex<double>, 8, 1>;

/// Real coordinates of the joint Gaussian variable. Each complex variable
/// occupies two consecutive slots (real part, imaginary part):
///   atom L, photon difference mode (minus), photon sum mode (plus), atom R.
namespace coord {
inline constexpr int kAtomLRe = 0;
inline constexpr int kAtomLIm = 1;
inline constexpr int kPhotonMinusRe = 2;
inline constexpr int kPhotonMinusIm = 3;
inline constexpr int kPhotonPlusRe = 4;
inline constexpr int kPhotonPlusIm = 5;
inline constexpr int kAtomRRe = 6;
inline constexpr int kAtomRIm = 7;
}  // namespace coord

/// 8x8 real symmetric covariance of the atom + detected-light Gaussian.
///
/// Construction enforces symmetry to 1e-14 (the stored matrix is the exact
/// symmetrization of the input). Positive definiteness is not enforced,
/// since zero detector efficiency legitimately collapses the photon block.
class CovarianceMatrix {
   public:
    static constexpr double kSymmetryTolerance = 1e-14;

    explicit CovarianceMatrix(const Matrix8 &entries);

    double operator()(int i, int j) const;
    const Matrix8 &entries() const {
        return entries_;
    }
    double determinant() const;
    bool is_positive_definite() const;

   private:
    Matrix8 entries_;
};

/// E{X_i X_j}. Throws std::out_of_range for indices outside [0, 8).
double second_moment(const CovarianceMatrix &k, int i, int j);

/// Weights selecting the complex variable X_re + i X_{re+1}.
ComplexWeights complex_variable(int re_index);

/// E{Z_a Z_b} for complex linear forms Z = w^T X (bilinear, no conjugation).
std::complex<double> pair_moment(const CovarianceMatrix &k, const ComplexWeights &a, const ComplexWeights &b);

/// E{Z_a Z_b Z_c Z_d} for zero-mean jointly Gaussian real X, by Isserlis:
/// the sum over the three pairings. Conjugated variables are passed as
/// conjugated weights.
std::complex<double> fourth_moment_factored(
    const CovarianceMatrix &k,
    const ComplexWeights &a,
    const ComplexWeights &b,
    const ComplexWeights &c,
    const ComplexWeights &d);

/// Index form: E{X_a X_b X_c X_d} = K_ab K_cd + K_ac K_bd + K_ad K_bc.
double fourth_moment_factored(const CovarianceMatrix &k, int a, int b, int c, int d);

/// Thrown when a matrix that must be symmetric positive definite is not.
struct NotPositiveDefinite : std::domain_error {
    NotPositiveDefinite() : std::domain_error("matrix not positive definite") {
    }
};

/// Inverse of a fixed-size symmetric positive definite matrix via Cholesky.
template <int N>
Eigen::Matrix<double, N, N> invert_spd(const Eigen::Matrix<double, N, N> &m) {
    if (!m.isApprox(m.transpose(), 1e-12)) {
        throw NotPositiveDefinite();
    }
    Eigen::LLT<Eigen::Matrix<double, N, N>> llt(m);
    if (llt.info() != Eigen::Success) {
        throw NotPositiveDefinite();
    }
    const auto &l = llt.matrixL();
    for (int i = 0; i < N; i++) {
        if (!(l(i, i) > 0.0)) {
            throw NotPositiveDefinite();
        }
    }
    Eigen::Matrix<double, N, N> result = llt.solve(Eigen::Matrix<double, N, N>::Identity());
    return (result + result.transpose()) * 0.5;
}

}  // namespace dlcz

#endif
