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

#include "dlcz/gaussian_core.h"

#include <cmath>
#include <string>

namespace dlcz {

namespace {

void check_index(int i) {
    if (i < 0 || i >= 8) {
        throw std::out_of_range("covariance index " + std::to_string(i) + " outside [0, 8)");
    }
}

}  // namespace

CovarianceMatrix::CovarianceMatrix(const Matrix8 &entries) {
    for (int i = 0; i < 8; i++) {
        for (int j = i + 1; j < 8; j++) {
            if (!(std::abs(entries(i, j) - entries(j, i)) <= kSymmetryTolerance)) {
                throw std::invalid_argument("covariance matrix is not symmetric");
            }
        }
    }
    entries_ = (entries + entries.transpose()) * 0.5;
}

double CovarianceMatrix::operator()(int i, int j) const {
    check_index(i);
    check_index(j);
    return entries_(i, j);
}

double CovarianceMatrix::determinant() const {
    return entries_.determinant();
}

bool CovarianceMatrix::is_positive_definite() const {
    Eigen::SelfAdjointEigenSolver<Matrix8> solver(entries_, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff() > 0.0;
}

double second_moment(const CovarianceMatrix &k, int i, int j) {
    return k(i, j);
}

ComplexWeights complex_variable(int re_index) {
    check_index(re_index);
    check_index(re_index + 1);
    ComplexWeights w = ComplexWeights::Zero();
    w(re_index) = 1.0;
    w(re_index + 1) = std::complex<double>(0.0, 1.0);
    return w;
}

std::complex<double> pair_moment(const CovarianceMatrix &k, const ComplexWeights &a, const ComplexWeights &b) {
    return (a.transpose() * k.entries().cast<std::complex<double>>() * b)(0, 0);
}

std::complex<double> fourth_moment_factored(
    const CovarianceMatrix &k,
    const ComplexWeights &a,
    const ComplexWeights &b,
    const ComplexWeights &c,
    const ComplexWeights &d) {
    return pair_moment(k, a, b) * pair_moment(k, c, d) + pair_moment(k, a, c) * pair_moment(k, b, d) +
           pair_moment(k, a, d) * pair_moment(k, b, c);
}

double fourth_moment_factored(const CovarianceMatrix &k, int a, int b, int c, int d) {
    return k(a, b) * k(c, d) + k(a, c) * k(b, d) + k(a, d) * k(b, c);
}

}  // namespace dlcz
