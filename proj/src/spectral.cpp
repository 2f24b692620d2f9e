// SPDX-License-Identifier: Apache-2.0
//
// seqsnr - SNR bounds and correlation analysis for CDMA spreading sequences
// Copyright (C) 2026 The seqsnr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "seqsnr/spectral.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>

namespace seqsnr {

namespace {

// exp(2*pi*j*p/q) with p reduced modulo q first.
Complex unit_root(long long p, long long q) {
    const long long r = ((p % q) + q) % q;
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(q));
}

void check_mode(int m, std::size_t n) {
    if (m < 1 || static_cast<std::size_t>(m) > n)
        throw std::out_of_range("mode " + std::to_string(m) + " outside [1, " + std::to_string(n) + "]");
}

Eigen::Map<const Eigen::VectorXcd> as_vector(std::span<const Complex> s) {
    return {s.data(), static_cast<Eigen::Index>(s.size())};
}

ComplexVector to_std(const Eigen::VectorXcd& v) { return {v.data(), v.data() + v.size()}; }

}  // namespace

ComplexVector basis_vector(int m, double eta, std::size_t n) {
    check_mode(m, n);
    ComplexVector w(n);
    const double freq = static_cast<double>(m) / static_cast<double>(n) + eta;
    for (std::size_t idx = 0; idx < n; ++idx) {
        const double x = static_cast<double>(idx) * freq;
        w[idx] = std::polar(1.0, 2.0 * std::numbers::pi * (x - std::floor(x)));
    }
    return w;
}

Complex eigenvalue(int m, long lag, std::size_t n) {
    const auto nn = static_cast<long long>(n);
    return unit_root(-static_cast<long long>(lag) * m, nn);
}

Complex eigenvalue_hat(int m, long lag, std::size_t n) {
    const auto nn = static_cast<long long>(n);
    return unit_root(-static_cast<long long>(lag) * (2LL * m + 1), 2 * nn);
}

double periodic_weight(int m, std::size_t n) {
    return 1.0 + 0.5 * unit_root(m, static_cast<long long>(n)).real();
}

double aperiodic_weight(int m, std::size_t n) {
    return 1.0 + 0.5 * unit_root(2LL * m + 1, 2 * static_cast<long long>(n)).real();
}

BasisMatrices BasisMatrices::build(std::size_t n) {
    if (n < 2) throw std::invalid_argument("basis needs N >= 2");
    const auto nn = static_cast<long long>(n);
    const auto dim = static_cast<Eigen::Index>(n);
    const double inv_sqrt = 1.0 / std::sqrt(static_cast<double>(n));
    const double inv_n = 1.0 / static_cast<double>(n);

    BasisMatrices b;
    b.n_ = n;
    b.v_.resize(dim, dim);
    b.v_hat_.resize(dim, dim);
    b.phi_.resize(dim, dim);
    b.phi_hat_.resize(dim, dim);
    for (long long row = 0; row < nn; ++row) {
        for (long long col = 0; col < nn; ++col) {
            const long long m = col + 1;  // column index is the mode
            b.v_(row, col) = inv_sqrt * unit_root(row * m, nn);
            b.v_hat_(row, col) = inv_sqrt * unit_root(row * (2 * m + 1), 2 * nn);
            // Phi_{m,n} = (1/N) 2 / (1 - exp(2 pi j ((n-m)/N + 1/(2N)))), rows m, columns n.
            const long long diff = col - row;
            b.phi_(row, col) = inv_n * 2.0 / (1.0 - unit_root(2 * diff + 1, 2 * nn));
            b.phi_hat_(row, col) = inv_n * 2.0 / (1.0 - unit_root(2 * diff - 1, 2 * nn));
        }
    }
    return b;
}

ComplexVector BasisMatrices::alpha_of(std::span<const Complex> s) const {
    if (s.size() != n_) throw std::invalid_argument("alpha_of: length mismatch");
    return to_std(v_.adjoint() * as_vector(s));
}

ComplexVector BasisMatrices::beta_of(std::span<const Complex> s) const {
    if (s.size() != n_) throw std::invalid_argument("beta_of: length mismatch");
    return to_std(v_hat_.adjoint() * as_vector(s));
}

ComplexVector BasisMatrices::synthesize_alpha(std::span<const Complex> alpha) const {
    if (alpha.size() != n_) throw std::invalid_argument("synthesize_alpha: length mismatch");
    return to_std(v_ * as_vector(alpha));
}

ComplexVector BasisMatrices::synthesize_beta(std::span<const Complex> beta) const {
    if (beta.size() != n_) throw std::invalid_argument("synthesize_beta: length mismatch");
    return to_std(v_hat_ * as_vector(beta));
}

std::shared_ptr<const BasisMatrices> basis_matrices(std::size_t n) {
    static std::mutex mutex;
    static std::map<std::size_t, std::shared_ptr<const BasisMatrices>> cache;
    const std::lock_guard lock(mutex);
    auto& slot = cache[n];
    if (!slot) slot = std::make_shared<const BasisMatrices>(BasisMatrices::build(n));
    return slot;
}

SpectralCoefficients to_spectral(std::span<const Complex> s) {
    const std::size_t n = s.size();
    if (n < 2) throw std::invalid_argument("to_spectral: N must be at least 2");
    const double e = energy(s);
    if (!(std::abs(e - static_cast<double>(n)) <= kEnergyTolerance * static_cast<double>(n)))
        throw std::invalid_argument("to_spectral: squared norm " + std::to_string(e) +
                                    " is not N = " + std::to_string(n));
    const auto basis = basis_matrices(n);
    return {n, basis->alpha_of(s), basis->beta_of(s)};
}

std::vector<SpectralCoefficients> to_spectral(const SequenceSet& set) {
    std::vector<SpectralCoefficients> out;
    out.reserve(set.users());
    for (std::size_t k = 0; k < set.users(); ++k) out.push_back(to_spectral(set.sequence(k)));
    return out;
}

Complex eigen_sum(const SpectralCoefficients& ci, const SpectralCoefficients& ck, long lag,
                  BitPair bits) {
    if (ci.n != ck.n) throw std::invalid_argument("eigen_sum: coefficient lengths differ");
    const std::size_t n = ci.n;
    const bool periodic = bits.prev() == bits.cur();
    const double sign = static_cast<double>(bits.cur());
    Complex acc{};
    for (std::size_t idx = 0; idx < n; ++idx) {
        const int m = static_cast<int>(idx) + 1;
        if (periodic)
            acc += eigenvalue(m, lag, n) * std::conj(ci.alpha[idx]) * ck.alpha[idx];
        else
            acc += eigenvalue_hat(m, lag, n) * std::conj(ci.beta[idx]) * ck.beta[idx];
    }
    return sign * acc;
}

double eigen_check(const SequenceSet& set, std::size_t i, std::size_t k, long lag, BitPair bits) {
    const Complex direct = quad_form(set, i, k, lag, bits);
    const auto ci = to_spectral(set.sequence(i));
    const auto ck = to_spectral(set.sequence(k));
    return std::abs(direct - eigen_sum(ci, ck, lag, bits));
}

double unitarity_residual(const Eigen::MatrixXcd& m) {
    const auto id = Eigen::MatrixXcd::Identity(m.cols(), m.cols());
    return (m.adjoint() * m - id).norm();
}

double scaled_tolerance(double base, std::size_t n) {
    return n <= 256 ? base : base * static_cast<double>(n) / 256.0;
}

}  // namespace seqsnr
