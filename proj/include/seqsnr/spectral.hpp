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

#pragma once

#include <cstddef>
#include <memory>
#include <span>

#include <Eigen/Dense>

#include "seqsnr/correlation.hpp"
#include "seqsnr/sequence_set.hpp"

namespace seqsnr {

// Modes are numbered m = 1..N throughout; mode N is the DC column of the
// eta = 0 basis. Vectors of coefficients store mode m at index m - 1.

/// (w_m(eta))_n = exp(2*pi*j*(n-1)*(m/N + eta)), n = 1..N.
ComplexVector basis_vector(int m, double eta, std::size_t n);

// lambda_m^(l) = exp(-2*pi*j*l*m/N), eigenvalues of B^(l)_{1,1}.
Complex eigenvalue(int m, long lag, std::size_t n);
// lambda^_m^(l) = exp(-2*pi*j*l*(m/N + 1/(2N))), eigenvalues of B^(l)_{-1,1}.
Complex eigenvalue_hat(int m, long lag, std::size_t n);

// Weights attached to the two halves of S_m^{i,k}.
double periodic_weight(int m, std::size_t n);   // 1 + cos(2*pi*m/N)/2
double aperiodic_weight(int m, std::size_t n);  // 1 + cos(2*pi*(m/N + 1/(2N)))/2

struct SpectralCoefficients {
    std::size_t n = 0;
    ComplexVector alpha;  // s = (1/sqrt N) sum_m alpha_m w_m(0)
    ComplexVector beta;   // s = (1/sqrt N) sum_m beta_m w_m(1/(2N))

    Complex alpha_mode(int m) const { return alpha.at(static_cast<std::size_t>(m - 1)); }
    Complex beta_mode(int m) const { return beta.at(static_cast<std::size_t>(m - 1)); }
};

/// V and V-hat hold the normalized basis columns; Phi = V^* V-hat maps beta
/// to alpha and Phi-hat = V-hat^* V maps alpha to beta. All four are built
/// from their closed forms, not from each other.
class BasisMatrices {
public:
    static BasisMatrices build(std::size_t n);

    std::size_t n() const noexcept { return n_; }
    const Eigen::MatrixXcd& v() const noexcept { return v_; }
    const Eigen::MatrixXcd& v_hat() const noexcept { return v_hat_; }
    const Eigen::MatrixXcd& phi() const noexcept { return phi_; }
    const Eigen::MatrixXcd& phi_hat() const noexcept { return phi_hat_; }

    // Raw analysis maps with no normalization check.
    ComplexVector alpha_of(std::span<const Complex> s) const;
    ComplexVector beta_of(std::span<const Complex> s) const;
    ComplexVector synthesize_alpha(std::span<const Complex> alpha) const;  // V alpha
    ComplexVector synthesize_beta(std::span<const Complex> beta) const;    // V-hat beta

private:
    std::size_t n_ = 0;
    Eigen::MatrixXcd v_, v_hat_, phi_, phi_hat_;
};

// Process-wide cache, one immutable entry per N.
std::shared_ptr<const BasisMatrices> basis_matrices(std::size_t n);

// Checks ||s||^2 = N (relative kEnergyTolerance), then alpha = V^* s, beta = V-hat^* s.
SpectralCoefficients to_spectral(std::span<const Complex> s);
std::vector<SpectralCoefficients> to_spectral(const SequenceSet& set);

// Matching line of the four-type decomposition:
//   (+-1, +-1): +-sum_m lambda_m^(l) conj(alpha_m^(i)) alpha_m^(k)
//   (-+1, +-1): +-sum_m lambda^_m^(l) conj(beta_m^(i)) beta_m^(k)
Complex eigen_sum(const SpectralCoefficients& ci, const SpectralCoefficients& ck, long lag,
                  BitPair bits);

// |quad_form - eigen_sum| for 0 <= l <= N.
double eigen_check(const SequenceSet& set, std::size_t i, std::size_t k, long lag, BitPair bits);

// Frobenius norm of M^* M - I.
double unitarity_residual(const Eigen::MatrixXcd& m);

// Identity-residual tolerance: `base` up to N = 256, growing linearly with N above.
double scaled_tolerance(double base, std::size_t n);

}  // namespace seqsnr
