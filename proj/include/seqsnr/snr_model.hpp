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
#include <vector>

#include "seqsnr/channel.hpp"
#include "seqsnr/sequence_set.hpp"
#include "seqsnr/spectral.hpp"

namespace seqsnr {

/// Real/imaginary split of one user's coefficients: the free parameters in
/// which S_m^{i,k} is a polynomial.
struct SplitParams {
    std::vector<double> alpha_re, alpha_im, beta_re, beta_im;

    static SplitParams from(const SpectralCoefficients& c);
    static SplitParams zeros(std::size_t n);
    std::size_t size() const noexcept { return alpha_re.size(); }
    // Throws std::invalid_argument unless all four vectors have length n.
    void require_length(std::size_t n) const;
};

/// S_m^{i,k} = |a_m^i|^2 |a_m^k|^2 (1 + cos(2 pi m/N)/2)
///           + |b_m^i|^2 |b_m^k|^2 (1 + cos(2 pi (m/N + 1/(2N)))/2),  m = 1..N.
double s_term(const SpectralCoefficients& ci, const SpectralCoefficients& ck, int m);
// sum_{m=1}^{N} S_m^{i,k}
double s_sum(const SpectralCoefficients& ci, const SpectralCoefficients& ck);

// Same quantity as s_term written in the split parameters.
double s_hat_term(const SplitParams& pi, const SplitParams& pk, int m);

/// Z_{i,i} = gamma_i^2 C_i M_i T and Z_{i,k} = 1 + gamma_k^2 L_k for k != i.
double z_factor(std::size_t i, std::size_t k, const ChannelProfile& channel);
std::vector<double> z_factors(std::size_t i, const ChannelProfile& channel, std::size_t k_users);

double noise_term(const ChannelProfile& channel);     // N_0 / (2 P T)
double signal_power(const ChannelProfile& channel);   // E{D_i}^2 = P T^2 / 2

// Pair (i, k) share of Var{I_i}: P T^2/(12 N^2) (1 + gamma_k^2 L_k) sum_m S_m^{i,k}, k != i.
double interference_pair_term(std::span<const SpectralCoefficients> coeffs, std::size_t i, std::size_t k,
                              const ChannelProfile& channel);

/// Var{I_i} = P T^2/(12 N^2) sum_{k != i} (1 + gamma_k^2 L_k) sum_m S_m^{i,k}
double interference_variance(const SequenceSet& set, std::size_t i, const ChannelProfile& channel);
double interference_variance(std::span<const SpectralCoefficients> coeffs, std::size_t i,
                             const ChannelProfile& channel);

/// Worst-case bound Var{F_i} <= P T^3/(12 N^2) gamma_i^2 C_i M_i sum_m S_m^{i,i}
double fading_variance_bound(const SequenceSet& set, std::size_t i, const ChannelProfile& channel);
double fading_variance_bound(std::span<const SpectralCoefficients> coeffs, std::size_t i,
                             const ChannelProfile& channel);

/// (1/(6N^2)) sum_k Z_{i,k} sum_m S_m^{i,k} + N_0/(2PT). The mode sum runs to N.
double snr_bracket(std::span<const SpectralCoefficients> coeffs, std::size_t i,
                   const ChannelProfile& channel);
double snr_bracket(const SequenceSet& set, std::size_t i, const ChannelProfile& channel);

// bracket^(-1/2); throws std::domain_error when the bracket is not positive.
double snr_from_bracket(double bracket);
double snr_lower_bound(std::span<const SpectralCoefficients> coeffs, std::size_t i,
                       const ChannelProfile& channel);
double snr_lower_bound(const SequenceSet& set, std::size_t i, const ChannelProfile& channel);

}  // namespace seqsnr
