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

#include "seqsnr/snr_model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace seqsnr {

namespace {

void check_user(std::size_t i, std::size_t k_users) {
    if (i >= k_users) throw std::out_of_range("user index " + std::to_string(i) + " out of range");
}

double sq(double x) { return x * x; }

}  // namespace

SplitParams SplitParams::from(const SpectralCoefficients& c) {
    SplitParams p = zeros(c.n);
    for (std::size_t idx = 0; idx < c.n; ++idx) {
        p.alpha_re[idx] = c.alpha[idx].real();
        p.alpha_im[idx] = c.alpha[idx].imag();
        p.beta_re[idx] = c.beta[idx].real();
        p.beta_im[idx] = c.beta[idx].imag();
    }
    return p;
}

SplitParams SplitParams::zeros(std::size_t n) {
    return {std::vector<double>(n), std::vector<double>(n), std::vector<double>(n), std::vector<double>(n)};
}

void SplitParams::require_length(std::size_t n) const {
    if (alpha_re.size() != n || alpha_im.size() != n || beta_re.size() != n || beta_im.size() != n)
        throw std::invalid_argument("split parameters must all have length " + std::to_string(n));
}

double s_term(const SpectralCoefficients& ci, const SpectralCoefficients& ck, int m) {
    if (ci.n != ck.n) throw std::invalid_argument("s_term: coefficient lengths differ");
    const Complex ai = ci.alpha_mode(m), ak = ck.alpha_mode(m);
    const Complex bi = ci.beta_mode(m), bk = ck.beta_mode(m);
    return std::norm(ai) * std::norm(ak) * periodic_weight(m, ci.n) +
           std::norm(bi) * std::norm(bk) * aperiodic_weight(m, ci.n);
}

double s_sum(const SpectralCoefficients& ci, const SpectralCoefficients& ck) {
    double acc = 0.0;
    for (int m = 1; m <= static_cast<int>(ci.n); ++m) acc += s_term(ci, ck, m);
    return acc;
}

double s_hat_term(const SplitParams& pi, const SplitParams& pk, int m) {
    const std::size_t n = pi.size();
    pi.require_length(n);
    pk.require_length(n);
    if (m < 1 || static_cast<std::size_t>(m) > n) throw std::out_of_range("s_hat_term: mode out of range");
    const auto idx = static_cast<std::size_t>(m - 1);
    const double a_i = sq(pi.alpha_re[idx]) + sq(pi.alpha_im[idx]);
    const double a_k = sq(pk.alpha_re[idx]) + sq(pk.alpha_im[idx]);
    const double b_i = sq(pi.beta_re[idx]) + sq(pi.beta_im[idx]);
    const double b_k = sq(pk.beta_re[idx]) + sq(pk.beta_im[idx]);
    return a_i * a_k * periodic_weight(m, n) + b_i * b_k * aperiodic_weight(m, n);
}

double z_factor(std::size_t i, std::size_t k, const ChannelProfile& channel) {
    if (i == k) {
        const auto& u = channel.users.at(i);
        return sq(u.gamma) * u.c_bound * static_cast<double>(u.m_spread) * channel.symbol_t;
    }
    return 1.0 + sq(channel.users.at(k).gamma) * channel.l_factor(k);
}

std::vector<double> z_factors(std::size_t i, const ChannelProfile& channel, std::size_t k_users) {
    channel.require_users(k_users);
    check_user(i, k_users);
    std::vector<double> z(k_users);
    for (std::size_t k = 0; k < k_users; ++k) z[k] = z_factor(i, k, channel);
    return z;
}

double noise_term(const ChannelProfile& channel) {
    return channel.noise_n0 / (2.0 * channel.power * channel.symbol_t);
}

double signal_power(const ChannelProfile& channel) {
    return channel.power * sq(channel.symbol_t) / 2.0;
}

double interference_pair_term(std::span<const SpectralCoefficients> coeffs, std::size_t i, std::size_t k,
                              const ChannelProfile& channel) {
    channel.require_users(coeffs.size());
    check_user(i, coeffs.size());
    check_user(k, coeffs.size());
    if (i == k) throw std::invalid_argument("interference_pair_term: i and k must differ");
    const double n = static_cast<double>(coeffs[i].n);
    return channel.power * sq(channel.symbol_t) / (12.0 * n * n) * z_factor(i, k, channel) *
           s_sum(coeffs[i], coeffs[k]);
}

double interference_variance(std::span<const SpectralCoefficients> coeffs, std::size_t i,
                             const ChannelProfile& channel) {
    channel.require_users(coeffs.size());
    check_user(i, coeffs.size());
    double acc = 0.0;
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        if (k != i) acc += interference_pair_term(coeffs, i, k, channel);
    return acc;
}

double interference_variance(const SequenceSet& set, std::size_t i, const ChannelProfile& channel) {
    return interference_variance(to_spectral(set), i, channel);
}

double fading_variance_bound(std::span<const SpectralCoefficients> coeffs, std::size_t i,
                             const ChannelProfile& channel) {
    channel.require_users(coeffs.size());
    check_user(i, coeffs.size());
    const auto& u = channel.users[i];
    if (u.gamma == 0.0) return 0.0;
    const double n = static_cast<double>(coeffs[i].n);
    const double t = channel.symbol_t;
    return channel.power * t * t * t / (12.0 * n * n) * sq(u.gamma) * u.c_bound *
           static_cast<double>(u.m_spread) * s_sum(coeffs[i], coeffs[i]);
}

double fading_variance_bound(const SequenceSet& set, std::size_t i, const ChannelProfile& channel) {
    return fading_variance_bound(to_spectral(set), i, channel);
}

double snr_bracket(std::span<const SpectralCoefficients> coeffs, std::size_t i,
                   const ChannelProfile& channel) {
    const auto z = z_factors(i, channel, coeffs.size());
    const double n = static_cast<double>(coeffs[i].n);
    double acc = 0.0;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (z[k] == 0.0) continue;
        acc += z[k] * s_sum(coeffs[i], coeffs[k]);
    }
    return acc / (6.0 * n * n) + noise_term(channel);
}

double snr_bracket(const SequenceSet& set, std::size_t i, const ChannelProfile& channel) {
    return snr_bracket(to_spectral(set), i, channel);
}

double snr_from_bracket(double bracket) {
    if (!(bracket > 0.0))
        throw std::domain_error("SNR bracket is not positive (no noise and all Z factors zero)");
    return 1.0 / std::sqrt(bracket);
}

double snr_lower_bound(std::span<const SpectralCoefficients> coeffs, std::size_t i,
                       const ChannelProfile& channel) {
    return snr_from_bracket(snr_bracket(coeffs, i, channel));
}

double snr_lower_bound(const SequenceSet& set, std::size_t i, const ChannelProfile& channel) {
    return snr_lower_bound(to_spectral(set), i, channel);
}

}  // namespace seqsnr
