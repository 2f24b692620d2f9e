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

#include "seqsnr/mean_square.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "seqsnr/correlation.hpp"
#include "seqsnr/snr_model.hpp"

namespace seqsnr {

namespace {

double mean(const std::vector<double>& v) {
    double acc = 0.0;
    for (double x : v) acc += x;
    return acc / static_cast<double>(v.size());
}

// auto_term(i) and cross_term(i, k) return already-normalized sums.
template <class AutoFn, class CrossFn>
MsqIndices assemble(std::size_t k_users, AutoFn auto_term, CrossFn cross_term) {
    MsqIndices out;
    out.r_ac_per_user.resize(k_users);
    for (std::size_t i = 0; i < k_users; ++i) out.r_ac_per_user[i] = auto_term(i);
    out.r_ac = mean(out.r_ac_per_user);
    if (k_users >= 2) {
        std::vector<double> cc(k_users);
        for (std::size_t i = 0; i < k_users; ++i) {
            double acc = 0.0;
            for (std::size_t k = 0; k < k_users; ++k)
                if (k != i) acc += cross_term(i, k);
            cc[i] = acc / static_cast<double>(k_users - 1);
        }
        out.r_cc = mean(cc);
        out.r_cc_per_user = std::move(cc);
    }
    return out;
}

}  // namespace

double MsqIndices::cc(std::size_t i) const {
    if (!r_cc_per_user) throw std::logic_error("R_CC is undefined for a single-user set");
    return r_cc_per_user->at(i);
}

double MsqIndices::cc_average() const {
    if (!r_cc) throw std::logic_error("R_CC is undefined for a single-user set");
    return *r_cc;
}

MsqIndices msq_direct(const SequenceSet& set) {
    const long n = static_cast<long>(set.length());
    const double n2 = static_cast<double>(n) * static_cast<double>(n);
    auto auto_term = [&](std::size_t i) {
        double acc = 0.0;
        for (long l = 1 - n; l <= n - 1; ++l)
            if (l != 0) acc += std::norm(aperiodic_corr(set, i, i, l));
        return acc / n2;
    };
    auto cross_term = [&](std::size_t i, std::size_t k) {
        double acc = 0.0;
        for (long l = 1 - n; l <= n - 1; ++l) acc += std::norm(aperiodic_corr(set, i, k, l));
        return acc / n2;
    };
    return assemble(set.users(), auto_term, cross_term);
}

MsqIndices msq_theta(const SequenceSet& set) {
    const long n = static_cast<long>(set.length());
    const double n2 = static_cast<double>(n) * static_cast<double>(n);
    auto pair_sum = [&](std::size_t i, std::size_t k, long first) {
        double acc = 0.0;
        for (long l = first; l <= n - 1; ++l)
            acc += std::norm(periodic_corr(set, i, k, l)) + std::norm(odd_corr(set, i, k, l));
        return acc;
    };
    return assemble(
        set.users(), [&](std::size_t i) { return pair_sum(i, i, 1) / (2.0 * n2); },
        [&](std::size_t i, std::size_t k) { return pair_sum(i, k, 0) / (2.0 * n2); });
}

MsqIndices msq_spectral(std::span<const SpectralCoefficients> coeffs) {
    if (coeffs.empty()) throw std::invalid_argument("msq_spectral: no users");
    const std::size_t n = coeffs.front().n;
    const double nd = static_cast<double>(n);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        const auto& c = coeffs[k];
        if (c.n != n || c.alpha.size() != n || c.beta.size() != n)
            throw std::invalid_argument("msq_spectral: inconsistent coefficient lengths");
        const double na = energy(c.alpha), nb = energy(c.beta);
        if (std::abs(na - nd) > kEnergyTolerance * nd || std::abs(nb - nd) > kEnergyTolerance * nd)
            throw std::invalid_argument("msq_spectral: user " + std::to_string(k) +
                                        " coefficients are off the hypersphere");
    }
    auto auto_term = [&](std::size_t i) {
        double acc = 0.0;
        for (std::size_t m = 0; m < n; ++m) {
            const double a = std::norm(coeffs[i].alpha[m]), b = std::norm(coeffs[i].beta[m]);
            acc += a * a + b * b;
        }
        return acc / (2.0 * nd) - 1.0;
    };
    auto cross_term = [&](std::size_t i, std::size_t k) {
        double acc = 0.0;
        for (std::size_t m = 0; m < n; ++m) {
            acc += std::norm(coeffs[i].alpha[m]) * std::norm(coeffs[k].alpha[m]) +
                   std::norm(coeffs[i].beta[m]) * std::norm(coeffs[k].beta[m]);
        }
        return acc / (2.0 * nd);
    };
    return assemble(coeffs.size(), auto_term, cross_term);
}

SandwichBounds sandwich_bounds(std::span<const SpectralCoefficients> coeffs, std::size_t i,
                               const ChannelProfile& channel) {
    const std::size_t k_users = coeffs.size();
    const auto z = z_factors(i, channel, k_users);
    const auto [z_lo, z_hi] = std::minmax_element(z.begin(), z.end());
    const MsqIndices msq = msq_spectral(coeffs);
    const double n = static_cast<double>(coeffs[i].n);
    const double auto_part = z[i] * (msq.r_ac_per_user[i] + 1.0);
    const double cross = k_users >= 2 ? static_cast<double>(k_users - 1) * msq.cc(i) : 0.0;
    const double noise = noise_term(channel);
    return {snr_from_bracket((auto_part + *z_hi * cross) / (2.0 * n) + noise),
            snr_from_bracket((auto_part + *z_lo * cross) / (6.0 * n) + noise)};
}

SandwichBounds sandwich_bounds(const SequenceSet& set, std::size_t i, const ChannelProfile& channel) {
    return sandwich_bounds(to_spectral(set), i, channel);
}

}  // namespace seqsnr
