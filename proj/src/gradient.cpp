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

#include "seqsnr/gradient.hpp"

#include <stdexcept>
#include <string>

#include "seqsnr/spectral.hpp"

namespace seqsnr {

namespace {

double sq(double x) { return x * x; }

std::size_t common_length(const ParamVector& params, std::size_t i, const BracketWeights& weights) {
    if (params.empty()) throw std::invalid_argument("objective: no users");
    if (i >= params.size()) throw std::out_of_range("user index " + std::to_string(i) + " out of range");
    if (weights.z.size() != params.size())
        throw std::invalid_argument("objective: need one Z weight per user");
    const std::size_t n = params.front().size();
    for (const auto& p : params) p.require_length(n);
    return n;
}

double alpha_power(const SplitParams& p, std::size_t idx) { return sq(p.alpha_re[idx]) + sq(p.alpha_im[idx]); }
double beta_power(const SplitParams& p, std::size_t idx) { return sq(p.beta_re[idx]) + sq(p.beta_im[idx]); }

}  // namespace

BracketWeights BracketWeights::from(std::size_t i, const ChannelProfile& channel, std::size_t k_users) {
    return {z_factors(i, channel, k_users), noise_term(channel)};
}

ParamVector split_params(const SequenceSet& set) {
    ParamVector out;
    for (const auto& c : to_spectral(set)) out.push_back(SplitParams::from(c));
    return out;
}

double objective(const ParamVector& params, std::size_t i, const BracketWeights& weights) {
    const std::size_t n = common_length(params, i, weights);
    const double nd = static_cast<double>(n);
    double acc = 0.0;
    for (std::size_t k = 0; k < params.size(); ++k) {
        if (weights.z[k] == 0.0) continue;
        double s = 0.0;
        for (int m = 1; m <= static_cast<int>(n); ++m) s += s_hat_term(params[i], params[k], m);
        acc += weights.z[k] * s;
    }
    return acc / (6.0 * nd * nd) + weights.noise;
}

double objective(const ParamVector& params, std::size_t i, const ChannelProfile& channel) {
    return objective(params, i, BracketWeights::from(i, channel, params.size()));
}

SplitParams grad_params(const ParamVector& params, std::size_t i, const BracketWeights& weights,
                        std::size_t wrt_user) {
    const std::size_t n = common_length(params, i, weights);
    if (wrt_user >= params.size()) throw std::out_of_range("wrt_user out of range");
    const double scale = 1.0 / (6.0 * static_cast<double>(n) * static_cast<double>(n));
    const SplitParams& pi = params[i];
    const SplitParams& pj = params[wrt_user];

    SplitParams g = SplitParams::zeros(n);
    for (std::size_t idx = 0; idx < n; ++idx) {
        const int m = static_cast<int>(idx) + 1;
        // Coefficient c such that d/dx(objective) = 2 x c for every x among the
        // real/imaginary parts of mode m of user j.
        double ca = 0.0, cb = 0.0;
        if (wrt_user == i) {
            // Cross terms contribute |a^k|^2; the quartic self term doubles.
            for (std::size_t k = 0; k < params.size(); ++k) {
                const double factor = (k == i) ? 2.0 : 1.0;
                ca += factor * weights.z[k] * alpha_power(params[k], idx);
                cb += factor * weights.z[k] * beta_power(params[k], idx);
            }
        } else {
            ca = weights.z[wrt_user] * alpha_power(pi, idx);
            cb = weights.z[wrt_user] * beta_power(pi, idx);
        }
        ca *= scale * periodic_weight(m, n);
        cb *= scale * aperiodic_weight(m, n);
        g.alpha_re[idx] = 2.0 * pj.alpha_re[idx] * ca;
        g.alpha_im[idx] = 2.0 * pj.alpha_im[idx] * ca;
        g.beta_re[idx] = 2.0 * pj.beta_re[idx] * cb;
        g.beta_im[idx] = 2.0 * pj.beta_im[idx] * cb;
    }
    return g;
}

SplitParams grad_params(const ParamVector& params, std::size_t i, const ChannelProfile& channel,
                        std::size_t wrt_user) {
    return grad_params(params, i, BracketWeights::from(i, channel, params.size()), wrt_user);
}

ComplexVector chain_to_sequence(const SplitParams& grad, std::size_t n) {
    grad.require_length(n);
    ComplexVector ga(n), gb(n);
    for (std::size_t idx = 0; idx < n; ++idx) {
        ga[idx] = {grad.alpha_re[idx], grad.alpha_im[idx]};
        gb[idx] = {grad.beta_re[idx], grad.beta_im[idx]};
    }
    // alpha = V^* s is C-linear, so a real function's gradient pulls back as V g.
    const auto basis = basis_matrices(n);
    ComplexVector out = basis->synthesize_alpha(ga);
    const ComplexVector from_beta = basis->synthesize_beta(gb);
    for (std::size_t idx = 0; idx < n; ++idx) out[idx] += from_beta[idx];
    return out;
}

ComplexVector grad_sequence(const std::vector<ComplexVector>& seqs, std::size_t i,
                            const BracketWeights& weights, std::size_t wrt_user) {
    if (seqs.empty()) throw std::invalid_argument("grad_sequence: no users");
    const std::size_t n = seqs.front().size();
    const auto basis = basis_matrices(n);
    ParamVector params;
    params.reserve(seqs.size());
    for (const auto& s : seqs) {
        if (s.size() != n) throw std::invalid_argument("grad_sequence: ragged sequences");
        params.push_back(SplitParams::from({n, basis->alpha_of(s), basis->beta_of(s)}));
    }
    return chain_to_sequence(grad_params(params, i, weights, wrt_user), n);
}

ComplexVector grad_sequence(const SequenceSet& set, std::size_t i, const BracketWeights& weights,
                            std::size_t wrt_user) {
    return grad_sequence(set.sequences(), i, weights, wrt_user);
}

ComplexVector grad_sequence(const SequenceSet& set, std::size_t i, const ChannelProfile& channel,
                            std::size_t wrt_user) {
    return grad_sequence(set, i, BracketWeights::from(i, channel, set.users()), wrt_user);
}

}  // namespace seqsnr
