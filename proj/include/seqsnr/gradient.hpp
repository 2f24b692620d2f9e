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
#include "seqsnr/snr_model.hpp"

namespace seqsnr {

// One SplitParams per user.
using ParamVector = std::vector<SplitParams>;

/// Z_{i,k} for all k plus the noise term: everything the bracket needs from
/// the channel. May be set directly to pose reduced problems.
struct BracketWeights {
    std::vector<double> z;
    double noise = 0.0;

    static BracketWeights from(std::size_t i, const ChannelProfile& channel, std::size_t k_users);
};

ParamVector split_params(const SequenceSet& set);

/// (1/(6N^2)) sum_k z_k sum_m S^_m^{i,k} + noise, with the parameters free
/// (no hypersphere constraint).
double objective(const ParamVector& params, std::size_t i, const BracketWeights& weights);
double objective(const ParamVector& params, std::size_t i, const ChannelProfile& channel);

/// Partial derivatives of `objective` with respect to the four parameter
/// vectors of `wrt_user`. Every mode only couples to itself.
SplitParams grad_params(const ParamVector& params, std::size_t i, const BracketWeights& weights,
                        std::size_t wrt_user);
SplitParams grad_params(const ParamVector& params, std::size_t i, const ChannelProfile& channel,
                        std::size_t wrt_user);

/// Gradient of the bracket with respect to the chips of `wrt_user`, with
/// alpha and beta tied to the sequence. Entry n holds
/// d/dRe(s_n) + j d/dIm(s_n).
ComplexVector grad_sequence(const SequenceSet& set, std::size_t i, const BracketWeights& weights,
                            std::size_t wrt_user);
ComplexVector grad_sequence(const SequenceSet& set, std::size_t i, const ChannelProfile& channel,
                            std::size_t wrt_user);
// Same, for arbitrary (not necessarily normalized) chip vectors.
ComplexVector grad_sequence(const std::vector<ComplexVector>& seqs, std::size_t i,
                            const BracketWeights& weights, std::size_t wrt_user);

// Maps a parameter-space gradient back to chips: V g_alpha + V-hat g_beta,
// g_alpha = d/dalpha_re + j d/dalpha_im.
ComplexVector chain_to_sequence(const SplitParams& grad, std::size_t n);

}  // namespace seqsnr
