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
#include <optional>
#include <span>
#include <vector>

#include "seqsnr/channel.hpp"
#include "seqsnr/sequence_set.hpp"
#include "seqsnr/spectral.hpp"

namespace seqsnr {

/// Mean-square correlation indices. The crosscorrelation entries divide by
/// K - 1 and are absent for a single-user set.
struct MsqIndices {
    std::vector<double> r_ac_per_user;
    std::optional<std::vector<double>> r_cc_per_user;
    double r_ac = 0.0;
    std::optional<double> r_cc;

    // Throw std::logic_error when K = 1.
    double cc(std::size_t i) const;
    double cc_average() const;
};

// Lag-domain sums of |C_{i,k}(l)|^2; R_AC skips l = 0, R_CC keeps it.
MsqIndices msq_direct(const SequenceSet& set);
// Through periodic/odd correlations over l = 0..N-1 (l = 1..N-1 for R_AC).
MsqIndices msq_theta(const SequenceSet& set);
// R_AC = (1/2N) sum(|alpha|^4 + |beta|^4) - 1 and the matching R_CC form.
// Throws if any coefficient vector is off the radius-sqrt(N) hypersphere.
MsqIndices msq_spectral(std::span<const SpectralCoefficients> coeffs);

struct SandwichBounds {
    double lower = 0.0;  // uses 1/(2N) and Z_U = max_k Z_{i,k}
    double upper = 0.0;  // uses 1/(6N) and Z_L = min_k Z_{i,k}
};

/// Brackets snr_lower_bound for user i from the mean-square indices.
SandwichBounds sandwich_bounds(std::span<const SpectralCoefficients> coeffs, std::size_t i,
                               const ChannelProfile& channel);
SandwichBounds sandwich_bounds(const SequenceSet& set, std::size_t i, const ChannelProfile& channel);

}  // namespace seqsnr
