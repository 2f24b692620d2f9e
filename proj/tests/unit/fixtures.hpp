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

#include <cmath>

#include "seqsnr/channel.hpp"
#include "seqsnr/sequence_set.hpp"

namespace seqsnr::testing {

// Fixed unimodular pair at N = 4. Reference values for it were computed
// once with adaptive quadrature over the chip waveform and are frozen here.
inline SequenceSet fixed_pair() {
    const double p1[] = {0.3, 1.1, 2.0, -0.7};
    const double p2[] = {1.5, -2.2, 0.4, 2.9};
    ComplexVector s1, s2;
    for (int n = 0; n < 4; ++n) {
        s1.push_back(std::polar(1.0, p1[n]));
        s2.push_back(std::polar(1.0, p2[n]));
    }
    return SequenceSet({s1, s2});
}

inline ChannelProfile flat_channel(std::size_t k, double n0 = 0.0, double gamma = 0.0) {
    ChannelProfile ch;
    ch.power = 1.0;
    ch.symbol_t = 1.0;
    ch.noise_n0 = n0;
    ch.users.assign(k, UserChannel{gamma, 1.0, 1});
    return ch;
}

inline constexpr double kChipSumPair = 0.12252520824523741;
inline constexpr double kChipSumSelf = 0.23148515716360826;
inline constexpr double kVarIPair = 0.030631302061309353;       // gamma = 0, P = T = 1
inline constexpr double kBracketPair = 0.31126260412261869;     // gamma = 0, N0 = 0.5
inline constexpr double kSnrPair = 1.7924065682531891;
inline constexpr double kRccPair = 0.95753842750211238;
inline constexpr double kRacFirst = 0.30633309359057148;
inline constexpr double kRacZc5 = 0.22111456180001687;

inline double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace seqsnr::testing
