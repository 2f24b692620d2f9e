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
#include <ostream>
#include <stdexcept>
#include <vector>

#include "seqsnr/sequence_set.hpp"

namespace seqsnr {

/// The two adjacent data bits (b_{k,-1}, b_{k,0}) of the interfering user
/// that select one of the four B^(l) blocks.
class BitPair {
public:
    constexpr BitPair(int prev, int cur) : prev_(prev), cur_(cur) {
        if ((prev != 1 && prev != -1) || (cur != 1 && cur != -1))
            throw std::invalid_argument("bits must be +1 or -1");
    }
    constexpr int prev() const noexcept { return prev_; }
    constexpr int cur() const noexcept { return cur_; }
    friend constexpr bool operator==(BitPair, BitPair) = default;

private:
    int prev_;
    int cur_;
};

inline constexpr BitPair kAllBitPairs[4] = {{1, 1}, {-1, -1}, {-1, 1}, {1, -1}};

// Aperiodic crosscorrelation C_{i,k}(l); zero for |l| >= N.
//   0 <= l < N : sum_{n=1}^{N-l} conj(s_{i,n+l}) s_{k,n}
//   -N < l < 0 : sum_{n=1}^{N+l} conj(s_{i,n}) s_{k,n-l}
Complex aperiodic_corr(std::span<const Complex> si, std::span<const Complex> sk, long lag);
Complex aperiodic_corr(const SequenceSet& set, std::size_t i, std::size_t k, long lag);

// theta_{i,k}(l) = C(l) + C(l-N) and odd theta^_{i,k}(l) = C(l) - C(l-N), 0 <= l < N.
Complex periodic_corr(const SequenceSet& set, std::size_t i, std::size_t k, long lag);
Complex odd_corr(const SequenceSet& set, std::size_t i, std::size_t k, long lag);

/// s_i^* B^(l)_{prev,cur} s_k for 0 <= l <= N, evaluated from the two
/// boundary sums of the block matrix (never materialized):
///   prev * sum_{m=1}^{l} conj(s_{i,m}) s_{k,N-l+m} + cur * sum_{m=1}^{N-l} conj(s_{i,l+m}) s_{k,m}
/// At l = N the whole matrix is the top-right identity block.
Complex quad_form(std::span<const Complex> si, std::span<const Complex> sk, long lag, BitPair bits);
Complex quad_form(const SequenceSet& set, std::size_t i, std::size_t k, long lag, BitPair bits);

struct CorrelationProfile {
    std::size_t i = 0;
    std::size_t k = 0;
    std::size_t n = 0;
    ComplexVector aperiodic;  // index l + N - 1 for l in [1-N, N-1]
    ComplexVector periodic;   // index l for l in [0, N-1]
    ComplexVector odd;        // index l for l in [0, N-1]

    Complex aperiodic_at(long lag) const;
};

CorrelationProfile correlation_profile(const SequenceSet& set, std::size_t i, std::size_t k);

// Columns: l, Re C, Im C, Re theta, Im theta, Re theta_hat, Im theta_hat.
// One row per lag in [1-N, N-1]; periodic columns are empty for negative lags.
void write_profile_csv(const CorrelationProfile& profile, std::ostream& out);

}  // namespace seqsnr
