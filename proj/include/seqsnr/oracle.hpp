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
#include <span>
#include <vector>

#include "seqsnr/channel.hpp"
#include "seqsnr/gradient.hpp"
#include "seqsnr/sequence_set.hpp"

// Brute-force references for the closed forms. Nothing in here touches the
// spectral coefficients of the sequences: correlations come from direct
// lag sums and the chip integrals from the piecewise-linear waveform.
namespace seqsnr::oracle {

/// Operands of one chip integral: `a` multiplies the rising ramp (lag l),
/// `b` the falling ramp (lag l + 1).
struct ChipIntegralInputs {
    Complex a;
    Complex b;
    double t_c = 1.0;
};

// (t_c^3 / 3) (|a|^2 + |b|^2 + Re(a conj(b)))
double chip_integral_closed(const ChipIntegralInputs& inp);
// Composite Simpson rule for int_0^{t_c} |a u + b (t_c - u)|^2 du; `panels` even, >= 2.
double chip_integral_numeric(const ChipIntegralInputs& inp, int panels);

/// E_b sum_{l=0}^{N-1} int Gamma_{i,k}(tau, 0, l) dtau, averaging the four
/// bit pairs with weight 1/4 and using quad_form at lags l and l + 1.
double bit_averaged_chip_sum(const SequenceSet& set, std::size_t i, std::size_t k, double t_c,
                             int bit_pairs = 4);

/// k != i: (P/(4T)) (1 + gamma_k^2 L_k) * bit_averaged_chip_sum, the pair's
/// share of Var{I_i}. k == i: (P/4) gamma_i^2 C_i M_i * bit_averaged_chip_sum,
/// the worst-case fading bound.
double variance_oracle(const SequenceSet& set, std::size_t i, std::size_t k, const ChannelProfile& channel);

// Reference SNR bracket rebuilt from oracle variances:
// (sum_k variance_oracle / (P T^2 / 2)) + N_0/(2PT).
double bracket_oracle(const SequenceSet& set, std::size_t i, const ChannelProfile& channel);

// Objective evaluated in extended precision straight from its definition.
long double objective_reference(const ParamVector& params, std::size_t i, const BracketWeights& weights);
// Same, but from raw chips with the coefficients re-derived by direct sums.
long double objective_reference(const std::vector<ComplexVector>& seqs, std::size_t i,
                                const BracketWeights& weights);

// Central differences of objective_reference.
SplitParams fd_grad_params(const ParamVector& params, std::size_t i, const BracketWeights& weights,
                           std::size_t wrt_user, double eps = 1e-5);
ComplexVector fd_grad_sequence(const std::vector<ComplexVector>& seqs, std::size_t i,
                               const BracketWeights& weights, std::size_t wrt_user, double eps = 1e-5);

// max_n |a_n - b_n| / max(|b_n|, floor), b being the reference.
double max_relative_error(std::span<const double> a, std::span<const double> b, double floor = 1e-12);
std::vector<double> flatten(const SplitParams& p);
std::vector<double> flatten(const ComplexVector& v);

}  // namespace seqsnr::oracle
