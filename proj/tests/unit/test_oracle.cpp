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

#include <catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "seqsnr/oracle.hpp"
#include "seqsnr/snr_model.hpp"

using namespace seqsnr;
using namespace seqsnr::testing;

TEST_CASE("chip integral closed form against Simpson")
{
    const oracle::ChipIntegralInputs cases[] = {
        {Complex(1.0, 0.0), Complex(0.0, 0.0), 1.0},
        {Complex(0.3, -1.2), Complex(2.0, 0.7), 0.25},
        {Complex(-1.0, 0.5), Complex(-1.0, 0.5), 3.0},
    };
    for (const auto& c : cases) {
        // Simpson is exact on quadratics
        CHECK(rel(oracle::chip_integral_numeric(c, 2), oracle::chip_integral_closed(c)) < 1e-13);
        CHECK(rel(oracle::chip_integral_numeric(c, 64), oracle::chip_integral_closed(c)) < 1e-13);
    }
    CHECK(oracle::chip_integral_closed({Complex(1.0), Complex(0.0), 1.0}) == Catch::Approx(1.0 / 3.0));
    CHECK_THROWS_AS(oracle::chip_integral_numeric(cases[0], 3), std::invalid_argument);
    CHECK_THROWS_AS(oracle::chip_integral_numeric(cases[0], 0), std::invalid_argument);
    CHECK_THROWS_AS(oracle::chip_integral_numeric({Complex(1.0), Complex(1.0), 0.0}, 2), std::invalid_argument);
}

TEST_CASE("bit-averaged chip sums match frozen quadrature")
{
    const SequenceSet set = fixed_pair();
    CHECK(rel(oracle::bit_averaged_chip_sum(set, 0, 1, 0.25), kChipSumPair) < 1e-12);
    CHECK(rel(oracle::bit_averaged_chip_sum(set, 0, 0, 0.25), kChipSumSelf) < 1e-12);
    const SequenceSet ones = generate({Family::all_ones, 4, 1, 0}, 1);
    CHECK(std::abs(oracle::bit_averaged_chip_sum(ones, 0, 0, 0.25) - 2.0 / 3.0) < 1e-12);
    // sign-flipped pairs give the same |.|^2, so two pairs suffice
    CHECK(rel(oracle::bit_averaged_chip_sum(set, 0, 1, 0.25, 2), kChipSumPair) < 1e-12);
    CHECK_THROWS_AS(oracle::bit_averaged_chip_sum(set, 0, 1, 0.25, 3), std::invalid_argument);
}

TEST_CASE("variance oracle reproduces the closed forms")
{
    for (std::size_t n : {3u, 4u, 9u})
        for (std::size_t k : {2u, 3u}) {
            const SequenceSet set = generate({Family::random_phase, n, 1, 7 * n + k}, k);
            ChannelProfile ch = flat_channel(k, 0.2);
            ch.power = 1.3;
            ch.symbol_t = 0.7;
            for (std::size_t u = 0; u < k; ++u) ch.users[u] = {0.4 + 0.1 * double(u), 1.2, long(u + 1)};
            const auto c = to_spectral(set);
            for (std::size_t i = 0; i < k; ++i) {
                double sum = 0.0;
                for (std::size_t j = 0; j < k; ++j) {
                    if (j == i) continue;
                    const double o = oracle::variance_oracle(set, i, j, ch);
                    CHECK(rel(interference_pair_term(c, i, j, ch), o) < 1e-9);
                    sum += o;
                }
                CHECK(rel(interference_variance(set, i, ch), sum) < 1e-9);
                CHECK(rel(fading_variance_bound(set, i, ch), oracle::variance_oracle(set, i, i, ch)) < 1e-9);
                CHECK(rel(snr_bracket(set, i, ch), oracle::bracket_oracle(set, i, ch)) < 1e-9);
            }
        }
}

TEST_CASE("max_relative_error uses the reference denominator")
{
    const std::vector<double> a{1.0, 2.0, 0.0}, b{1.0, 1.0, 1e-20};
    CHECK(oracle::max_relative_error(a, b) == 1.0);
    CHECK(oracle::max_relative_error(std::vector<double>{1e-13}, std::vector<double>{0.0}) ==
          Catch::Approx(0.1));
    CHECK_THROWS_AS(oracle::max_relative_error(a, std::vector<double>{1.0}), std::invalid_argument);
}
