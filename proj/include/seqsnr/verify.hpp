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
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "seqsnr/channel.hpp"

namespace seqsnr {

struct VerifyConfig {
    std::size_t n = 8;
    std::size_t users = 3;
    std::size_t trials = 20;
    std::uint64_t seed = 1;
    double tol = 1e-9;       // identity and oracle residuals
    double grad_tol = 1e-6;  // analytic vs central-difference gradients
    double eps = 1e-5;       // finite-difference step
};

struct CheckResult {
    std::string name;
    double worst = 0.0;
    double tolerance = 0.0;
    std::uint64_t seed = 0;  // trial seed where `worst` occurred
    std::size_t i = 0;
    std::size_t k = 0;
    bool passed() const noexcept { return worst <= tolerance; }
};

struct VerifyResult {
    std::vector<CheckResult> checks;
    bool passed() const noexcept;
};

// Channel with every parameter drawn from a fixed positive range.
ChannelProfile random_channel(std::size_t k_users, std::mt19937_64& rng);

/// Runs the oracle and identity suite over `trials` random-phase sets with
/// seeds cfg.seed, cfg.seed + 1, ...
VerifyResult run_verification(const VerifyConfig& cfg);

}  // namespace seqsnr
