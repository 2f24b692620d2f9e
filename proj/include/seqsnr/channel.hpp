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
#include <filesystem>
#include <string>
#include <vector>

namespace seqsnr {

// Worst-case fading parameters of one user.
struct UserChannel {
    double gamma = 0.0;    // transmission coefficient of the scattered path
    double c_bound = 1.0;  // upper bound C_k of the delay-power profile g_k
    long m_spread = 1;     // delay span M_k in symbols
};

/// System constants plus one UserChannel per user.
struct ChannelProfile {
    double power = 1.0;     // P
    double symbol_t = 1.0;  // T
    double noise_n0 = 0.0;  // N_0
    std::vector<UserChannel> users;

    // Throws std::invalid_argument on non-finite or out-of-range values.
    void validate() const;
    // Throws if the profile does not cover `k_users` users.
    void require_users(std::size_t k_users) const;

    // L_k = M_k C_k T, the rectangular (worst-case) profile integral.
    double l_factor(std::size_t k) const;
};

// {"p": real, "t": real, "n0": real, "users": [{"gamma": real, "c": real, "m": int}, ...]}
ChannelProfile parse_channel(const std::string& json_text);
ChannelProfile load_channel(const std::filesystem::path& path);
std::string serialize_channel(const ChannelProfile& channel);

}  // namespace seqsnr
