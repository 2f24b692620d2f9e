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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "seqsnr/channel.hpp"
#include "seqsnr/sequence_set.hpp"

namespace seqsnr {

struct UserReport {
    std::size_t user = 0;
    std::vector<double> s_sums;  // sum_m S_m^{i,k} for every k
    double var_interference = 0.0;
    double var_fading_bound = 0.0;
    double snr_lower = 0.0;
    double snr_lower_db = 0.0;  // 20 log10(snr_lower)
    double r_ac = 0.0;
    std::optional<double> r_cc;  // absent for K = 1
    double sandwich_lower = 0.0;
    double sandwich_upper = 0.0;
};

struct SnrReport {
    std::size_t n = 0;
    std::size_t k = 0;
    std::vector<UserReport> users;
};

/// One row per user; rows are computed independently on up to `threads`
/// workers and stored by index.
SnrReport analyze(const SequenceSet& set, const ChannelProfile& channel, unsigned threads = 1);

// Provenance embedded in every written report.
struct ReportMeta {
    std::string tool = "seqsnr";
    std::string version = SEQSNR_VERSION;
    std::uint64_t seed = 0;
    std::vector<std::pair<std::string, std::string>> config;
};

std::string report_json(const SnrReport& report, const ReportMeta& meta);
// '#'-prefixed provenance lines, then a header row and one row per user.
std::string report_csv(const SnrReport& report, const ReportMeta& meta);

}  // namespace seqsnr
