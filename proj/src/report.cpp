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

#include "seqsnr/report.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include <json.hpp>

#include "seqsnr/format.hpp"
#include "seqsnr/mean_square.hpp"
#include "seqsnr/parallel.hpp"
#include "seqsnr/snr_model.hpp"
#include "seqsnr/spectral.hpp"

namespace seqsnr {

unsigned thread_count_from_env() {
    const char* raw = std::getenv("SEQSNR_THREADS");
    if (raw == nullptr || *raw == '\0') return 1;
    char* end = nullptr;
    const long value = std::strtol(raw, &end, 10);
    if (*end != '\0' || value < 1) throw std::invalid_argument("SEQSNR_THREADS must be an integer >= 1");
    return static_cast<unsigned>(value);
}

SnrReport analyze(const SequenceSet& set, const ChannelProfile& channel, unsigned threads) {
    channel.validate();
    channel.require_users(set.users());
    const auto coeffs = to_spectral(set);
    const MsqIndices msq = msq_spectral(coeffs);

    SnrReport report{set.length(), set.users(), std::vector<UserReport>(set.users())};
    parallel_for(set.users(), threads, [&](std::size_t i) {
        UserReport& row = report.users[i];
        row.user = i;
        row.s_sums.resize(set.users());
        for (std::size_t k = 0; k < set.users(); ++k) row.s_sums[k] = s_sum(coeffs[i], coeffs[k]);
        row.var_interference = interference_variance(coeffs, i, channel);
        row.var_fading_bound = fading_variance_bound(coeffs, i, channel);
        row.snr_lower = snr_lower_bound(coeffs, i, channel);
        row.snr_lower_db = 20.0 * std::log10(row.snr_lower);
        row.r_ac = msq.r_ac_per_user[i];
        if (msq.r_cc_per_user) row.r_cc = (*msq.r_cc_per_user)[i];
        const SandwichBounds sb = sandwich_bounds(coeffs, i, channel);
        row.sandwich_lower = sb.lower;
        row.sandwich_upper = sb.upper;
    });
    return report;
}

std::string report_json(const SnrReport& report, const ReportMeta& meta) {
    nlohmann::ordered_json doc;
    doc["tool"] = meta.tool;
    doc["version"] = meta.version;
    doc["seed"] = meta.seed;
    nlohmann::ordered_json config = nlohmann::ordered_json::object();
    for (const auto& [key, value] : meta.config) config[key] = value;
    doc["config"] = config;
    doc["n"] = report.n;
    doc["k"] = report.k;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& u : report.users) {
        nlohmann::ordered_json row;
        row["user"] = u.user;
        row["s_sums"] = u.s_sums;
        row["var_interference"] = u.var_interference;
        row["var_fading_bound"] = u.var_fading_bound;
        row["snr_lower"] = u.snr_lower;
        row["snr_lower_db"] = u.snr_lower_db;
        row["r_ac"] = u.r_ac;
        row["r_cc"] = u.r_cc ? nlohmann::ordered_json(*u.r_cc) : nlohmann::ordered_json(nullptr);
        row["sandwich_lower"] = u.sandwich_lower;
        row["sandwich_upper"] = u.sandwich_upper;
        rows.push_back(std::move(row));
    }
    doc["users"] = std::move(rows);
    return doc.dump(2) + "\n";
}

std::string report_csv(const SnrReport& report, const ReportMeta& meta) {
    std::string out = "# tool=" + meta.tool + " version=" + meta.version + " seed=" + std::to_string(meta.seed) + "\n";
    for (const auto& [key, value] : meta.config) out += "# " + key + "=" + value + "\n";
    out += "user";
    for (std::size_t k = 0; k < report.k; ++k) out += ",s_sum_" + std::to_string(k);
    out += ",var_interference,var_fading_bound,snr_lower,snr_lower_db,r_ac,r_cc,sandwich_lower,sandwich_upper\n";
    for (const auto& u : report.users) {
        out += std::to_string(u.user);
        for (double s : u.s_sums) out += "," + format_double(s);
        for (double v : {u.var_interference, u.var_fading_bound, u.snr_lower, u.snr_lower_db, u.r_ac})
            out += "," + format_double(v);
        out += "," + (u.r_cc ? format_double(*u.r_cc) : std::string());
        out += "," + format_double(u.sandwich_lower) + "," + format_double(u.sandwich_upper) + "\n";
    }
    return out;
}

}  // namespace seqsnr
