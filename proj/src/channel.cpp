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

#include "seqsnr/channel.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "seqsnr/format.hpp"
#include "seqsnr/sequence_set.hpp"

namespace seqsnr {

namespace {

using nlohmann::json;

double read_real(const json& obj, const std::string& key, const std::string& where) {
    if (!obj.contains(key)) throw SchemaError(where + "missing field '" + key + "'");
    const json& v = obj.at(key);
    if (!v.is_number()) throw SchemaError(where + "field '" + key + "' must be a number");
    return v.get<double>();
}

long read_int(const json& obj, const std::string& key, const std::string& where) {
    if (!obj.contains(key)) throw SchemaError(where + "missing field '" + key + "'");
    const json& v = obj.at(key);
    if (!v.is_number_integer()) throw SchemaError(where + "field '" + key + "' must be an integer");
    return v.get<long>();
}

}  // namespace

void ChannelProfile::validate() const {
    if (!std::isfinite(power) || power <= 0.0) throw std::invalid_argument("channel: p must be positive");
    if (!std::isfinite(symbol_t) || symbol_t <= 0.0)
        throw std::invalid_argument("channel: t must be positive");
    if (!std::isfinite(noise_n0) || noise_n0 < 0.0)
        throw std::invalid_argument("channel: n0 must be nonnegative");
    for (std::size_t k = 0; k < users.size(); ++k) {
        const auto& u = users[k];
        const std::string who = "channel user " + std::to_string(k) + ": ";
        if (!std::isfinite(u.gamma) || u.gamma < 0.0) throw std::invalid_argument(who + "gamma must be >= 0");
        if (!std::isfinite(u.c_bound) || u.c_bound <= 0.0) throw std::invalid_argument(who + "c must be > 0");
        if (u.m_spread < 1) throw std::invalid_argument(who + "m must be >= 1");
    }
}

void ChannelProfile::require_users(std::size_t k_users) const {
    if (users.size() < k_users)
        throw std::invalid_argument("channel covers " + std::to_string(users.size()) + " users, set has " +
                                    std::to_string(k_users));
}

double ChannelProfile::l_factor(std::size_t k) const {
    const auto& u = users.at(k);
    return static_cast<double>(u.m_spread) * u.c_bound * symbol_t;
}

ChannelProfile parse_channel(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw SchemaError("channel file must hold a JSON object");
    ChannelProfile ch;
    ch.power = read_real(doc, "p", "");
    ch.symbol_t = read_real(doc, "t", "");
    ch.noise_n0 = read_real(doc, "n0", "");
    if (!doc.contains("users")) throw SchemaError("missing field 'users'");
    const json& users = doc.at("users");
    if (!users.is_array()) throw SchemaError("field 'users' must be an array");
    for (std::size_t k = 0; k < users.size(); ++k) {
        const std::string where = "users[" + std::to_string(k) + "]: ";
        if (!users[k].is_object()) throw SchemaError(where + "must be an object");
        UserChannel u;
        u.gamma = read_real(users[k], "gamma", where);
        u.c_bound = read_real(users[k], "c", where);
        u.m_spread = read_int(users[k], "m", where);
        ch.users.push_back(u);
    }
    ch.validate();
    return ch;
}

ChannelProfile load_channel(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_channel(buf.str());
}

std::string serialize_channel(const ChannelProfile& channel) {
    std::string out = "{\"p\": " + format_double(channel.power) + ", \"t\": " +
                      format_double(channel.symbol_t) + ", \"n0\": " + format_double(channel.noise_n0) +
                      ", \"users\": [";
    for (std::size_t k = 0; k < channel.users.size(); ++k) {
        const auto& u = channel.users[k];
        if (k) out += ", ";
        out += "{\"gamma\": " + format_double(u.gamma) + ", \"c\": " + format_double(u.c_bound) +
               ", \"m\": " + std::to_string(u.m_spread) + "}";
    }
    out += "]}\n";
    return out;
}

}  // namespace seqsnr
