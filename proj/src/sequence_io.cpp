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

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "seqsnr/format.hpp"
#include "seqsnr/sequence_set.hpp"

namespace seqsnr {

namespace {

using nlohmann::json;

std::size_t read_count(const json& doc, const char* key, std::size_t minimum) {
    if (!doc.contains(key)) throw SchemaError(std::string("missing field '") + key + "'");
    const json& v = doc.at(key);
    if (!v.is_number_integer()) throw SchemaError(std::string("field '") + key + "' must be an integer");
    const auto value = v.get<long long>();
    if (value < static_cast<long long>(minimum))
        throw SchemaError(std::string("field '") + key + "' must be at least " + std::to_string(minimum));
    return static_cast<std::size_t>(value);
}

}  // namespace

SequenceSet parse_sequence_set(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw SchemaError("sequence file must hold a JSON object");

    const std::size_t n = read_count(doc, "n", 2);
    const std::size_t k = read_count(doc, "k", 1);
    if (!doc.contains("sequences")) throw SchemaError("missing field 'sequences'");
    const json& rows = doc.at("sequences");
    if (!rows.is_array()) throw SchemaError("field 'sequences' must be an array");
    if (rows.size() != k)
        throw SchemaError("'sequences' has " + std::to_string(rows.size()) + " entries, expected k = " +
                          std::to_string(k));

    std::vector<ComplexVector> seqs;
    seqs.reserve(k);
    for (std::size_t user = 0; user < k; ++user) {
        const json& row = rows[user];
        if (!row.is_array() || row.size() != n)
            throw SchemaError("user " + std::to_string(user) + ": expected " + std::to_string(n) +
                              " chips");
        ComplexVector s;
        s.reserve(n);
        for (const json& chip : row) {
            if (!chip.is_array() || chip.size() != 2 || !chip[0].is_number() || !chip[1].is_number())
                throw SchemaError("user " + std::to_string(user) + ": chips must be [re, im] pairs");
            s.emplace_back(chip[0].get<double>(), chip[1].get<double>());
        }
        seqs.push_back(std::move(s));
    }
    return SequenceSet(std::move(seqs), kLoadEnergyTolerance);
}

SequenceSet load_sequence_set(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_sequence_set(buf.str());
}

// Written by hand rather than through nlohmann so every value carries 17
// significant digits.
std::string serialize_sequence_set(const SequenceSet& set) {
    std::string out;
    out += "{\"n\": " + std::to_string(set.length()) + ", \"k\": " + std::to_string(set.users()) +
           ", \"sequences\": [\n";
    for (std::size_t user = 0; user < set.users(); ++user) {
        out += "  [";
        const auto s = set.sequence(user);
        for (std::size_t idx = 0; idx < s.size(); ++idx) {
            if (idx) out += ", ";
            out += "[" + format_double(s[idx].real()) + ", " + format_double(s[idx].imag()) + "]";
        }
        out += (user + 1 < set.users()) ? "],\n" : "]\n";
    }
    out += "]}\n";
    return out;
}

void save_sequence_set(const SequenceSet& set, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << serialize_sequence_set(set);
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace seqsnr
