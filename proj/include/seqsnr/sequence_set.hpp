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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace seqsnr {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

// Relative tolerance of the energy invariant sum_n |s_{k,n}|^2 = N.
inline constexpr double kEnergyTolerance = 1e-9;
// Looser tolerance accepted when reading sequence files.
inline constexpr double kLoadEnergyTolerance = 1e-6;

// Malformed sequence file (wrong types, missing keys, ragged lengths).
class SchemaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A user's sequence does not carry energy N.
class NormalizationError : public std::invalid_argument {
public:
    NormalizationError(std::size_t user, double energy, double expected);
    std::size_t user() const noexcept { return user_; }

private:
    std::size_t user_;
};

/// K complex spreading sequences of common length N, each normalized to
/// energy N. Immutable after construction; users are indexed from 0.
class SequenceSet {
public:
    /// Validates shape (K >= 1, N >= 2, no ragged rows) and the energy
    /// invariant to `energy_tolerance` relative. Throws std::invalid_argument
    /// on shape errors and NormalizationError naming the first bad user.
    explicit SequenceSet(std::vector<ComplexVector> sequences,
                         double energy_tolerance = kEnergyTolerance);

    std::size_t length() const noexcept { return n_; }
    std::size_t users() const noexcept { return sequences_.size(); }

    std::span<const Complex> sequence(std::size_t user) const;
    const std::vector<ComplexVector>& sequences() const noexcept { return sequences_; }

    friend bool operator==(const SequenceSet&, const SequenceSet&) = default;

private:
    std::size_t n_ = 0;
    std::vector<ComplexVector> sequences_;
};

// sum_n |s_n|^2
double energy(std::span<const Complex> s);

enum class Family { all_ones, random_phase, random_binary, zadoff_chu };

Family parse_family(const std::string& name);
std::string to_string(Family family);

struct GeneratorSpec {
    Family family = Family::all_ones;
    std::size_t n = 0;
    std::uint64_t root = 1;   // Zadoff-Chu only
    std::uint64_t seed = 0;   // random families only
};

/// Deterministic in (spec, k_users).
///
/// Zadoff-Chu chips (n = 1..N):
///   odd N:  s_n = exp(-j*pi*r*(n-1)*n / N)
///   even N: s_n = exp(-j*pi*r*(n-1)^2 / N)
/// User k gets the k-th root, counting upward from `spec.root`, that is
/// coprime to N and distinct modulo N. Random families draw from
/// std::mt19937_64 seeded with `spec.seed`, users consumed in order.
SequenceSet generate(const GeneratorSpec& spec, std::size_t k_users);

// Sequence-set file: {"n": int, "k": int, "sequences": [[[re, im], ...], ...]}
SequenceSet load_sequence_set(const std::filesystem::path& path);
SequenceSet parse_sequence_set(const std::string& json_text);
void save_sequence_set(const SequenceSet& set, const std::filesystem::path& path);
std::string serialize_sequence_set(const SequenceSet& set);

}  // namespace seqsnr
