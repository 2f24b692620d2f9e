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

#include "seqsnr/sequence_set.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>

#include "seqsnr/format.hpp"

namespace seqsnr {

namespace {

std::string energy_message(std::size_t user, double energy, double expected) {
    std::ostringstream os;
    os << "user " << user << ": energy " << format_double(energy) << " differs from N = "
       << format_double(expected);
    return os.str();
}

// Uniform double in [0, 1) from the top 53 bits; std distributions are not
// reproducible across standard library implementations.
double unit_uniform(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

NormalizationError::NormalizationError(std::size_t user, double energy, double expected)
    : std::invalid_argument(energy_message(user, energy, expected)), user_(user) {}

double energy(std::span<const Complex> s) {
    double e = 0.0;
    for (const Complex& c : s) e += std::norm(c);
    return e;
}

SequenceSet::SequenceSet(std::vector<ComplexVector> sequences, double energy_tolerance)
    : sequences_(std::move(sequences)) {
    if (sequences_.empty()) throw std::invalid_argument("sequence set needs at least one user");
    n_ = sequences_.front().size();
    if (n_ < 2) throw std::invalid_argument("sequence length must be at least 2");
    const double expected = static_cast<double>(n_);
    for (std::size_t k = 0; k < sequences_.size(); ++k) {
        if (sequences_[k].size() != n_) {
            throw std::invalid_argument("user " + std::to_string(k) + ": length " +
                                        std::to_string(sequences_[k].size()) +
                                        " differs from N = " + std::to_string(n_));
        }
        for (const Complex& c : sequences_[k]) {
            if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
                throw std::invalid_argument("user " + std::to_string(k) + ": non-finite chip");
        }
        const double e = energy(sequences_[k]);
        if (!(std::abs(e - expected) <= energy_tolerance * expected))
            throw NormalizationError(k, e, expected);
    }
}

std::span<const Complex> SequenceSet::sequence(std::size_t user) const {
    if (user >= sequences_.size())
        throw std::out_of_range("user index " + std::to_string(user) + " out of range");
    return sequences_[user];
}

Family parse_family(const std::string& name) {
    if (name == "all_ones") return Family::all_ones;
    if (name == "random_phase") return Family::random_phase;
    if (name == "random_binary") return Family::random_binary;
    if (name == "zadoff_chu") return Family::zadoff_chu;
    throw std::invalid_argument("unknown sequence family '" + name + "'");
}

std::string to_string(Family family) {
    switch (family) {
        case Family::all_ones: return "all_ones";
        case Family::random_phase: return "random_phase";
        case Family::random_binary: return "random_binary";
        case Family::zadoff_chu: return "zadoff_chu";
    }
    return "unknown";
}

namespace {

ComplexVector zadoff_chu(std::uint64_t root, std::uint64_t n) {
    ComplexVector s(n);
    const std::uint64_t period = 2 * n;
    for (std::uint64_t idx = 1; idx <= n; ++idx) {
        // Phase is -pi * q / N with q reduced mod 2N to keep the argument small.
        const std::uint64_t r = root % period;
        const std::uint64_t q = (n % 2 == 1) ? (r * ((idx - 1) * idx % period)) % period
                                             : (r * ((idx - 1) * (idx - 1) % period)) % period;
        const double phase = -std::numbers::pi * static_cast<double>(q) / static_cast<double>(n);
        s[idx - 1] = std::polar(1.0, phase);
    }
    return s;
}

}  // namespace

SequenceSet generate(const GeneratorSpec& spec, std::size_t k_users) {
    if (spec.n < 2) throw std::invalid_argument("sequence length must be at least 2");
    if (k_users < 1) throw std::invalid_argument("need at least one user");

    std::vector<ComplexVector> seqs;
    seqs.reserve(k_users);
    switch (spec.family) {
        case Family::all_ones:
            seqs.assign(k_users, ComplexVector(spec.n, Complex(1.0, 0.0)));
            break;
        case Family::random_phase: {
            std::mt19937_64 rng(spec.seed);
            for (std::size_t k = 0; k < k_users; ++k) {
                ComplexVector s(spec.n);
                for (auto& c : s) c = std::polar(1.0, 2.0 * std::numbers::pi * unit_uniform(rng));
                seqs.push_back(std::move(s));
            }
            break;
        }
        case Family::random_binary: {
            std::mt19937_64 rng(spec.seed);
            for (std::size_t k = 0; k < k_users; ++k) {
                ComplexVector s(spec.n);
                for (auto& c : s) c = Complex((rng() >> 63) ? 1.0 : -1.0, 0.0);
                seqs.push_back(std::move(s));
            }
            break;
        }
        case Family::zadoff_chu: {
            const std::uint64_t n = spec.n;
            if (spec.root == 0 || std::gcd(spec.root, n) != 1)
                throw std::invalid_argument("Zadoff-Chu root " + std::to_string(spec.root) +
                                            " is not coprime to N = " + std::to_string(n));
            std::vector<bool> used(n, false);
            std::uint64_t root = spec.root;
            for (std::size_t k = 0; k < k_users; ++k) {
                std::uint64_t tries = 0;
                while (std::gcd(root, n) != 1 || used[root % n]) {
                    ++root;
                    if (++tries > n)
                        throw std::invalid_argument("N = " + std::to_string(n) +
                                                    " has fewer coprime roots than " +
                                                    std::to_string(k_users) + " users");
                }
                used[root % n] = true;
                seqs.push_back(zadoff_chu(root, n));
            }
            break;
        }
    }
    return SequenceSet(std::move(seqs));
}

std::string format_double(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

}  // namespace seqsnr
