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

#include "seqsnr/correlation.hpp"

#include <string>

#include "seqsnr/format.hpp"

namespace seqsnr {

namespace {

void check_lag(long lag, std::size_t n, long upper, const char* what) {
    if (lag < 0 || lag > upper)
        throw std::out_of_range(std::string(what) + ": lag " + std::to_string(lag) +
                                " outside [0, " + std::to_string(upper) + "] for N = " +
                                std::to_string(n));
}

}  // namespace

Complex aperiodic_corr(std::span<const Complex> si, std::span<const Complex> sk, long lag) {
    const long n = static_cast<long>(si.size());
    Complex acc{};
    if (lag >= 0 && lag < n) {
        for (long idx = 0; idx < n - lag; ++idx) acc += std::conj(si[idx + lag]) * sk[idx];
    } else if (lag < 0 && lag > -n) {
        for (long idx = 0; idx < n + lag; ++idx) acc += std::conj(si[idx]) * sk[idx - lag];
    }
    return acc;
}

Complex aperiodic_corr(const SequenceSet& set, std::size_t i, std::size_t k, long lag) {
    return aperiodic_corr(set.sequence(i), set.sequence(k), lag);
}

Complex periodic_corr(const SequenceSet& set, std::size_t i, std::size_t k, long lag) {
    const std::size_t n = set.length();
    check_lag(lag, n, static_cast<long>(n) - 1, "periodic_corr");
    return aperiodic_corr(set, i, k, lag) + aperiodic_corr(set, i, k, lag - static_cast<long>(n));
}

Complex odd_corr(const SequenceSet& set, std::size_t i, std::size_t k, long lag) {
    const std::size_t n = set.length();
    check_lag(lag, n, static_cast<long>(n) - 1, "odd_corr");
    return aperiodic_corr(set, i, k, lag) - aperiodic_corr(set, i, k, lag - static_cast<long>(n));
}

Complex quad_form(std::span<const Complex> si, std::span<const Complex> sk, long lag, BitPair bits) {
    const std::size_t n = si.size();
    if (sk.size() != n) throw std::invalid_argument("quad_form: sequence lengths differ");
    check_lag(lag, n, static_cast<long>(n), "quad_form");
    const std::size_t l = static_cast<std::size_t>(lag);
    Complex upper{};  // top-right E_l block
    for (std::size_t m = 0; m < l; ++m) upper += std::conj(si[m]) * sk[n - l + m];
    Complex lower{};  // bottom-left E_{N-l} block
    for (std::size_t m = 0; m < n - l; ++m) lower += std::conj(si[l + m]) * sk[m];
    return static_cast<double>(bits.prev()) * upper + static_cast<double>(bits.cur()) * lower;
}

Complex quad_form(const SequenceSet& set, std::size_t i, std::size_t k, long lag, BitPair bits) {
    return quad_form(set.sequence(i), set.sequence(k), lag, bits);
}

Complex CorrelationProfile::aperiodic_at(long lag) const {
    const long nn = static_cast<long>(n);
    if (lag <= -nn || lag >= nn) return {};
    return aperiodic[static_cast<std::size_t>(lag + nn - 1)];
}

CorrelationProfile correlation_profile(const SequenceSet& set, std::size_t i, std::size_t k) {
    CorrelationProfile p;
    p.i = i;
    p.k = k;
    p.n = set.length();
    const long nn = static_cast<long>(p.n);
    const auto si = set.sequence(i);
    const auto sk = set.sequence(k);
    p.aperiodic.reserve(2 * p.n - 1);
    for (long l = 1 - nn; l <= nn - 1; ++l) p.aperiodic.push_back(aperiodic_corr(si, sk, l));
    p.periodic.reserve(p.n);
    p.odd.reserve(p.n);
    for (long l = 0; l < nn; ++l) {
        const Complex c = p.aperiodic_at(l);
        const Complex c_wrap = p.aperiodic_at(l - nn);
        p.periodic.push_back(c + c_wrap);
        p.odd.push_back(c - c_wrap);
    }
    return p;
}

void write_profile_csv(const CorrelationProfile& profile, std::ostream& out) {
    out << "l,re_c,im_c,re_theta,im_theta,re_theta_hat,im_theta_hat\n";
    const long nn = static_cast<long>(profile.n);
    for (long l = 1 - nn; l <= nn - 1; ++l) {
        const Complex c = profile.aperiodic_at(l);
        out << l << ',' << format_double(c.real()) << ',' << format_double(c.imag()) << ',';
        if (l >= 0) {
            const auto idx = static_cast<std::size_t>(l);
            out << format_double(profile.periodic[idx].real()) << ','
                << format_double(profile.periodic[idx].imag()) << ','
                << format_double(profile.odd[idx].real()) << ','
                << format_double(profile.odd[idx].imag());
        } else {
            out << ",,,";
        }
        out << '\n';
    }
}

}  // namespace seqsnr
