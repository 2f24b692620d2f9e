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

#include "seqsnr/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "seqsnr/correlation.hpp"

namespace seqsnr::oracle {

namespace {

using LComplex = std::complex<long double>;

double sq(double x) { return x * x; }

}  // namespace

double chip_integral_closed(const ChipIntegralInputs& inp) {
    const double t3 = inp.t_c * inp.t_c * inp.t_c;
    return t3 / 3.0 * (std::norm(inp.a) + std::norm(inp.b) + (inp.a * std::conj(inp.b)).real());
}

double chip_integral_numeric(const ChipIntegralInputs& inp, int panels) {
    if (panels < 2 || panels % 2 != 0) throw std::invalid_argument("Simpson rule needs an even panel count >= 2");
    if (!(inp.t_c > 0.0)) throw std::invalid_argument("chip width must be positive");
    const double h = inp.t_c / panels;
    auto f = [&](double u) { return std::norm(inp.a * u + inp.b * (inp.t_c - u)); };
    double acc = f(0.0) + f(inp.t_c);
    for (int p = 1; p < panels; ++p) acc += (p % 2 ? 4.0 : 2.0) * f(p * h);
    return acc * h / 3.0;
}

double bit_averaged_chip_sum(const SequenceSet& set, std::size_t i, std::size_t k, double t_c, int bit_pairs) {
    if (bit_pairs != 2 && bit_pairs != 4) throw std::invalid_argument("bit_pairs must be 2 or 4");
    const long n = static_cast<long>(set.length());
    const auto si = set.sequence(i);
    const auto sk = set.sequence(k);
    double total = 0.0;
    // Flipping both bits only flips the sign of Gamma's argument, so two
    // representatives with weight 1/2 suffice.
    const BitPair half[2] = {{1, 1}, {-1, 1}};
    for (int b = 0; b < bit_pairs; ++b) {
        const BitPair bits = bit_pairs == 4 ? kAllBitPairs[b] : half[b];
        double chip_sum = 0.0;
        for (long l = 0; l < n; ++l) {
            chip_sum += chip_integral_closed({quad_form(si, sk, l, bits), quad_form(si, sk, l + 1, bits), t_c});
        }
        total += chip_sum;
    }
    return total / bit_pairs;
}

double variance_oracle(const SequenceSet& set, std::size_t i, std::size_t k, const ChannelProfile& channel) {
    channel.require_users(set.users());
    const double t_c = channel.symbol_t / static_cast<double>(set.length());
    const double chips = bit_averaged_chip_sum(set, i, k, t_c);
    if (i == k) {
        const auto& u = channel.users.at(i);
        return channel.power / 4.0 * sq(u.gamma) * u.c_bound * static_cast<double>(u.m_spread) * chips;
    }
    const double weight = 1.0 + sq(channel.users.at(k).gamma) * channel.l_factor(k);
    return channel.power / (4.0 * channel.symbol_t) * weight * chips;
}

double bracket_oracle(const SequenceSet& set, std::size_t i, const ChannelProfile& channel) {
    double var = 0.0;
    for (std::size_t k = 0; k < set.users(); ++k) var += variance_oracle(set, i, k, channel);
    return var / (channel.power * sq(channel.symbol_t) / 2.0) +
           channel.noise_n0 / (2.0 * channel.power * channel.symbol_t);
}

long double objective_reference(const ParamVector& params, std::size_t i, const BracketWeights& weights) {
    if (i >= params.size() || weights.z.size() != params.size())
        throw std::invalid_argument("objective_reference: bad user index or weights");
    const std::size_t n = params.front().size();
    const long double nd = static_cast<long double>(n);
    const long double pi = std::numbers::pi_v<long double>;
    auto power = [](long double x, long double y) { return x * x + y * y; };
    long double acc = 0.0L;
    for (std::size_t k = 0; k < params.size(); ++k) {
        const auto& a = params[i];
        const auto& b = params[k];
        long double s = 0.0L;
        for (std::size_t idx = 0; idx < n; ++idx) {
            const long double m = static_cast<long double>(idx + 1);
            const long double wa = 1.0L + 0.5L * std::cos(2.0L * pi * m / nd);
            const long double wb = 1.0L + 0.5L * std::cos(2.0L * pi * (m / nd + 1.0L / (2.0L * nd)));
            s += power(a.alpha_re[idx], a.alpha_im[idx]) * power(b.alpha_re[idx], b.alpha_im[idx]) * wa +
                 power(a.beta_re[idx], a.beta_im[idx]) * power(b.beta_re[idx], b.beta_im[idx]) * wb;
        }
        acc += static_cast<long double>(weights.z[k]) * s;
    }
    return acc / (6.0L * nd * nd) + static_cast<long double>(weights.noise);
}

long double objective_reference(const std::vector<ComplexVector>& seqs, std::size_t i,
                                const BracketWeights& weights) {
    const std::size_t n = seqs.front().size();
    const long double nd = static_cast<long double>(n);
    const long double pi = std::numbers::pi_v<long double>;
    // alpha_m = (1/sqrt N) sum_n conj(w_m(0))_n s_n, beta_m likewise with eta = 1/(2N).
    std::vector<std::vector<LComplex>> alpha(seqs.size()), beta(seqs.size());
    long double acc = 0.0L;
    for (std::size_t u = 0; u < seqs.size(); ++u) {
        alpha[u].assign(n, {});
        beta[u].assign(n, {});
        for (std::size_t m = 1; m <= n; ++m) {
            for (std::size_t c = 0; c < n; ++c) {
                const long double pos = static_cast<long double>(c);
                const LComplex s(seqs[u][c].real(), seqs[u][c].imag());
                const long double pa = -2.0L * pi * pos * static_cast<long double>(m) / nd;
                const long double pb = -2.0L * pi * pos * (static_cast<long double>(m) / nd + 1.0L / (2.0L * nd));
                alpha[u][m - 1] += LComplex(std::cos(pa), std::sin(pa)) * s;
                beta[u][m - 1] += LComplex(std::cos(pb), std::sin(pb)) * s;
            }
            alpha[u][m - 1] /= std::sqrt(nd);
            beta[u][m - 1] /= std::sqrt(nd);
        }
    }
    for (std::size_t k = 0; k < seqs.size(); ++k) {
        long double s = 0.0L;
        for (std::size_t idx = 0; idx < n; ++idx) {
            const long double m = static_cast<long double>(idx + 1);
            const long double wa = 1.0L + 0.5L * std::cos(2.0L * pi * m / nd);
            const long double wb = 1.0L + 0.5L * std::cos(2.0L * pi * (m / nd + 1.0L / (2.0L * nd)));
            s += std::norm(alpha[i][idx]) * std::norm(alpha[k][idx]) * wa +
                 std::norm(beta[i][idx]) * std::norm(beta[k][idx]) * wb;
        }
        acc += static_cast<long double>(weights.z[k]) * s;
    }
    return acc / (6.0L * nd * nd) + static_cast<long double>(weights.noise);
}

SplitParams fd_grad_params(const ParamVector& params, std::size_t i, const BracketWeights& weights,
                           std::size_t wrt_user, double eps) {
    const std::size_t n = params.at(wrt_user).size();
    SplitParams g = SplitParams::zeros(n);
    ParamVector work = params;
    auto diff = [&](std::vector<double>& slot_vec, std::vector<double>& out, std::size_t idx) {
        const double orig = slot_vec[idx];
        slot_vec[idx] = orig + eps;
        const long double up = objective_reference(work, i, weights);
        slot_vec[idx] = orig - eps;
        const long double down = objective_reference(work, i, weights);
        slot_vec[idx] = orig;
        out[idx] = static_cast<double>((up - down) / (2.0L * static_cast<long double>(eps)));
    };
    SplitParams& p = work[wrt_user];
    for (std::size_t idx = 0; idx < n; ++idx) {
        diff(p.alpha_re, g.alpha_re, idx);
        diff(p.alpha_im, g.alpha_im, idx);
        diff(p.beta_re, g.beta_re, idx);
        diff(p.beta_im, g.beta_im, idx);
    }
    return g;
}

ComplexVector fd_grad_sequence(const std::vector<ComplexVector>& seqs, std::size_t i,
                               const BracketWeights& weights, std::size_t wrt_user, double eps) {
    const std::size_t n = seqs.at(wrt_user).size();
    std::vector<ComplexVector> work = seqs;
    ComplexVector g(n);
    const long double denom = 2.0L * static_cast<long double>(eps);
    for (std::size_t c = 0; c < n; ++c) {
        const Complex orig = work[wrt_user][c];
        work[wrt_user][c] = orig + Complex(eps, 0.0);
        const long double re_up = objective_reference(work, i, weights);
        work[wrt_user][c] = orig - Complex(eps, 0.0);
        const long double re_down = objective_reference(work, i, weights);
        work[wrt_user][c] = orig + Complex(0.0, eps);
        const long double im_up = objective_reference(work, i, weights);
        work[wrt_user][c] = orig - Complex(0.0, eps);
        const long double im_down = objective_reference(work, i, weights);
        work[wrt_user][c] = orig;
        g[c] = {static_cast<double>((re_up - re_down) / denom), static_cast<double>((im_up - im_down) / denom)};
    }
    return g;
}

double max_relative_error(std::span<const double> a, std::span<const double> b, double floor) {
    if (a.size() != b.size()) throw std::invalid_argument("max_relative_error: size mismatch");
    double worst = 0.0;
    for (std::size_t idx = 0; idx < a.size(); ++idx)
        worst = std::max(worst, std::abs(a[idx] - b[idx]) / std::max(std::abs(b[idx]), floor));
    return worst;
}

std::vector<double> flatten(const SplitParams& p) {
    std::vector<double> out;
    for (const auto* v : {&p.alpha_re, &p.alpha_im, &p.beta_re, &p.beta_im}) out.insert(out.end(), v->begin(), v->end());
    return out;
}

std::vector<double> flatten(const ComplexVector& v) {
    std::vector<double> out;
    out.reserve(2 * v.size());
    for (const auto& c : v) {
        out.push_back(c.real());
        out.push_back(c.imag());
    }
    return out;
}

}  // namespace seqsnr::oracle
