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

#include "seqsnr/verify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "seqsnr/correlation.hpp"
#include "seqsnr/gradient.hpp"
#include "seqsnr/mean_square.hpp"
#include "seqsnr/oracle.hpp"
#include "seqsnr/snr_model.hpp"
#include "seqsnr/spectral.hpp"

namespace seqsnr {

namespace {

double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}

double relative(double value, double reference) {
    const double scale = std::abs(reference);
    const double diff = std::abs(value - reference);
    return scale > 0.0 ? diff / scale : diff;
}

class Tracker {
public:
    Tracker(std::string name, double tolerance) {
        result_.name = std::move(name);
        result_.tolerance = tolerance;
    }
    void record(double residual, std::uint64_t seed, std::size_t i, std::size_t k) {
        if (std::isnan(residual)) residual = INFINITY;
        if (first_ || residual > result_.worst) result_ = {result_.name, residual, result_.tolerance, seed, i, k};
        first_ = false;
    }
    const CheckResult& result() const { return result_; }

private:
    CheckResult result_;
    bool first_ = true;
};

}  // namespace

bool VerifyResult::passed() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
}

ChannelProfile random_channel(std::size_t k_users, std::mt19937_64& rng) {
    ChannelProfile ch;
    ch.power = uniform(rng, 0.5, 2.0);
    ch.symbol_t = uniform(rng, 0.5, 2.0);
    ch.noise_n0 = uniform(rng, 0.01, 1.0);
    for (std::size_t k = 0; k < k_users; ++k) {
        UserChannel u;
        u.gamma = uniform(rng, 0.05, 1.5);
        u.c_bound = uniform(rng, 0.1, 2.0);
        u.m_spread = 1 + static_cast<long>(rng() % 4);
        ch.users.push_back(u);
    }
    return ch;
}

VerifyResult run_verification(const VerifyConfig& cfg) {
    if (cfg.n < 2 || cfg.users < 1 || cfg.trials < 1)
        throw std::invalid_argument("verify needs n >= 2, users >= 1, trials >= 1");
    if (!(cfg.tol > 0.0) || !(cfg.grad_tol > 0.0) || !(cfg.eps > 0.0))
        throw std::invalid_argument("tolerances must be positive");

    const std::size_t n = cfg.n;
    const double tol = scaled_tolerance(cfg.tol, n);
    Tracker unitary("unitary_structure", tol);
    Tracker four_type("four_type_identity", tol);
    Tracker eigen("eigen_decomposition", tol);
    Tracker roundtrip("phi_round_trip", tol);
    Tracker interference("oracle_interference", cfg.tol);
    Tracker fading("oracle_fading", cfg.tol);
    Tracker bracket("oracle_snr_bracket", cfg.tol);
    Tracker msq("mean_square_agreement", tol);
    Tracker sandwich("sandwich_containment", cfg.tol);
    Tracker grad_p("gradient_params", cfg.grad_tol);
    Tracker grad_s("gradient_sequence", cfg.grad_tol);

    const auto basis = basis_matrices(n);
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    const double unit = std::max({unitarity_residual(basis->v()), unitarity_residual(basis->v_hat()),
                                  unitarity_residual(basis->phi()), unitarity_residual(basis->phi_hat()),
                                  (basis->phi() * basis->phi_hat() - id).norm()});
    unitary.record(unit, cfg.seed, 0, 0);

    for (std::size_t t = 0; t < cfg.trials; ++t) {
        const std::uint64_t seed = cfg.seed + t;
        const SequenceSet set = generate({Family::random_phase, n, 1, seed}, cfg.users);
        std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
        const ChannelProfile channel = random_channel(cfg.users, rng);
        const auto coeffs = to_spectral(set);

        for (std::size_t k = 0; k < cfg.users; ++k) {
            const Eigen::Map<const Eigen::VectorXcd> a(coeffs[k].alpha.data(), static_cast<Eigen::Index>(n));
            const Eigen::Map<const Eigen::VectorXcd> b(coeffs[k].beta.data(), static_cast<Eigen::Index>(n));
            roundtrip.record(std::max((basis->phi() * b - a).norm(), (basis->phi_hat() * a - b).norm()), seed, k, k);
        }

        for (std::size_t i = 0; i < cfg.users; ++i) {
            for (std::size_t k = 0; k < cfg.users; ++k) {
                for (long l = 0; l <= static_cast<long>(n); ++l) {
                    for (const BitPair bits : kAllBitPairs) {
                        const Complex q = quad_form(set, i, k, l, bits);
                        eigen.record(std::abs(q - eigen_sum(coeffs[i], coeffs[k], l, bits)), seed, i, k);
                        if (l < static_cast<long>(n)) {
                            const Complex expect = bits.prev() == bits.cur()
                                                       ? static_cast<double>(bits.cur()) * periodic_corr(set, i, k, l)
                                                       : static_cast<double>(bits.cur()) * odd_corr(set, i, k, l);
                            four_type.record(std::abs(q - expect), seed, i, k);
                        }
                    }
                }
                if (i != k) {
                    interference.record(relative(interference_pair_term(coeffs, i, k, channel),
                                                 oracle::variance_oracle(set, i, k, channel)),
                                        seed, i, k);
                }
            }
            fading.record(relative(fading_variance_bound(coeffs, i, channel), oracle::variance_oracle(set, i, i, channel)),
                          seed, i, i);
            bracket.record(relative(snr_bracket(coeffs, i, channel), oracle::bracket_oracle(set, i, channel)), seed, i, i);

            const double snr = snr_lower_bound(coeffs, i, channel);
            const SandwichBounds sb = sandwich_bounds(coeffs, i, channel);
            sandwich.record(std::max({0.0, sb.lower - snr, snr - sb.upper}), seed, i, i);

            const BracketWeights w = BracketWeights::from(i, channel, cfg.users);
            const ParamVector params = split_params(set);
            for (std::size_t j = 0; j < cfg.users; ++j) {
                const auto analytic = oracle::flatten(grad_params(params, i, w, j));
                const auto numeric = oracle::flatten(oracle::fd_grad_params(params, i, w, j, cfg.eps));
                grad_p.record(oracle::max_relative_error(analytic, numeric), seed, i, j);
                const auto analytic_s = oracle::flatten(grad_sequence(set, i, w, j));
                const auto numeric_s = oracle::flatten(oracle::fd_grad_sequence(set.sequences(), i, w, j, cfg.eps));
                grad_s.record(oracle::max_relative_error(analytic_s, numeric_s), seed, i, j);
            }
        }

        const MsqIndices d = msq_direct(set), th = msq_theta(set), sp = msq_spectral(coeffs);
        for (std::size_t i = 0; i < cfg.users; ++i) {
            double worst = std::max({std::abs(d.r_ac_per_user[i] - th.r_ac_per_user[i]),
                                     std::abs(d.r_ac_per_user[i] - sp.r_ac_per_user[i])});
            if (cfg.users >= 2)
                worst = std::max({worst, std::abs(d.cc(i) - th.cc(i)), std::abs(d.cc(i) - sp.cc(i))});
            msq.record(worst, seed, i, i);
        }
    }

    VerifyResult out;
    for (const Tracker* tr : {&unitary, &roundtrip, &four_type, &eigen, &interference, &fading, &bracket, &msq,
                              &sandwich, &grad_p, &grad_s})
        out.checks.push_back(tr->result());
    return out;
}

}  // namespace seqsnr
