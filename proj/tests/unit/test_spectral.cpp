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

#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "seqsnr/spectral.hpp"

using namespace seqsnr;

namespace {

double dist(std::span<const Complex> a, std::span<const Complex> b) {
    double d = 0.0;
    for (std::size_t n = 0; n < a.size(); ++n) d = std::max(d, std::abs(a[n] - b[n]));
    return d;
}

double norm2(std::span<const Complex> v) {
    double s = 0.0;
    for (const Complex& c : v) s += std::norm(c);
    return s;
}

Eigen::VectorXcd as_eigen(std::span<const Complex> v) {
    Eigen::VectorXcd out(static_cast<Eigen::Index>(v.size()));
    for (std::size_t n = 0; n < v.size(); ++n) out(static_cast<Eigen::Index>(n)) = v[n];
    return out;
}

}  // namespace

TEST_CASE("basis vectors at small N")
{
    const ComplexVector dc = basis_vector(4, 0.0, 4);
    for (const Complex& c : dc) CHECK(std::abs(c - 1.0) < 1e-15);
    const ComplexVector alt = basis_vector(2, 0.0, 4);
    const double expect[] = {1, -1, 1, -1};
    for (int n = 0; n < 4; ++n) CHECK(std::abs(alt[n] - expect[n]) < 1e-15);
    const ComplexVector w1 = basis_vector(1, 0.0, 8), w2 = basis_vector(2, 0.0, 8);
    Complex ip{};
    for (int n = 0; n < 8; ++n) ip += std::conj(w1[n]) * w2[n];
    CHECK(std::abs(ip) < 1e-12);
    CHECK_THROWS_AS(basis_vector(0, 0.0, 4), std::out_of_range);
    CHECK_THROWS_AS(basis_vector(5, 0.0, 4), std::out_of_range);
}

TEST_CASE("all-ones coefficients")
{
    const ComplexVector s(4, 1.0);
    const SpectralCoefficients c = to_spectral(s);
    for (int m = 1; m <= 3; ++m) CHECK(std::abs(c.alpha_mode(m)) < 1e-14);
    CHECK(std::abs(c.alpha_mode(4) - 2.0) < 1e-14);
    // |beta_m|^2 = 1 / (N sin^2(pi (2m+1) / (2N)))
    for (int m = 1; m <= 4; ++m) {
        const double sn = std::sin(std::numbers::pi * (2 * m + 1) / 8.0);
        CHECK(std::abs(std::norm(c.beta_mode(m)) - 1.0 / (4.0 * sn * sn)) < 1e-12);
    }
}

TEST_CASE("single eta-hat basis vector has one beta")
{
    const Complex phase = std::polar(1.0, 0.7);
    ComplexVector s = basis_vector(1, 1.0 / 16.0, 8);
    for (auto& c : s) c *= phase;
    const SpectralCoefficients c = to_spectral(s);
    CHECK(std::abs(c.beta_mode(1) - std::sqrt(8.0) * phase) < 1e-12);
    for (int m = 2; m <= 8; ++m) CHECK(std::abs(c.beta_mode(m)) < 1e-12);
}

TEST_CASE("to_spectral preserves norm and reconstructs")
{
    for (std::size_t n : {2u, 3u, 8u, 13u, 32u}) {
        const SequenceSet set = generate({Family::random_phase, n, 1, 100 + n}, 2);
        const auto& b = *basis_matrices(n);
        for (const SpectralCoefficients& c : to_spectral(set)) {
            CHECK(std::abs(norm2(c.alpha) - double(n)) < 1e-9 * n);
            CHECK(std::abs(norm2(c.beta) - double(n)) < 1e-9 * n);
        }
        const auto cs = to_spectral(set);
        for (std::size_t k = 0; k < 2; ++k) {
            CHECK(dist(b.synthesize_alpha(cs[k].alpha), set.sequence(k)) < 1e-9);
            CHECK(dist(b.synthesize_beta(cs[k].beta), set.sequence(k)) < 1e-9);
        }
    }
    const ComplexVector bad(4, 2.0);
    CHECK_THROWS_AS(to_spectral(bad), std::invalid_argument);
}

TEST_CASE("basis matrices are unitary and mutually inverse")
{
    for (std::size_t n = 2; n <= 20; ++n) {
        const BasisMatrices b = BasisMatrices::build(n);
        CHECK(unitarity_residual(b.v()) < 1e-12);
        CHECK(unitarity_residual(b.v_hat()) < 1e-12);
        CHECK(unitarity_residual(b.phi()) < 1e-9);
        CHECK(unitarity_residual(b.phi_hat()) < 1e-9);
        const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(Eigen::Index(n), Eigen::Index(n));
        CHECK((b.phi() * b.phi_hat() - id).norm() < 1e-9);
        // closed forms agree with the products they stand for
        CHECK((b.v().adjoint() * b.v_hat() - b.phi()).norm() < 1e-9);
        CHECK((b.v_hat().adjoint() * b.v() - b.phi_hat()).norm() < 1e-9);
    }
}

TEST_CASE("N=2 closed forms by hand")
{
    // Phi_{m,n} = (1/N) 2 / (1 - exp(2 pi j ((n-m)/N + 1/(2N))))
    const BasisMatrices b = BasisMatrices::build(2);
    const Complex j(0.0, 1.0);
    for (int m = 1; m <= 2; ++m)
        for (int c = 1; c <= 2; ++c) {
            const Complex want = 1.0 / (1.0 - std::exp(2.0 * std::numbers::pi * j * ((c - m) / 2.0 + 0.25)));
            CHECK(std::abs(b.phi()(m - 1, c - 1) - want) < 1e-14);
        }
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(2, 2);
    CHECK((b.phi() * b.phi_hat() - id).norm() < 1e-12);
}

TEST_CASE("Phi maps beta to alpha")
{
    const auto b = basis_matrices(8);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const SequenceSet set = generate({Family::random_phase, 8, 1, seed}, 1);
        const SpectralCoefficients c = to_spectral(set.sequence(0));
        const Eigen::VectorXcd a = as_eigen(c.alpha), be = as_eigen(c.beta);
        CHECK((b->phi() * be - a).norm() < 1e-9);
        CHECK((b->phi_hat() * a - be).norm() < 1e-9);
        CHECK((b->phi() * (b->phi_hat() * a) - a).norm() < 1e-9);
    }
}

TEST_CASE("basis cache returns one shared entry per N")
{
    CHECK(basis_matrices(12).get() == basis_matrices(12).get());
    CHECK(basis_matrices(12).get() != basis_matrices(13).get());
    CHECK(basis_matrices(12)->n() == 12);
}

TEST_CASE("eigenvalues")
{
    CHECK(std::abs(eigenvalue(4, 1, 4) - 1.0) < 1e-15);
    CHECK(std::abs(eigenvalue(1, 1, 4) - Complex(0.0, -1.0)) < 1e-15);
    CHECK(std::abs(eigenvalue_hat(4, 1, 4) - std::exp(Complex(0.0, -2.0 * std::numbers::pi * 9.0 / 8.0))) < 1e-15);
    CHECK(std::abs(eigenvalue(3, 0, 7) - 1.0) < 1e-15);
    // large lags reduce exactly
    CHECK(std::abs(eigenvalue(5, 7000001, 7) - eigenvalue(5, 1, 7)) < 1e-15);
}

TEST_CASE("the six eigenvalue orthogonality sums")
{
    for (std::size_t n : {4u, 16u, 31u}) {
        const double nd = double(n);
        for (int m = 1; m <= int(n); ++m)
            for (int mp = 1; mp <= int(n); ++mp) {
                Complex s[6]{};
                for (long l = 0; l < long(n); ++l) {
                    s[0] += eigenvalue(m, l, n) * std::conj(eigenvalue(mp, l, n));
                    s[1] += eigenvalue_hat(m, l, n) * std::conj(eigenvalue_hat(mp, l, n));
                    s[2] += eigenvalue(m, l + 1, n) * std::conj(eigenvalue(mp, l + 1, n));
                    s[3] += eigenvalue_hat(m, l + 1, n) * std::conj(eigenvalue_hat(mp, l + 1, n));
                    s[4] += eigenvalue(m, l, n) * std::conj(eigenvalue(mp, l + 1, n));
                    s[5] += eigenvalue_hat(m, l, n) * std::conj(eigenvalue_hat(mp, l + 1, n));
                }
                const double d = m == mp ? nd : 0.0;
                const Complex ph = std::exp(Complex(0.0, 2.0 * std::numbers::pi * mp / nd));
                const Complex ph_hat = std::exp(Complex(0.0, 2.0 * std::numbers::pi * (mp / nd + 0.5 / nd)));
                for (int q = 0; q < 4; ++q) CHECK(std::abs(s[q] - d) < 1e-9);
                CHECK(std::abs(s[4] - d * ph) < 1e-9);
                CHECK(std::abs(s[5] - d * ph_hat) < 1e-9);
            }
    }
}

TEST_CASE("four-type decomposition on all-ones and random sets")
{
    const SequenceSet ones = generate({Family::all_ones, 4, 1, 0}, 1);
    CHECK(eigen_check(ones, 0, 0, 1, {1, 1}) < 1e-10);
    const auto c = to_spectral(ones);
    CHECK(std::abs(eigen_sum(c[0], c[0], 1, {1, 1}) - 4.0) < 1e-10);

    for (std::size_t n : {2u, 5u, 8u, 17u}) {
        const SequenceSet set = generate({Family::random_phase, n, 1, 3 * n}, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t k = 0; k < 3; ++k)
                for (long l = 0; l <= long(n); ++l)
                    for (const BitPair bits : kAllBitPairs) CHECK(eigen_check(set, i, k, l, bits) < 1e-9);
    }
    CHECK_THROWS_AS(eigen_check(ones, 0, 0, 5, {1, 1}), std::out_of_range);
}

TEST_CASE("tolerance scaling")
{
    CHECK(scaled_tolerance(1e-9, 64) == 1e-9);
    CHECK(scaled_tolerance(1e-9, 256) == 1e-9);
    CHECK(scaled_tolerance(1e-9, 512) == Catch::Approx(2e-9));
}
