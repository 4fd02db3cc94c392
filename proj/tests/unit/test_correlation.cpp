// SPDX-License-Identifier: Apache-2.0
//
// adcfb: achievable rates of finite-bit ADC links with limited feedback
// Copyright (C) 2026 The adcfb authors
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

#include "adcfb/correlation.hpp"
#include "adcfb/numerics.hpp"
#include "adcfb/quantizer.hpp"
#include "quantizer_oracle.hpp"

#include <catch_amalgamated.hpp>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>

using namespace adcfb;
using Catch::Approx;

namespace
{
    CMatrix random_covariance(RngStream &rng, int n)
    {
        // random rank-one signal plus white noise, with a random power per antenna
        const CMatrix a = sample_complex_gaussian(rng, n, 2);
        CMatrix c = a * a.adjoint() * (3.0 * rng.uniform());
        for (int i = 0; i < n; ++i)
            c(i, i) += 0.2 + rng.uniform();
        return c;
    }
} // namespace

TEST_CASE("one-bit f-map is the arcsine law")
{
    for (int i = 0; i <= 200; ++i)
    {
        const double phi = -1.0 + i * 0.01;
        const double ref = 2.0 / std::numbers::pi * std::asin(std::clamp(phi, -1.0, 1.0));
        CHECK(f_map_numeric(phi, 1) == Approx(ref).margin(1e-6));
        CHECK(f_map(phi, 1) == Approx(ref).margin(1e-15));
    }
}

TEST_CASE("f-map shape")
{
    for (int b = 1; b <= 8; ++b)
    {
        CHECK(f_map(0.0, b) == Approx(0.0).margin(1e-14));
        CHECK(f_map(1.0, b) == 1.0);
        CHECK(f_map(-1.0, b) == -1.0);
        double prev = -1.0;
        for (int i = 1; i < 100; ++i)
        {
            const double phi = -1.0 + 0.02 * i;
            const double f = f_map(phi, b);
            CHECK(f > prev);
            CHECK(std::abs(f) <= 1.0);
            CHECK(f_map(-phi, b) == Approx(-f).margin(1e-13));
            prev = f;
        }
        // slope at the origin is the squared correlation coefficient of x and Q(x)
        const double slope = f_map(1e-4, b) / 1e-4;
        CHECK(slope == Approx(testing::integrate_uniform_quantizer(adc_spec(b).stepsize, b).rho()).epsilon(1e-5));
    }
    CHECK_THROWS_AS(f_map(1.1, 2), std::invalid_argument);
    CHECK_THROWS_AS(f_map(0.5, 9), std::invalid_argument);
}

TEST_CASE("f-map matches the Monte Carlo output correlation")
{
    for (int b : {2, 3})
        for (double phi : {0.3, 0.7, 0.95})
        {
            const AdcSpec s = adc_spec(b);
            RngStream rng(31 + b, static_cast<std::uint64_t>(phi * 100));
            constexpr int n = 400000;
            double sxy = 0.0, sxx = 0.0, syy = 0.0, s2 = 0.0;
            const double c = std::sqrt(1.0 - phi * phi);
            for (int i = 0; i < n; ++i)
            {
                const cplx z = rng.complex_gaussian() * std::sqrt(2.0);
                const double x = z.real(), y = phi * z.real() + c * z.imag();
                const double qx = quantize_component(x, s.stepsize, b);
                const double qy = quantize_component(y, s.stepsize, b);
                sxy += qx * qy;
                s2 += qx * qx * qy * qy;
                sxx += qx * qx;
                syy += qy * qy;
            }
            const double rho = sxy / std::sqrt(sxx * syy);
            const double se = std::sqrt(s2 / n - (sxy / n) * (sxy / n)) / std::sqrt(n) / (sxx / n);
            CHECK(std::abs(rho - f_map(phi, b)) < 5.0 * se);
        }
}

TEST_CASE("CorrelationMap interpolates f")
{
    for (int b : {1, 2, 4, 8})
    {
        const CorrelationMap map(b);
        CHECK(map.bits() == b);
        CHECK(map.grid().size() == 4097);
        RngStream rng(5, b);
        for (int i = 0; i < 500; ++i)
        {
            const double phi = 2.0 * rng.uniform() - 1.0;
            CHECK(map(phi) == Approx(f_map(phi, b)).margin(1e-8));
        }
        CHECK(map(1.0) == Approx(1.0).margin(1e-14));
        CHECK(&correlation_map(b) == &correlation_map(b));
    }
}

TEST_CASE("exact quantized covariance is Hermitian PSD with the Bussgang diagonal")
{
    RngStream rng(77, 0);
    for (int trial = 0; trial < 100; ++trial)
    {
        const int n = 2 + trial % 7;
        const int b = 1 + trial % 8;
        const CMatrix c_yy = random_covariance(rng, n);
        const QuantizedCovariance q = quantized_covariance_exact(c_yy, b);
        CHECK(q.method == CovarianceMethod::exact);
        CHECK(hermitian_defect(q.c_rr) < 1e-12);
        Eigen::SelfAdjointEigenSolver<CMatrix> es(q.c_rr);
        CHECK(es.eigenvalues().minCoeff() > -1e-10 * es.eigenvalues().maxCoeff());
        const double g = 1.0 - adc_spec(b).nmse;
        for (int i = 0; i < n; ++i)
            CHECK(q.c_rr(i, i).real() == Approx(g * c_yy(i, i).real()).epsilon(1e-12));
        // linear gain of the output rescaled to power (1 - eta) E|y|^2
        const double linear = std::sqrt(g * testing::integrate_uniform_quantizer(adc_spec(b).stepsize, b).rho());
        CHECK(q.gain == Approx(linear).epsilon(1e-9));
        CHECK((q.c_qq - (q.c_rr - q.gain * q.gain * c_yy)).norm() < 1e-12);
        Eigen::SelfAdjointEigenSolver<CMatrix> noise(q.c_qq);
        CHECK(noise.eigenvalues().minCoeff() >= -1e-8 * q.c_qq.trace().real());
    }
}

TEST_CASE("exact quantized covariance matches the sample covariance of quantized data")
{
    RngStream rng(3, 0);
    const int n = 3;
    const CMatrix c_yy = random_covariance(rng, n);
    const CMatrix l = c_yy.llt().matrixL();
    for (int b : {1, 2, 3})
    {
        const AdcSpec s = adc_spec(b);
        constexpr int samples = 300000;
        CMatrix acc = CMatrix::Zero(n, n);
        CVector r(n);
        for (int t = 0; t < samples; ++t)
        {
            const CVector y = l * sample_complex_gaussian(rng, n);
            for (int i = 0; i < n; ++i)
            {
                const double p = c_yy(i, i).real() / 2.0;
                r(i) = quantize(y(i), s, p, p);
            }
            acc += r * r.adjoint();
        }
        acc /= samples;
        const CMatrix exact = quantized_covariance_exact(c_yy, b).c_rr;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
            {
                const double scale = std::sqrt(c_yy(i, i).real() * c_yy(j, j).real());
                CHECK(std::abs(acc(i, j) - exact(i, j)) < 0.012 * scale);
            }
    }
}

TEST_CASE("approximate quantized covariance")
{
    RngStream rng(8, 0);
    const CMatrix c_yy = random_covariance(rng, 4);
    double prev_gap = 1e9;
    for (int b = 1; b <= 8; ++b)
    {
        const double g = 1.0 - adc_spec(b).nmse;
        const QuantizedCovariance a = quantized_covariance_approx(c_yy, b);
        CHECK(a.method == CovarianceMethod::approximate);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
            {
                const cplx ref = i == j ? g * c_yy(i, j) : g * g * c_yy(i, j);
                CHECK(std::abs(a.c_rr(i, j) - ref) < 1e-14);
            }
        // the nonlinear remainder of f shrinks with resolution; linearize with the
        // quantizer's own slope so the table-NMSE offset does not enter
        const double rho = testing::integrate_uniform_quantizer(adc_spec(b).stepsize, b).rho();
        CMatrix lin = g * rho * c_yy;
        lin.diagonal() = g * c_yy.diagonal();
        const CMatrix exact = quantized_covariance_exact(c_yy, b).c_rr;
        const double gap = (exact - lin).norm() / c_yy.norm();
        CHECK(gap < prev_gap);
        prev_gap = gap;
        CHECK((exact - a.c_rr).norm() / c_yy.norm() < 0.02);
    }
    CHECK(prev_gap < 1e-4);

    // weakly correlated b = 2 instance: entrywise gap at most 2% of the largest diagonal
    CMatrix weak = CMatrix::Identity(3, 3);
    weak(0, 1) = cplx(0.3, -0.2);
    weak(1, 2) = cplx(-0.25, 0.1);
    weak(0, 2) = cplx(0.1, 0.35);
    weak = symmetrize(weak + weak.adjoint() - CMatrix::Identity(3, 3));
    const CMatrix gap2 = quantized_covariance_exact(weak, 2).c_rr - quantized_covariance_approx(weak, 2).c_rr;
    CHECK(gap2.cwiseAbs().maxCoeff() <= 0.02);
    CHECK_THROWS_AS(quantized_covariance_exact(CMatrix::Zero(2, 2), 2), std::invalid_argument);
}
