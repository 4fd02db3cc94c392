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

#include "adcfb/codebook.hpp"
#include "adcfb/quantizer.hpp"
#include "adcfb/rate.hpp"

#include <catch_amalgamated.hpp>

#include <Eigen/Cholesky>
#include <Eigen/LU>

#include <array>
#include <cmath>
#include <numbers>

using namespace adcfb;
using Catch::Approx;

namespace
{
    constexpr double pi = std::numbers::pi;

    // Mutual information of y = sqrt(gamma) z e^{-j psi} x + n with diagonal QPSK x,
    // n ~ CN(0, 1) and sign detection on both rails, from the 4 x 4 transition matrix.
    double brute_force_one_bit_mi(double gamma, cplx z, double psi)
    {
        const std::array<cplx, 4> x = {cplx(1, 1), cplx(-1, 1), cplx(-1, -1), cplx(1, -1)};
        std::array<std::array<double, 4>, 4> p{};
        for (int i = 0; i < 4; ++i)
        {
            const cplx m = std::sqrt(gamma) * z * std::polar(1.0, -psi) * x[i] / std::sqrt(2.0);
            // each rail has noise variance 1/2
            const double pr = 0.5 * std::erfc(-m.real() / std::sqrt(0.5) / std::sqrt(2.0));
            const double pi_ = 0.5 * std::erfc(-m.imag() / std::sqrt(0.5) / std::sqrt(2.0));
            p[i] = {pr * pi_, (1 - pr) * pi_, (1 - pr) * (1 - pi_), pr * (1 - pi_)};
        }
        double mi = 0.0;
        for (int j = 0; j < 4; ++j)
        {
            double py = 0.0;
            for (int i = 0; i < 4; ++i)
                py += 0.25 * p[i][j];
            for (int i = 0; i < 4; ++i)
                if (p[i][j] > 0)
                    mi += 0.25 * p[i][j] * std::log2(p[i][j] / py);
        }
        return mi;
    }

    double reduce(double a)
    {
        double r = std::fmod(a, pi / 2);
        return r < 0 ? r + pi / 2 : r;
    }
} // namespace

TEST_CASE("one-bit rates equal the brute-force 4x4 mutual information")
{
    RngStream rng(1, 0);
    for (int t = 0; t < 100; ++t)
    {
        const double gamma = db_to_linear(-10.0 + 40.0 * rng.uniform());
        const cplx z = rng.complex_gaussian();
        const int bits = t % 4;
        const PhaseQuantization q = quantize_residual_phase(std::arg(z), phase_codebook(bits));
        const double theta = q.codeword - reduce(std::arg(z));
        const double ref = brute_force_one_bit_mi(gamma, z, q.codeword);
        CHECK(rate_siso_1bit(gamma * std::norm(z), theta) == Approx(ref).margin(1e-9));

        const CVector h = sample_complex_gaussian(rng, 4);
        const CVector v = sample_complex_gaussian(rng, 4).normalized();
        const cplx zz = h.dot(v);
        const PhaseQuantization qq = quantize_residual_phase(std::arg(zz), phase_codebook(bits));
        const double th = qq.codeword - reduce(std::arg(zz));
        CHECK(rate_miso_1bit(gamma, h, v, th) == Approx(brute_force_one_bit_mi(gamma, zz, qq.codeword)).margin(1e-9));
    }
}

TEST_CASE("one-bit rate limits and lower bound")
{
    CHECK(rate_siso_1bit(0.0, 0.3) == 0.0);
    CHECK(rate_siso_1bit(1e6, 0.0) == Approx(2.0).margin(1e-12));
    CHECK(rate_siso_1bit(std::numeric_limits<double>::infinity(), 0.1) == 2.0);
    // at theta = pi/4 one rail carries all the signal
    CHECK(rate_siso_1bit(1e6, pi / 4) == Approx(1.0).margin(1e-9));
    for (double s : {0.1, 1.0, 10.0})
        for (double th : {0.0, 0.2, 0.7})
            CHECK(rate_siso_1bit_lower_bound(s, th) <= rate_siso_1bit(s, th) + 1e-15);
    CHECK_THROWS_AS(rate_siso_1bit(1.0, 0.8), std::invalid_argument);
    CHECK_THROWS_AS(rate_siso_1bit(-1.0, 0.0), std::invalid_argument);
}

TEST_CASE("rates are monotone in SNR and feedback bits")
{
    const AdcResolution b2 = AdcResolution::finite(2);
    double prev_siso = -1, prev_multi = -1, prev_rvq = -1, prev_mu = -1, prev_mu_rvq = -1;
    for (double db = -30.0; db <= 50.0; db += 0.5)
    {
        const double g = db_to_linear(db);
        const double a = rate_siso_1bit(g, 0.3);
        const double b = rate_miso_multibit(g, 3.0, b2);
        const double c = rate_miso_multibit_rvq_bound(g, 8, FeedbackBits::finite(6), b2);
        const double d = rate_mu_zf_csit_bound(g, 4, 2, b2);
        const double e = rate_mu_zf_rvq_bound(g, 4, 2, FeedbackBits::finite(6), b2);
        CHECK(a >= prev_siso);
        CHECK(b >= prev_multi);
        CHECK(c >= prev_rvq);
        CHECK(d >= prev_mu);
        CHECK(e >= prev_mu_rvq - 1e-12);
        prev_siso = a, prev_multi = b, prev_rvq = c, prev_mu = d, prev_mu_rvq = e;
    }
    for (double g : {0.1, 1.0, 100.0})
    {
        double p1 = -1, p2 = -1, p3 = -1;
        for (int bits = 0; bits <= 40; ++bits)
        {
            const FeedbackBits fb = FeedbackBits::finite(bits);
            const double r1 = rate_miso_multibit_rvq_bound(g, 4, fb, b2);
            const double r2 = rate_mu_zf_rvq_bound(g, 4, 2, fb, b2);
            const double r3 = rate_siso_1bit(g, phase_codebook(bits % 20).max_error());
            CHECK(r1 >= p1);
            CHECK(r2 >= p2);
            if (bits < 20)
                CHECK(r3 >= p3);
            p1 = r1, p2 = r2, p3 = bits < 20 ? r3 : p3;
        }
        CHECK(p1 <= rate_miso_multibit_rvq_bound(g, 4, FeedbackBits::perfect(), b2) + 1e-12);
    }
}

TEST_CASE("multi-bit MISO rate")
{
    const double eta2 = adc_spec(2).nmse;
    CHECK(rate_miso_multibit(1e12, 16.0, AdcResolution::finite(2)) == Approx(std::log2(1.0 / eta2)).epsilon(1e-9));
    CHECK(rate_miso_multibit(3.0, 2.0, AdcResolution::infinite()) == Approx(std::log2(7.0)).epsilon(1e-14));
    const double g = 2.0, gain = 4.0, eta = adc_spec(3).nmse;
    CHECK(rate_miso_multibit(g, gain, AdcResolution::finite(3)) ==
          Approx(std::log2(1 + (1 - eta) * g * gain / (eta * g * gain + 1))).epsilon(1e-14));
    // the beta plug-in sits above the closed-form lower bound
    for (int bits = 1; bits <= 20; ++bits)
        CHECK(rate_miso_multibit_rvq_bound(1.0, 4, FeedbackBits::finite(bits), AdcResolution::finite(2), RvqBound::beta) >
              rate_miso_multibit_rvq_bound(1.0, 4, FeedbackBits::finite(bits), AdcResolution::finite(2)));
    CHECK_THROWS_AS(rate_miso_multibit(-1.0, 1.0, AdcResolution::finite(2)), std::invalid_argument);
}

TEST_CASE("MIMO exact bound reduces to the SQNR rate for one receive antenna")
{
    RngStream rng(2, 0);
    for (int b = 1; b <= 4; ++b)
    {
        const AdcResolution adc = AdcResolution::finite(b);
        const double eta = adc.nmse();
        const CMatrix h = sample_complex_gaussian(rng, 1, 4);
        const CVector v = sample_complex_gaussian(rng, 4).normalized();
        const double g = 3.0;
        const double s = g * (h * v).squaredNorm();
        const double ref = std::log2(1 + (1 - eta) * s / (eta * s + 1));
        CHECK(rate_mimo_exact(h, v, g, adc) == Approx(ref).epsilon(1e-10));
        CHECK(rate_mimo_approx(h, v, g, adc) == Approx(ref).epsilon(1e-10));
    }
}

TEST_CASE("MIMO approximate bound matches its closed form")
{
    RngStream rng(3, 0);
    const AdcResolution adc = AdcResolution::finite(2);
    const double eta = adc.nmse();
    for (int t = 0; t < 20; ++t)
    {
        const CMatrix h = sample_complex_gaussian(rng, 4, 8);
        const CVector v = sample_complex_gaussian(rng, 8).normalized();
        const double g = db_to_linear(-10.0 + 2.0 * t);
        const CVector hv = h * v;
        CMatrix a = CMatrix::Identity(4, 4);
        for (int i = 0; i < 4; ++i)
            a(i, i) += eta * g * std::norm(hv(i));
        const double q = hv.dot(a.partialPivLu().solve(hv)).real();
        CHECK(rate_mimo_approx(h, v, g, adc) == Approx(std::log2(1 + g * (1 - eta) * q)).epsilon(1e-10));
    }
}

TEST_CASE("MIMO exact bound matches a sampled-covariance oracle")
{
    // Quantize samples of y = sqrt(gamma) H v s + n, rescale each output to power
    // (1 - eta) E|y_i|^2, measure the linear gain g = E[r y^*] / E|y|^2 and evaluate
    // log2(1 + gamma g^2 (Hv)^* N^{-1} Hv) with N = C_rr - g^2 gamma H v v^* H^*.
    RngStream rng(4, 0);
    const int nr = 3, nt = 4;
    for (int b : {1, 2, 3})
    {
        const AdcResolution adc = AdcResolution::finite(b);
        const AdcSpec spec = adc.spec();
        const double eta = adc.nmse();
        const CMatrix h = sample_complex_gaussian(rng, nr, nt);
        const CVector v = sample_complex_gaussian(rng, nt).normalized();
        const double g = 0.3;
        const CVector hv = h * v;
        const CMatrix c_yy = g * hv * hv.adjoint() + CMatrix::Identity(nr, nr);
        constexpr int samples = 400000;
        CMatrix acc = CMatrix::Zero(nr, nr);
        CVector cross = CVector::Zero(nr);
        CVector r(nr);
        for (int t = 0; t < samples; ++t)
        {
            const CVector y = std::sqrt(g) * hv * rng.complex_gaussian() + sample_complex_gaussian(rng, nr);
            for (int i = 0; i < nr; ++i)
            {
                const double p = c_yy(i, i).real() / 2;
                r(i) = quantize(y(i), spec, p, p);
                cross(i) += r(i) * std::conj(y(i));
            }
            acc += r * r.adjoint();
        }
        acc /= samples;
        cross /= samples;
        Eigen::VectorXd alpha(nr);
        double num = 0.0, den = 0.0;
        for (int i = 0; i < nr; ++i)
        {
            alpha(i) = std::sqrt((1 - eta) * c_yy(i, i).real() / acc(i, i).real());
            num += alpha(i) * cross(i).real();
            den += c_yy(i, i).real();
        }
        const double gain = num / den;
        const CMatrix c_rr = alpha.asDiagonal() * acc * alpha.asDiagonal();
        const CMatrix n = c_rr - gain * gain * g * hv * hv.adjoint();
        const double q = hv.dot(n.partialPivLu().solve(hv)).real();
        const double ref = std::log2(1 + g * gain * gain * q);
        CHECK(rate_mimo_exact(h, v, g, adc) == Approx(ref).margin(0.01));
        if (b == 1)
            CHECK(gain == Approx(1 - eta).epsilon(0.01));
    }
}

TEST_CASE("MIMO exact bound edge cases")
{
    RngStream rng(5, 0);
    const CMatrix h = sample_complex_gaussian(rng, 2, 4);
    const CVector v = sample_complex_gaussian(rng, 4).normalized();
    CHECK(rate_mimo_exact(h, v, 0.0, AdcResolution::finite(2)) == 0.0);
    CHECK(rate_mimo_exact(h, v, 2.0, AdcResolution::infinite()) == Approx(std::log2(1 + 2.0 * (h * v).squaredNorm())));
    const CorrelationMap map3(3, 257);
    CHECK_THROWS_AS(rate_mimo_exact(h, v, 1.0, AdcResolution::finite(2), MimoNoiseModel::power_consistent, &map3),
                    std::invalid_argument);
    // the two noise models coincide at gamma = 1
    CHECK(rate_mimo_exact(h, v, 1.0, AdcResolution::finite(2), MimoNoiseModel::as_printed) ==
          Approx(rate_mimo_exact(h, v, 1.0, AdcResolution::finite(2))).epsilon(1e-12));
}

TEST_CASE("multi-user ZF rates")
{
    RngStream rng(6, 0);
    const AdcResolution adc = AdcResolution::finite(3);
    const double eta = adc.nmse();
    const CMatrix h = sample_complex_gaussian(rng, 2, 4);
    CMatrix hhat(2, 4);
    for (int k = 0; k < 2; ++k)
        hhat.row(k) = h.row(k).normalized();
    const CMatrix v = zf_precoder(hhat);
    const double rho = 5.0;
    const MuRates r = rate_mu_zf(h, v, rho, adc);
    REQUIRE(r.per_user.size() == 2);
    for (int k = 0; k < 2; ++k)
    {
        const double s = rho * std::norm((h.row(k) * v.col(k))(0));
        CHECK(r.interference[k] == Approx(0.0).margin(1e-12));
        CHECK(r.per_user[k] == Approx(std::log2(1 + (1 - eta) * s / (eta * s + 1))).epsilon(1e-12));
    }
    CHECK(r.sum() == Approx(r.per_user[0] + r.per_user[1]));
    CHECK(r.mean() == Approx(r.sum() / 2));

    // interference appears with imperfect directions
    const CMatrix v2 = zf_precoder(hhat + 0.3 * sample_complex_gaussian(rng, 2, 4));
    const MuRates r2 = rate_mu_zf(h, v2, rho, adc);
    CHECK(r2.interference[0] > 0.0);
}

TEST_CASE("power and rate loss bounds")
{
    const PhasePowerLoss p1 = bound_phase_power_loss(1);
    CHECK(p1.worst_case == Approx(1 - std::sin(pi / 4)).epsilon(1e-14));
    CHECK(p1.average == Approx(1 - std::pow(std::sin(pi / 8), 2) / (pi / 8)).epsilon(1e-14));
    for (int bits = 0; bits <= 10; ++bits)
    {
        const PhasePowerLoss p = bound_phase_power_loss(bits);
        // the exact average 1 - E sin 2|theta| lies above the loose 1 - 2^-B bound
        CHECK(p.average >= 1 - std::ldexp(1.0, -bits) - 1e-15);
        CHECK(p.worst_case <= p.average);
        CHECK(p.average_db() <= 0.0);
    }
    // direction times phase
    CHECK(bound_miso_power_loss(FeedbackBits::finite(3), FeedbackBits::finite(1), 4) ==
          Approx((1 - std::exp2(-1.0)) * 0.5).epsilon(1e-14));
    CHECK(bound_miso_power_loss(FeedbackBits::perfect(), FeedbackBits::perfect(), 4) == 1.0);

    // H_b(Q(sqrt(delta))) = epsilon, about 5 for epsilon = 0.1
    const double delta = rate_loss_snr_threshold(0.1);
    CHECK(binary_entropy(q_function(std::sqrt(delta))) == Approx(0.1).margin(1e-9));
    CHECK(delta == Approx(5.0).margin(0.3));

    // B1 = B2 = 1 with four antennas meets the 0.2 bit target from about 11 dB
    CHECK_FALSE(check_miso_feedback_requirement(FeedbackBits::finite(1), FeedbackBits::finite(1), 4,
                                                db_to_linear(10.0)).satisfied);
    CHECK(check_miso_feedback_requirement(FeedbackBits::finite(1), FeedbackBits::finite(1), 4, db_to_linear(11.0))
              .satisfied);
}

TEST_CASE("multi-user rate loss bound")
{
    const double want[] = {-1.25, -0.28, -0.07};
    int i = 0;
    for (auto [b, bits] : {std::pair{3, 6}, {4, 12}, {5, 18}})
    {
        const MuRateLoss l = bound_mu_rate_loss(AdcResolution::finite(b), FeedbackBits::finite(bits), 4, 2, 0.01);
        const double r = std::exp2(-bits / 3.0);
        CHECK(l.c1 == Approx(3 * (1 - r)).epsilon(1e-14));
        CHECK(l.c2 == Approx(4.0 / 3.0 * r).epsilon(1e-14));
        CHECK(l.low_snr_power_loss_db == Approx(want[i++]).margin(0.006));
        const double eta = adc_spec(b).nmse;
        CHECK(l.high_snr_loss == Approx(std::log2(1 + (1 - eta) / eta / (l.c1 / l.c2 + 1))).epsilon(1e-14));
        CHECK(l.loss >= 0.0);
    }
    CHECK(bound_mu_rate_loss(AdcResolution::infinite(), FeedbackBits::finite(6), 4, 2, 1.0).high_snr_loss ==
          std::numeric_limits<double>::infinity());
}

TEST_CASE("feedback scaling rule")
{
    const FeedbackScaling s = feedback_bits_for_rate_loss(4, 4);
    CHECK(s.slope == 6.0);
    CHECK(s.approximation_ok);
    CHECK(s.feedback_bits(-12.0) == 12.0);
    CHECK_FALSE(feedback_bits_for_rate_loss(2, 4).approximation_ok);
    // constant along B = 2 (Nt - 1) b + c
    CHECK(scaling_exponent(3, 6.0, 4) == Approx(scaling_exponent(5, 18.0, 4)).epsilon(1e-14));
    CHECK(scaling_exponent(3, 6.0, 4) == Approx(16.0).epsilon(1e-14));
}

TEST_CASE("FeedbackBits")
{
    CHECK(FeedbackBits::perfect().is_perfect());
    CHECK(FeedbackBits::perfect().rvq_residual(4) == 0.0);
    CHECK(FeedbackBits::finite(6).rvq_residual(4) == Approx(0.25));
    CHECK(FeedbackBits::finite(6).to_string() == "6");
    CHECK_THROWS_AS(FeedbackBits::finite(-1), std::invalid_argument);
    CHECK_THROWS_AS(FeedbackBits::finite(63), std::invalid_argument);
}
