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

#include "adcfb/rate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

namespace adcfb
{
    namespace
    {
        constexpr double pi = std::numbers::pi;

        void check_gamma(double gamma, const char *what)
        {
            if (!(gamma >= 0.0) || std::isinf(gamma))
                throw std::invalid_argument(std::string(what) + ": SNR must be finite and non-negative");
        }

        void check_nt(int nt, const char *what)
        {
            if (nt < 2)
                throw std::invalid_argument(std::string(what) + ": Nt must be at least 2");
        }

        void check_users(int nt, int users, const char *what)
        {
            check_nt(nt, what);
            if (users < 2 || users > nt)
                throw std::invalid_argument(std::string(what) + ": need 2 <= K <= Nt");
        }

        // H_b(Q(sqrt(x))) with x clamped at zero against rounding.
        double entropy_of_crossing(double x) { return binary_entropy(q_function(std::sqrt(std::max(x, 0.0)))); }

        double sqnr(double gamma, double gain, double eta)
        {
            return (1.0 - eta) * gamma * gain / (eta * gamma * gain + 1.0);
        }

        // Mean |h~^* w|^2 shortfall of the quantized direction, by bound form.
        double residual(FeedbackBits bits, int nt, RvqBound form)
        {
            if (bits.is_perfect())
                return 0.0;
            return form == RvqBound::beta ? rvq_expectation_term(bits.bits(), nt) : bits.rvq_residual(nt);
        }
    } // namespace

    // ---- FeedbackBits -------------------------------------------------------

    FeedbackBits FeedbackBits::finite(int bits)
    {
        if (bits < 0 || bits > 62)
            throw std::invalid_argument("FeedbackBits: bit count must be in 0..62");
        return FeedbackBits(bits);
    }

    int FeedbackBits::bits() const
    {
        if (!bits_)
            throw std::logic_error("FeedbackBits: perfect CSIT has no bit count");
        return *bits_;
    }

    std::string FeedbackBits::to_string() const { return bits_ ? std::to_string(*bits_) : std::string("inf"); }

    double FeedbackBits::rvq_residual(int nt) const
    {
        check_nt(nt, "FeedbackBits::rvq_residual");
        if (!bits_)
            return 0.0;
        return std::exp2(-static_cast<double>(*bits_) / static_cast<double>(nt - 1));
    }

    // ---- 1-bit --------------------------------------------------------------

    double rate_siso_1bit(double snr_eff, double theta)
    {
        if (!(snr_eff >= 0.0))
            throw std::invalid_argument("rate_siso_1bit: effective SNR must be non-negative");
        if (!(std::abs(theta) <= pi / 4.0 + 1e-12))
            throw std::invalid_argument("rate_siso_1bit: phase error must satisfy |theta| <= pi/4");
        if (std::isinf(snr_eff))
            return 2.0;
        const double s2 = std::sin(2.0 * theta);
        const double r = 2.0 - entropy_of_crossing(snr_eff * (1.0 - s2)) - entropy_of_crossing(snr_eff * (1.0 + s2));
        return std::clamp(r, 0.0, 2.0);
    }

    double rate_siso_1bit_lower_bound(double snr_eff, double theta)
    {
        if (!(snr_eff >= 0.0))
            throw std::invalid_argument("rate_siso_1bit_lower_bound: effective SNR must be non-negative");
        if (!(std::abs(theta) <= pi / 4.0 + 1e-12))
            throw std::invalid_argument("rate_siso_1bit_lower_bound: phase error must satisfy |theta| <= pi/4");
        const double r = 2.0 * (1.0 - entropy_of_crossing(snr_eff * (1.0 - std::sin(2.0 * std::abs(theta)))));
        return std::clamp(r, 0.0, 2.0);
    }

    double rate_miso_1bit(double gamma, const CVector &h, const CVector &v, double theta)
    {
        check_gamma(gamma, "rate_miso_1bit");
        if (h.size() != v.size())
            throw std::invalid_argument("rate_miso_1bit: dimension mismatch");
        if (std::abs(v.norm() - 1.0) > 1e-9)
            throw std::invalid_argument("rate_miso_1bit: beamformer must have unit norm");
        return rate_siso_1bit(gamma * std::norm(h.dot(v)), theta);
    }

    // ---- multi-bit ------------------------------------------------------------

    double rate_miso_multibit(double gamma, double gain, AdcResolution adc)
    {
        check_gamma(gamma, "rate_miso_multibit");
        if (!(gain >= 0.0))
            throw std::invalid_argument("rate_miso_multibit: gain must be non-negative");
        return std::log2(1.0 + sqnr(gamma, gain, adc.nmse()));
    }

    double rate_miso_multibit_rvq_bound(double gamma, int nt, FeedbackBits bits, AdcResolution adc, RvqBound form)
    {
        check_nt(nt, "rate_miso_multibit_rvq_bound");
        const double gain = nt * (1.0 - residual(bits, nt, form));
        return rate_miso_multibit(gamma, gain, adc);
    }

    // ---- MIMO -----------------------------------------------------------------

    double rate_mimo_exact(const CMatrix &h, const CVector &v, double gamma, AdcResolution adc,
                           MimoNoiseModel model, const CorrelationMap *map)
    {
        check_gamma(gamma, "rate_mimo_exact");
        if (h.cols() != v.size() || h.rows() == 0)
            throw std::invalid_argument("rate_mimo_exact: dimension mismatch");
        if (std::abs(v.norm() - 1.0) > 1e-9)
            throw std::invalid_argument("rate_mimo_exact: beamformer must have unit norm");
        const CVector hv = h * v;
        if (gamma == 0.0)
            return 0.0;
        if (adc.is_infinite())
            return std::log2(1.0 + gamma * hv.squaredNorm());
        if (map && map->bits() != adc.bits())
            throw std::invalid_argument("rate_mimo_exact: correlation map resolution differs from the ADC");

        const CMatrix signal = hv * hv.adjoint();
        const CMatrix c_yy = gamma * signal + CMatrix::Identity(hv.size(), hv.size());
        const QuantizedCovariance q = map ? quantized_covariance_exact(c_yy, *map)
                                          : quantized_covariance_exact(c_yy, adc.bits());
        const double gain = adc.bussgang_gain();
        const double scale = model == MimoNoiseModel::power_consistent ? gamma : 1.0;
        const CMatrix noise = q.c_rr - gain * gain * scale * signal;
        const double quad = hermitian_quadratic_solve(noise, hv);
        return std::log2(1.0 + gamma * gain * gain * std::max(quad, 0.0));
    }

    double rate_mimo_approx(const CMatrix &h, const CVector &v, double gamma, AdcResolution adc)
    {
        check_gamma(gamma, "rate_mimo_approx");
        if (h.cols() != v.size() || h.rows() == 0)
            throw std::invalid_argument("rate_mimo_approx: dimension mismatch");
        if (std::abs(v.norm() - 1.0) > 1e-9)
            throw std::invalid_argument("rate_mimo_approx: beamformer must have unit norm");
        const Eigen::VectorXd g = (h * v).cwiseAbs2();
        const double eta = adc.nmse();
        double total = 0.0;
        for (Eigen::Index i = 0; i < g.size(); ++i)
            total += sqnr(gamma, g(i), eta);
        return std::log2(1.0 + total);
    }

    // ---- multi-user -------------------------------------------------------------

    double MuRates::mean() const
    {
        return per_user.empty() ? 0.0 : sum() / static_cast<double>(per_user.size());
    }

    double MuRates::sum() const { return std::accumulate(per_user.begin(), per_user.end(), 0.0); }

    MuRates rate_mu_zf(const CMatrix &h, const CMatrix &v, double rho, AdcResolution adc)
    {
        check_gamma(rho, "rate_mu_zf");
        if (h.rows() == 0 || h.cols() != v.rows() || v.cols() != h.rows())
            throw std::invalid_argument("rate_mu_zf: need K x Nt channels and Nt x K beamformers");
        for (Eigen::Index k = 0; k < v.cols(); ++k)
            if (std::abs(v.col(k).norm() - 1.0) > 1e-9)
                throw std::invalid_argument("rate_mu_zf: beamformers must have unit norm");

        const Eigen::MatrixXd power = (h * v).cwiseAbs2(); // (k, i) = |h_k^* v_i|^2
        const double eta = adc.nmse();
        MuRates out;
        out.per_user.reserve(static_cast<std::size_t>(h.rows()));
        out.interference.reserve(static_cast<std::size_t>(h.rows()));
        for (Eigen::Index k = 0; k < h.rows(); ++k)
        {
            const double signal = power(k, k);
            const double interference = power.row(k).sum() - signal;
            const double ratio = (1.0 - eta) * rho * signal / (eta * rho * signal + rho * interference + 1.0);
            out.per_user.push_back(std::log2(1.0 + ratio));
            out.interference.push_back(interference);
        }
        return out;
    }

    double rate_mu_zf_csit_bound(double rho, int nt, int users, AdcResolution adc)
    {
        check_users(nt, users, "rate_mu_zf_csit_bound");
        return rate_miso_multibit(rho, static_cast<double>(nt - users + 1), adc);
    }

    double rate_mu_zf_rvq_bound(double rho, int nt, int users, FeedbackBits bits, AdcResolution adc, RvqBound form)
    {
        check_users(nt, users, "rate_mu_zf_rvq_bound");
        check_gamma(rho, "rate_mu_zf_rvq_bound");
        const double r = residual(bits, nt, form);
        const double eta = adc.nmse();
        const double signal = (nt - users + 1) * (1.0 - r);
        const double interference = (users - 1) * static_cast<double>(nt) / (nt - 1) * r;
        const double ratio = (1.0 - eta) * rho * signal / (eta * rho * signal + rho * interference + 1.0);
        return std::log2(1.0 + ratio);
    }

    // ---- loss bounds --------------------------------------------------------------

    PhasePowerLoss bound_phase_power_loss(int bits)
    {
        if (bits < 0 || bits > 60)
            throw std::invalid_argument("bound_phase_power_loss: bit count must be in 0..60");
        const double half_cell = std::ldexp(pi, -(bits + 2));
        const double s = std::sin(half_cell);
        return {1.0 - std::sin(2.0 * half_cell), 1.0 - s * s / half_cell};
    }

    double bound_miso_power_loss(FeedbackBits b1, FeedbackBits b2, int nt)
    {
        check_nt(nt, "bound_miso_power_loss");
        const double direction = 1.0 - b1.rvq_residual(nt);
        const double phase = b2.is_perfect() ? 1.0 : 1.0 - std::ldexp(1.0, -b2.bits());
        return direction * phase;
    }

    double rate_loss_snr_threshold(double epsilon)
    {
        double lo = 0.0;
        double hi = 40.0;
        if (!(epsilon > entropy_of_crossing(hi) && epsilon < 1.0))
            throw std::invalid_argument("rate_loss_snr_threshold: epsilon outside the bracket of [0, 40]");
        // H_b(Q(sqrt(x))) decreases in x
        while (hi - lo > 1e-10)
        {
            const double mid = 0.5 * (lo + hi);
            if (entropy_of_crossing(mid) > epsilon)
                lo = mid;
            else
                hi = mid;
        }
        return 0.5 * (lo + hi);
    }

    FeedbackRequirement check_miso_feedback_requirement(FeedbackBits b1, FeedbackBits b2, int nt, double gamma,
                                                        double epsilon)
    {
        check_gamma(gamma, "check_miso_feedback_requirement");
        FeedbackRequirement out{};
        out.epsilon = epsilon;
        out.delta = rate_loss_snr_threshold(epsilon);
        out.bound = bound_miso_power_loss(b1, b2, nt);
        out.required = gamma > 0.0 ? out.delta / (gamma * nt) : std::numeric_limits<double>::infinity();
        out.satisfied = out.bound >= out.required;
        return out;
    }

    MuRateLoss bound_mu_rate_loss(AdcResolution adc, FeedbackBits bits, int nt, int users, double rho)
    {
        check_users(nt, users, "bound_mu_rate_loss");
        check_gamma(rho, "bound_mu_rate_loss");
        const double r = bits.rvq_residual(nt);
        const double eta = adc.nmse();
        MuRateLoss out{};
        out.c1 = (nt - users + 1) * (1.0 - r);
        out.c2 = (users - 1) * static_cast<double>(nt) / (nt - 1) * r;
        out.loss = rate_mu_zf_csit_bound(rho, nt, users, adc) - rate_mu_zf_rvq_bound(rho, nt, users, bits, adc);
        if (out.c2 == 0.0)
            out.high_snr_loss = 0.0;
        else if (eta == 0.0)
            out.high_snr_loss = std::numeric_limits<double>::infinity();
        else
            out.high_snr_loss = std::log2(1.0 + (1.0 - eta) / eta / (out.c1 / out.c2 + 1.0));
        out.low_snr_power_loss_db = linear_to_db(1.0 - r);
        return out;
    }

    FeedbackScaling feedback_bits_for_rate_loss(int adc_bits, int nt)
    {
        check_nt(nt, "feedback_bits_for_rate_loss");
        if (adc_bits < 1)
            throw std::invalid_argument("feedback_bits_for_rate_loss: ADC resolution must be positive");
        return {adc_bits, nt, 2.0 * (nt - 1), adc_bits >= 3};
    }

    double scaling_exponent(int adc_bits, double feedback_bits, int nt)
    {
        check_nt(nt, "scaling_exponent");
        return std::exp2(2.0 * (adc_bits - feedback_bits / (2.0 * (nt - 1))));
    }

} // namespace adcfb
