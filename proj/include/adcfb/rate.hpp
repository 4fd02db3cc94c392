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

#ifndef ADCFB_RATE_HPP
#define ADCFB_RATE_HPP

#include "adcfb/correlation.hpp"
#include "adcfb/numerics.hpp"
#include "adcfb/quantizer.hpp"

#include <optional>
#include <string>
#include <vector>

namespace adcfb
{
    // All rates are in bits/s/Hz with the noise variance normalized to one, so
    // SNR enters only through gamma = Pt / sigma_n^2 (or rho = gamma / K).

    /// Number of feedback bits, or perfect CSIT (B = infinity).
    class FeedbackBits
    {
    public:
        static FeedbackBits finite(int bits);
        static FeedbackBits perfect() { return FeedbackBits(); }

        bool is_perfect() const { return !bits_.has_value(); }
        int bits() const;
        std::string to_string() const;

        /// 2^(-B / (Nt - 1)), zero for perfect CSIT.
        double rvq_residual(int nt) const;

        friend bool operator==(const FeedbackBits &, const FeedbackBits &) = default;

    private:
        FeedbackBits() = default;
        explicit FeedbackBits(int bits) : bits_(bits) {}
        std::optional<int> bits_;
    };

    // ---- 1-bit ADCs, QPSK signalling ------------------------------------

    /// 2 - H_b(Q(sqrt(s (1 - sin 2 theta)))) - H_b(Q(sqrt(s (1 + sin 2 theta))))
    /// for effective SNR s = gamma |h|^2 and residual phase error |theta| <= pi/4.
    double rate_siso_1bit(double snr_eff, double theta);

    /// 2 (1 - H_b(Q(sqrt(s (1 - sin 2|theta|))))), a lower bound on rate_siso_1bit.
    double rate_siso_1bit_lower_bound(double snr_eff, double theta);

    /// rate_siso_1bit at s = gamma |h^* v|^2 (that is gamma |h|^2 cos^2 beta). `v` must have unit norm.
    double rate_miso_1bit(double gamma, const CVector &h, const CVector &v, double theta);

    // ---- multi-bit ADCs, Gaussian signalling -----------------------------

    /// log2(1 + SQNR) with SQNR = (1 - eta) gamma g / (eta gamma g + 1), g = |h^* v|^2.
    double rate_miso_multibit(double gamma, double gain, AdcResolution adc);

    /// Closed-form RVQ bounds on the average MISO rate.
    enum class RvqBound
    {
        closed_form, ///< alignment 1 - 2^(-B/(Nt-1)): a lower bound
        beta         ///< alignment 1 - 2^B beta(2^B, Nt/(Nt-1)): the plug-in approximation
    };

    /// rate_miso_multibit at the mean gain Nt times the RVQ alignment term.
    /// For perfect CSIT both forms give the Jensen bound at gain Nt.
    double rate_miso_multibit_rvq_bound(double gamma, int nt, FeedbackBits bits, AdcResolution adc,
                                        RvqBound form = RvqBound::closed_form);

    // ---- MIMO, single-stream beamforming ----------------------------------

    /// Effective noise covariance used by rate_mimo_exact.
    enum class MimoNoiseModel
    {
        power_consistent, ///< C_rr - (1 - eta)^2 gamma H v v^* H^*   (C_QQ + (1 - eta)^2 I for b = 1)
        as_printed        ///< C_rr - (1 - eta)^2 H v v^* H^*         (comparison only)
    };

    /// log2(1 + gamma (1 - eta)^2 v^* H^* N^{-1} H v) with C_yy = gamma H v v^* H^* + I,
    /// C_rr from the exact quantized covariance and N chosen by `model`. Passing
    /// `map` replaces the direct f evaluation with a tabulated one of the same
    /// resolution. Infinite resolution returns log2(1 + gamma |H v|^2).
    double rate_mimo_exact(const CMatrix &h, const CVector &v, double gamma, AdcResolution adc,
                           MimoNoiseModel model = MimoNoiseModel::power_consistent,
                           const CorrelationMap *map = nullptr);

    /// log2(1 + sum_i (1 - eta) gamma |h_i^* v|^2 / (eta gamma |h_i^* v|^2 + 1)).
    double rate_mimo_approx(const CMatrix &h, const CVector &v, double gamma, AdcResolution adc);

    // ---- multi-user MISO, zero forcing ------------------------------------

    struct MuRates
    {
        std::vector<double> per_user;
        /// sum_{i != k} |h_k^* v_i|^2 for each user k
        std::vector<double> interference;

        double mean() const;
        double sum() const;
    };

    /// Per-user SIQNR rates. Row k of `h` is h_k^* (K x Nt), column k of `v` is
    /// the unit beamformer of user k (Nt x K), rho = gamma / K.
    MuRates rate_mu_zf(const CMatrix &h, const CMatrix &v, double rho, AdcResolution adc);

    /// Jensen bound on the perfect-CSIT ZF per-user rate, gain Nt - K + 1.
    double rate_mu_zf_csit_bound(double rho, int nt, int users, AdcResolution adc);

    /// Per-user ZF rate under RVQ feedback at the mean signal and interference
    /// powers. closed_form gives the lower bound with 2^(-B/(Nt-1)); beta the
    /// plug-in approximation with 2^B beta(2^B, Nt/(Nt-1)).
    double rate_mu_zf_rvq_bound(double rho, int nt, int users, FeedbackBits bits, AdcResolution adc,
                                RvqBound form = RvqBound::closed_form);

    // ---- power and rate loss bounds ---------------------------------------

    struct PhasePowerLoss
    {
        double worst_case; ///< 1 - sin(pi / 2^(B+1))
        double average;    ///< 1 - sin^2(pi / 2^(B+2)) / (pi / 2^(B+2))

        double worst_case_db() const { return linear_to_db(worst_case); }
        double average_db() const { return linear_to_db(average); }
    };

    PhasePowerLoss bound_phase_power_loss(int bits);

    /// (1 - 2^(-B1/(Nt-1))) (1 - 2^(-B2)), linear scale.
    double bound_miso_power_loss(FeedbackBits b1, FeedbackBits b2, int nt);

    /// delta with H_b(Q(sqrt(delta))) = epsilon, by bisection on [0, 40].
    double rate_loss_snr_threshold(double epsilon);

    struct FeedbackRequirement
    {
        double epsilon;  ///< per-component entropy target, total loss at most 2 epsilon
        double delta;    ///< rate_loss_snr_threshold(epsilon)
        double bound;    ///< bound_miso_power_loss(B1, B2, Nt)
        double required; ///< delta / (gamma Nt)
        bool satisfied;  ///< bound >= required
    };

    /// Checks the sufficient condition for the 1-bit MISO rate loss to stay at
    /// or below 2 epsilon. The default epsilon = 0.1 gives delta close to 5.
    FeedbackRequirement check_miso_feedback_requirement(FeedbackBits b1, FeedbackBits b2, int nt, double gamma,
                                                        double epsilon = 0.1);

    struct MuRateLoss
    {
        double c1;                    ///< (Nt - K + 1)(1 - 2^(-B/(Nt-1)))
        double c2;                    ///< (K - 1) Nt / (Nt - 1) 2^(-B/(Nt-1))
        double loss;                  ///< CSIT bound minus RVQ lower bound at rho
        double high_snr_loss;         ///< log2(1 + (1 - eta)/eta / (C1/C2 + 1))
        double low_snr_power_loss_db; ///< 10 log10(1 - 2^(-B/(Nt-1)))
    };

    MuRateLoss bound_mu_rate_loss(AdcResolution adc, FeedbackBits bits, int nt, int users, double rho);

    /// Linear feedback scaling rule B = 2 (Nt - 1) b + c that keeps the
    /// high-SNR multi-user rate loss roughly constant.
    struct FeedbackScaling
    {
        int adc_bits;
        int nt;
        double slope;           ///< 2 (Nt - 1) feedback bits per ADC bit
        bool approximation_ok;  ///< false for b < 3, where eta_b ~ (pi sqrt 3 / 2) 4^-b is poor

        /// 2 (Nt - 1) b + anchor.
        double feedback_bits(double anchor) const { return slope * adc_bits + anchor; }
    };

    FeedbackScaling feedback_bits_for_rate_loss(int adc_bits, int nt);

    /// 2^(2 (b - B / (2 (Nt - 1)))), constant along the scaling rule.
    double scaling_exponent(int adc_bits, double feedback_bits, int nt);

} // namespace adcfb

#endif
