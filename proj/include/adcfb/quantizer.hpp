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

#ifndef ADCFB_QUANTIZER_HPP
#define ADCFB_QUANTIZER_HPP

#include "adcfb/numerics.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

namespace adcfb
{
    /// One row of the optimum uniform quantizer table for a zero-mean,
    /// unit-variance Gaussian input.
    struct AdcSpec
    {
        int bits;        ///< 1..8
        double stepsize; ///< Delta_b for unit input power
        double nmse;     ///< eta_b

        double bussgang_gain() const { return 1.0 - nmse; }
        int levels() const { return 1 << bits; }
    };

    constexpr int min_adc_bits = 1;
    constexpr int max_adc_bits = 8;

    /// Table row for b in 1..8 (b = 1 from the closed forms (pi-2)/pi and sqrt(8/pi)).
    AdcSpec adc_spec(int bits);

    /// ADC resolution as used by the rate formulas: b in 1..8, or infinite
    /// resolution (eta = 0, no quantization).
    class AdcResolution
    {
    public:
        static AdcResolution finite(int bits);
        static AdcResolution infinite() { return AdcResolution(); }

        bool is_infinite() const { return !bits_.has_value(); }
        int bits() const;
        double nmse() const;
        double bussgang_gain() const { return 1.0 - nmse(); }
        AdcSpec spec() const { return adc_spec(bits()); }
        std::string to_string() const;

        friend bool operator==(const AdcResolution &, const AdcResolution &) = default;

    private:
        AdcResolution() = default;
        explicit AdcResolution(int bits) : bits_(bits) {}
        std::optional<int> bits_;
    };

    /// Mid-rise uniform quantization of one real component with step `step`:
    /// sign(x) (min(ceil(|x| / step), 2^(b-1)) - 1/2) step, with sign(0) = +1.
    double quantize_component(double x, double step, int bits);

    /// b-bit quantization of the real and imaginary parts of `x` with steps
    /// Delta_b sqrt(re_power) and Delta_b sqrt(im_power).
    cplx quantize(cplx x, const AdcSpec &spec, double re_power, double im_power);

    /// 1-bit special case: sign(Re x) sqrt(2/pi) sqrt(re_power) + j sign(Im x) sqrt(2/pi) sqrt(im_power).
    cplx quantize_one_bit(cplx x, double re_power, double im_power);

    /// Monte Carlo E|Q(x) - x|^2 / E|x|^2 over CN(0, 1) input.
    double estimate_nmse(const AdcSpec &spec, std::size_t num_samples, std::uint64_t seed);
    double estimate_nmse(int bits, std::size_t num_samples, std::uint64_t seed);

    /// Bussgang quantization-noise variance eta_b (1 - eta_b) E|y|^2.
    double quantization_noise_variance(const AdcSpec &spec, double input_power);

    /// Moments of the mid-rise quantizer with step Delta_b on a real N(0, 1) input.
    struct QuantizerMoments
    {
        double correlation; ///< E[x Q(x)]
        double power;       ///< E[Q(x)^2]
        double distortion;  ///< E[(Q(x) - x)^2]
    };

    QuantizerMoments uniform_quantizer_moments(const AdcSpec &spec);

    /// Linear gain E[r y^*] / E|y|^2 of the quantizer output rescaled to power
    /// (1 - eta_b) E|y|^2, i.e. sqrt((1 - eta_b) E[xQ]^2 / E[Q^2]). Equals
    /// 1 - eta_b for b = 1; for b >= 2 the table NMSE is below the distortion of
    /// the uniform quantizer and the two differ slightly.
    double output_linear_gain(const AdcSpec &spec);

} // namespace adcfb

#endif
