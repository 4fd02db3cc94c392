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

#include "adcfb/quantizer.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

namespace adcfb
{
    namespace
    {
        constexpr double pi = std::numbers::pi;

        // Table values for b = 2..8 as printed; b = 1 is filled from closed forms.
        constexpr std::array<double, 8> table_nmse = {
            (pi - 2.0) / pi, 0.1175, 0.03454, 0.009497, 0.002499, 0.0006642, 0.0001660, 0.00004151};
        const std::array<double, 8> table_step = {
            std::sqrt(8.0 / pi), 0.9957, 0.586, 0.3352, 0.1881, 0.1041, 0.0569, 0.0308};

        void check_powers(double re_power, double im_power)
        {
            if (!(re_power > 0.0 && im_power > 0.0))
                throw std::invalid_argument("quantize: per-component powers must be positive");
        }
    } // namespace

    AdcSpec adc_spec(int bits)
    {
        if (bits < min_adc_bits || bits > max_adc_bits)
            throw std::invalid_argument("adc_spec: resolution must be between 1 and 8 bits");
        const auto i = static_cast<std::size_t>(bits - 1);
        return {bits, table_step[i], table_nmse[i]};
    }

    AdcResolution AdcResolution::finite(int bits)
    {
        (void)adc_spec(bits);
        return AdcResolution(bits);
    }

    int AdcResolution::bits() const
    {
        if (!bits_)
            throw std::logic_error("AdcResolution: infinite resolution has no bit count");
        return *bits_;
    }

    double AdcResolution::nmse() const
    {
        return bits_ ? adc_spec(*bits_).nmse : 0.0;
    }

    std::string AdcResolution::to_string() const
    {
        return bits_ ? std::to_string(*bits_) : std::string("inf");
    }

    double quantize_component(double x, double step, int bits)
    {
        const double sign = std::signbit(x) && x != 0.0 ? -1.0 : 1.0;
        const double top = std::ldexp(1.0, bits - 1);
        double cell = std::ceil(std::abs(x) / step);
        // |x| = 0 falls in the first cell
        cell = std::clamp(cell, 1.0, top);
        return sign * (cell - 0.5) * step;
    }

    cplx quantize(cplx x, const AdcSpec &spec, double re_power, double im_power)
    {
        check_powers(re_power, im_power);
        const double step_re = spec.stepsize * std::sqrt(re_power);
        const double step_im = spec.stepsize * std::sqrt(im_power);
        return {quantize_component(x.real(), step_re, spec.bits),
                quantize_component(x.imag(), step_im, spec.bits)};
    }

    cplx quantize_one_bit(cplx x, double re_power, double im_power)
    {
        check_powers(re_power, im_power);
        const double a = std::sqrt(2.0 / pi);
        const double re = (std::signbit(x.real()) && x.real() != 0.0) ? -1.0 : 1.0;
        const double im = (std::signbit(x.imag()) && x.imag() != 0.0) ? -1.0 : 1.0;
        return {re * a * std::sqrt(re_power), im * a * std::sqrt(im_power)};
    }

    double estimate_nmse(const AdcSpec &spec, std::size_t num_samples, std::uint64_t seed)
    {
        if (num_samples < 10000)
            throw std::invalid_argument("estimate_nmse: at least 10^4 samples required");
        RngStream rng(seed, 0);
        double err = 0.0;
        double pow = 0.0;
        for (std::size_t i = 0; i < num_samples; ++i)
        {
            const cplx x = rng.complex_gaussian();
            err += std::norm(quantize(x, spec, 0.5, 0.5) - x);
            pow += std::norm(x);
        }
        return err / pow;
    }

    double estimate_nmse(int bits, std::size_t num_samples, std::uint64_t seed)
    {
        return estimate_nmse(adc_spec(bits), num_samples, seed);
    }

    double quantization_noise_variance(const AdcSpec &spec, double input_power)
    {
        if (input_power < 0.0)
            throw std::invalid_argument("quantization_noise_variance: negative input power");
        return spec.nmse * (1.0 - spec.nmse) * input_power;
    }

    QuantizerMoments uniform_quantizer_moments(const AdcSpec &spec)
    {
        const double step = spec.stepsize;
        const int half = spec.levels() / 2;
        const double pdf0 = 1.0 / std::sqrt(2.0 * pi);
        // Stein: E[x Q(x)] = E[Q'(x)] = Delta * sum of the density over the thresholds
        double correlation = pdf0;
        double power = 0.0;
        for (int j = 1; j <= half; ++j)
        {
            if (j < half)
                correlation += 2.0 * pdf0 * std::exp(-0.5 * j * step * j * step);
            const double upper = j < half ? normal_cdf(j * step) : 1.0;
            const double level = (j - 0.5) * step;
            power += 2.0 * level * level * (upper - normal_cdf((j - 1) * step));
        }
        correlation *= step;
        return {correlation, power, 1.0 - 2.0 * correlation + power};
    }

    double output_linear_gain(const AdcSpec &spec)
    {
        if (spec.bits == 1)
            return spec.bussgang_gain();
        const QuantizerMoments m = uniform_quantizer_moments(spec);
        return std::sqrt(spec.bussgang_gain() / m.power) * m.correlation;
    }

} // namespace adcfb
