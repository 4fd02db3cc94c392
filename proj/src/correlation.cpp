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

#include <algorithm>
#include <array>
#include <cmath>
#include <mutex>
#include <numbers>

namespace adcfb
{
    namespace
    {
        constexpr double unit_correlation_cutoff = 1.0 - 1e-9;

        void check_phi(double phi)
        {
            if (!(std::abs(phi) <= 1.0))
                throw std::invalid_argument("f_map: correlation coefficient outside [-1, 1]");
        }

        std::vector<double> thresholds(const AdcSpec &spec)
        {
            const int half = spec.levels() / 2;
            std::vector<double> t;
            t.reserve(static_cast<std::size_t>(2 * half - 1));
            for (int k = -(half - 1); k <= half - 1; ++k)
                t.push_back(k * spec.stepsize);
            return t;
        }

        // Sum over threshold pairs of E[sgn(x - t_k) sgn(y - t_l)]; symmetric in (k, l).
        double sign_moment_sum(const std::vector<double> &t, const std::vector<double> &cdf, double phi)
        {
            const std::size_t n = t.size();
            double total = 0.0;
            for (std::size_t k = 0; k < n; ++k)
            {
                double row = 0.0;
                for (std::size_t l = k; l < n; ++l)
                {
                    double term = 0.0;
                    if (phi >= 1.0)
                        term = 1.0 - 2.0 * std::abs(cdf[k] - cdf[l]);
                    else
                        term = 1.0 - 2.0 * cdf[k] - 2.0 * cdf[l] + 4.0 * bivariate_normal_cdf(t[k], t[l], phi);
                    row += (l == k) ? term : 2.0 * term;
                }
                total += row;
            }
            return total;
        }
    } // namespace

    double f_map_numeric(double phi, int bits)
    {
        check_phi(phi);
        const AdcSpec spec = adc_spec(bits);
        if (phi >= unit_correlation_cutoff)
            return 1.0;
        if (phi <= -unit_correlation_cutoff)
            return -1.0;
        if (phi == 0.0)
            return 0.0;

        const auto t = thresholds(spec);
        std::vector<double> cdf(t.size());
        std::transform(t.begin(), t.end(), cdf.begin(), normal_cdf);

        // the common (Delta/2)^2 factor cancels in the ratio
        const double raw = sign_moment_sum(t, cdf, phi);
        const double unit = sign_moment_sum(t, cdf, 1.0);
        return std::clamp(raw / unit, -1.0, 1.0);
    }

    double f_map(double phi, int bits)
    {
        check_phi(phi);
        (void)adc_spec(bits);
        if (phi >= unit_correlation_cutoff)
            return 1.0;
        if (phi <= -unit_correlation_cutoff)
            return -1.0;
        if (bits == 1)
            return 2.0 / std::numbers::pi * std::asin(phi);
        return f_map_numeric(phi, bits);
    }

    // ---- CorrelationMap ---------------------------------------------------

    CorrelationMap::CorrelationMap(int bits, std::size_t grid_points) : bits_(bits)
    {
        (void)adc_spec(bits);
        if (grid_points < 3 || grid_points % 2 == 0)
            throw std::invalid_argument("CorrelationMap: grid size must be odd and at least 3");

        const std::size_t n = grid_points;
        const std::size_t mid = n / 2;
        dtheta_ = std::numbers::pi / static_cast<double>(n - 1);
        theta_.resize(n);
        phi_.resize(n);
        f_.resize(n);
        for (std::size_t i = 0; i < n; ++i)
        {
            theta_[i] = -std::numbers::pi / 2.0 + static_cast<double>(i) * dtheta_;
            phi_[i] = std::sin(theta_[i]);
        }
        phi_[0] = -1.0;
        phi_[mid] = 0.0;
        phi_[n - 1] = 1.0;

        // evaluate the upper half and mirror, so the table is exactly odd
        for (std::size_t i = mid; i < n; ++i)
            f_[i] = f_map(phi_[i], bits);
        for (std::size_t i = 0; i < mid; ++i)
        {
            f_[i] = -f_[n - 1 - i];
            phi_[i] = -phi_[n - 1 - i];
        }

        // Fritsch-Carlson slopes on the uniform theta grid
        std::vector<double> secant(n - 1);
        for (std::size_t i = 0; i + 1 < n; ++i)
            secant[i] = (f_[i + 1] - f_[i]) / dtheta_;
        slope_.assign(n, 0.0);
        slope_[0] = secant[0];
        slope_[n - 1] = secant[n - 2];
        for (std::size_t i = 1; i + 1 < n; ++i)
        {
            const double a = secant[i - 1];
            const double b = secant[i];
            slope_[i] = (a * b > 0.0) ? 2.0 * a * b / (a + b) : 0.0;
        }
    }

    double CorrelationMap::operator()(double phi) const
    {
        check_phi(phi);
        if (phi >= unit_correlation_cutoff)
            return 1.0;
        if (phi <= -unit_correlation_cutoff)
            return -1.0;
        const double theta = std::asin(phi);
        const double pos = (theta - theta_.front()) / dtheta_;
        const auto last = theta_.size() - 2;
        const auto i = std::min(static_cast<std::size_t>(std::max(pos, 0.0)), last);
        const double s = pos - static_cast<double>(i);
        const double s2 = s * s;
        const double s3 = s2 * s;
        const double h00 = 2.0 * s3 - 3.0 * s2 + 1.0;
        const double h10 = s3 - 2.0 * s2 + s;
        const double h01 = -2.0 * s3 + 3.0 * s2;
        const double h11 = s3 - s2;
        return h00 * f_[i] + h10 * dtheta_ * slope_[i] + h01 * f_[i + 1] + h11 * dtheta_ * slope_[i + 1];
    }

    const CorrelationMap &correlation_map(int bits)
    {
        (void)adc_spec(bits);
        static std::array<std::once_flag, max_adc_bits> once;
        static std::array<std::unique_ptr<CorrelationMap>, max_adc_bits> maps;
        const auto i = static_cast<std::size_t>(bits - 1);
        std::call_once(once[i], [&] { maps[i] = std::make_unique<CorrelationMap>(bits); });
        return *maps[i];
    }

    // ---- quantized covariance --------------------------------------------

    namespace
    {
        struct Normalized
        {
            CMatrix c;
            Eigen::VectorXd diag;
        };

        Normalized prepare(const CMatrix &c_yy)
        {
            if (c_yy.rows() == 0 || c_yy.rows() != c_yy.cols())
                throw std::invalid_argument("quantized covariance: C_yy must be square and non-empty");
            Normalized out{symmetrize(c_yy), Eigen::VectorXd(c_yy.rows())};
            for (Eigen::Index i = 0; i < c_yy.rows(); ++i)
            {
                const double d = out.c(i, i).real();
                if (!(d > 0.0))
                    throw std::invalid_argument("quantized covariance: degenerate signal (non-positive diagonal entry)");
                out.diag(i) = d;
            }
            return out;
        }

        template <typename F>
        QuantizedCovariance exact_impl(const CMatrix &c_yy, const AdcSpec &spec, F &&f)
        {
            const auto [c, d] = prepare(c_yy);
            const Eigen::Index n = c.rows();
            const double gain = spec.bussgang_gain();
            CMatrix c_rr(n, n);
            for (Eigen::Index m = 0; m < n; ++m)
            {
                c_rr(m, m) = gain * d(m);
                for (Eigen::Index k = m + 1; k < n; ++k)
                {
                    const double s = std::sqrt(d(m) * d(k));
                    const double re = std::clamp(c(m, k).real() / s, -1.0, 1.0);
                    const double im = std::clamp(c(m, k).imag() / s, -1.0, 1.0);
                    const cplx value = gain * s * cplx(f(re), f(im));
                    c_rr(m, k) = value;
                    c_rr(k, m) = std::conj(value);
                }
            }
            // subtract the linear part with the output's own gain so that C_QQ stays PSD
            const double linear = output_linear_gain(spec);
            CMatrix c_qq = c_rr - linear * linear * c;
            return {std::move(c_rr), std::move(c_qq), CovarianceMethod::exact, linear};
        }
    } // namespace

    QuantizedCovariance quantized_covariance_exact(const CMatrix &c_yy, int bits)
    {
        const AdcSpec spec = adc_spec(bits);
        return exact_impl(c_yy, spec, [bits](double phi) { return f_map(phi, bits); });
    }

    QuantizedCovariance quantized_covariance_exact(const CMatrix &c_yy, const CorrelationMap &map)
    {
        const AdcSpec spec = adc_spec(map.bits());
        return exact_impl(c_yy, spec, [&map](double phi) { return map(phi); });
    }

    QuantizedCovariance quantized_covariance_approx(const CMatrix &c_yy, int bits)
    {
        const AdcSpec spec = adc_spec(bits);
        const auto [c, d] = prepare(c_yy);
        const double gain = spec.bussgang_gain();
        CMatrix c_rr = gain * gain * c;
        c_rr.diagonal() = (gain * d).cast<cplx>();
        CMatrix c_qq = CMatrix::Zero(c.rows(), c.cols());
        c_qq.diagonal() = (spec.nmse * gain * d).cast<cplx>();
        return {std::move(c_rr), std::move(c_qq), CovarianceMethod::approximate, gain};
    }

} // namespace adcfb
