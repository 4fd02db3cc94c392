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

#ifndef ADCFB_CORRELATION_HPP
#define ADCFB_CORRELATION_HPP

#include "adcfb/numerics.hpp"
#include "adcfb/quantizer.hpp"

#include <memory>
#include <span>
#include <vector>

namespace adcfb
{
    /*!
     * Correlation transfer of the b-bit quantizer.
     *
     * For a unit-variance Gaussian pair (x, y) with correlation phi, f(phi) is the
     * correlation coefficient of (Q(x), Q(y)). The quantizer is written as a sum of
     * shifted sign functions, Q(x) = (Delta/2) sum_k sgn(x - t_k) over its 2^b - 1
     * thresholds, which turns E[Q(x) Q(y)] into a finite sum of bivariate normal
     * orthant probabilities:
     *
     *   E[sgn(x - a) sgn(y - c)] = 1 - 2 Phi(a) - 2 Phi(c) + 4 Phi2(a, c; phi).
     *
     * The raw moment is divided by its value at phi = 1 so that f(1) = 1 exactly.
     */
    double f_map_numeric(double phi, int bits);

    /// f(phi): (2/pi) arcsin(phi) for b = 1, the orthant-sum integral otherwise.
    /// |phi| >= 1 - 1e-9 returns +-1. Throws for |phi| > 1.
    double f_map(double phi, int bits);

    /// Tabulated f for Monte Carlo hot paths.
    ///
    /// Nodes are uniform in theta = arcsin(phi) (which removes the square-root
    /// behaviour of f at phi = +-1) and interpolated with monotone cubic Hermite
    /// splines. Immutable after construction.
    class CorrelationMap
    {
    public:
        explicit CorrelationMap(int bits, std::size_t grid_points = 4097);

        double operator()(double phi) const;

        int bits() const { return bits_; }
        std::span<const double> grid() const { return phi_; }
        std::span<const double> values() const { return f_; }

    private:
        int bits_;
        std::vector<double> theta_;
        std::vector<double> phi_;
        std::vector<double> f_;
        std::vector<double> slope_;
        double dtheta_;
    };

    /// Shared, lazily built 4097-point map for resolution `bits`.
    const CorrelationMap &correlation_map(int bits);

    enum class CovarianceMethod
    {
        exact,
        approximate
    };

    struct QuantizedCovariance
    {
        CMatrix c_rr;            ///< covariance of the quantizer output
        CMatrix c_qq;            ///< C_rr - gain^2 C_yy
        CovarianceMethod method;
        double gain;             ///< linear gain of the output on the input
    };

    /// C_rr = (1 - eta) D^{1/2} [f(D^{-1/2} Re(C_yy) D^{-1/2}) + j f(D^{-1/2} Im(C_yy) D^{-1/2})] D^{1/2}
    /// with D = diag(C_yy) and f applied entrywise. C_yy must be Hermitian with a
    /// strictly positive diagonal.
    QuantizedCovariance quantized_covariance_exact(const CMatrix &c_yy, int bits);
    QuantizedCovariance quantized_covariance_exact(const CMatrix &c_yy, const CorrelationMap &map);

    /// C_rr ~ (1 - eta) (diag{C_yy} + (1 - eta) nondiag{C_yy}).
    QuantizedCovariance quantized_covariance_approx(const CMatrix &c_yy, int bits);

} // namespace adcfb

#endif
