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

#ifndef ADCFB_NUMERICS_HPP
#define ADCFB_NUMERICS_HPP

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace adcfb
{
    using cplx = std::complex<double>;
    using CVector = Eigen::VectorXcd;
    using CMatrix = Eigen::MatrixXcd;

    /// Raised when a numerical kernel cannot deliver a result (singular system, rank loss).
    class NumericalError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // ---- special functions ------------------------------------------------

    /// Upper-tail probability of the standard normal, Q(x) = erfc(x / sqrt 2) / 2.
    /// Stays positive deep into the tail (smallest normal double rather than 0).
    double q_function(double x);

    /// Standard normal CDF, Phi(x) = Q(-x).
    double normal_cdf(double x);

    /// -p log2 p - (1-p) log2 (1-p) with 0 log 0 = 0. Throws for p outside [0, 1].
    double binary_entropy(double p);

    /// log Beta(a, b) through log-gamma differences.
    double log_beta(double a, double b);

    /// 2^B * Beta(2^B, Nt / (Nt - 1)), the expected residual 1 - E[cos^2] of a
    /// B-bit random vector quantizer in Nt dimensions.
    double rvq_expectation_term(int bits, int nt);

    /// P(X <= x, Y <= y) for a standard bivariate normal pair with correlation rho.
    /// Drezner-Wesolowsky / Genz Gauss-Legendre evaluation, absolute error ~1e-15.
    double bivariate_normal_cdf(double x, double y, double rho);

    // ---- complex linear algebra ------------------------------------------

    /// Largest-magnitude asymmetry max |M - M^*| relative to max(1, max |M|).
    double hermitian_defect(const CMatrix &m);

    /// Returns (M + M^*) / 2, throwing std::invalid_argument when M is not square
    /// or its relative asymmetry exceeds `tolerance`.
    CMatrix symmetrize(const CMatrix &m, double tolerance = 1e-9);

    struct EigenPair
    {
        CVector vector; ///< unit norm
        double value;   ///< Rayleigh quotient at `vector`
    };

    /// Dominant eigenpair of a Hermitian PSD matrix by power iteration.
    /// Start vector e1 + 1e-3 e2, at most 10^4 iterations; converged when the
    /// residual satisfies |M v - lambda v| <= 1e-13 * max(lambda, |M|).
    EigenPair leading_eigenvector(const CMatrix &m);

    /// x^* A^{-1} x for Hermitian positive-definite A via Cholesky. A failed
    /// factorization is retried once with 1e-12 * trace / n added to the diagonal;
    /// a second failure throws NumericalError.
    double hermitian_quadratic_solve(const CMatrix &a, const CVector &x);

    // ---- random sampling --------------------------------------------------

    /// Counter-keyed random stream. The sequence is a pure function of
    /// (seed, stream, substream), so trials can be evaluated in any order.
    class RngStream
    {
    public:
        RngStream(std::uint64_t seed, std::uint64_t stream, std::uint64_t substream = 0);

        /// Independent stream keyed by the same seed and stream index.
        RngStream substream(std::uint64_t index) const;

        std::uint64_t seed() const { return seed_; }
        std::uint64_t stream() const { return stream_; }

        std::uint64_t next_u64();

        /// Uniform on the open interval (0, 1).
        double uniform();

        /// CN(0, 1): independent real and imaginary parts of variance 1/2 (Box-Muller).
        cplx complex_gaussian();

    private:
        std::uint64_t seed_;
        std::uint64_t stream_;
        std::uint64_t sub_;
        std::uint64_t s_[4];
    };

    CVector sample_complex_gaussian(RngStream &rng, Eigen::Index n);
    CMatrix sample_complex_gaussian(RngStream &rng, Eigen::Index rows, Eigen::Index cols);

    // ---- helpers ----------------------------------------------------------

    inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
    inline double linear_to_db(double x) { return 10.0 * std::log10(x); }

} // namespace adcfb

#endif
