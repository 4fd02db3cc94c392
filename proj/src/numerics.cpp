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

#include "adcfb/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

namespace adcfb
{
    // ---- special functions ------------------------------------------------

    double q_function(double x)
    {
        if (!std::isfinite(x))
            throw std::invalid_argument("q_function: argument must be finite");
        const double q = 0.5 * std::erfc(x / std::numbers::sqrt2);
        return std::max(q, std::numeric_limits<double>::min());
    }

    double normal_cdf(double x)
    {
        return 0.5 * std::erfc(-x / std::numbers::sqrt2);
    }

    double binary_entropy(double p)
    {
        if (!(p >= 0.0 && p <= 1.0))
            throw std::invalid_argument("binary_entropy: probability outside [0, 1]");
        double h = 0.0;
        if (p > 0.0)
            h -= p * std::log2(p);
        if (p < 1.0)
            h -= (1.0 - p) * std::log2(1.0 - p);
        return h;
    }

    double log_beta(double a, double b)
    {
        if (!(a > 0.0 && b > 0.0))
            throw std::invalid_argument("log_beta: arguments must be positive");
        return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
    }

    double rvq_expectation_term(int bits, int nt)
    {
        if (nt < 2)
            throw std::invalid_argument("rvq_expectation_term: Nt must be at least 2");
        if (bits < 0)
            throw std::invalid_argument("rvq_expectation_term: negative bit count");
        const double n = std::ldexp(1.0, bits);
        const double z = static_cast<double>(nt) / static_cast<double>(nt - 1);
        return std::exp(bits * std::numbers::ln2 + log_beta(n, z));
    }

    namespace
    {
        // Upper orthant P(X > h, Y > k), translated from Genz's BVNU.
        double bvn_upper(double h, double k, double r)
        {
            constexpr double two_pi = 2.0 * std::numbers::pi;
            static constexpr std::array<double, 3> w6 = {0.1713244923791705, 0.3607615730481384, 0.4679139345726904};
            static constexpr std::array<double, 3> x6 = {0.9324695142031522, 0.6612093864662647, 0.2386191860831970};
            static constexpr std::array<double, 6> w12 = {0.04717533638651177, 0.1069393259953183, 0.1600783285433464,
                                                          0.2031674267230659, 0.2334925365383547, 0.2491470458134029};
            static constexpr std::array<double, 6> x12 = {0.9815606342467191, 0.9041172563704750, 0.7699026741943050,
                                                          0.5873179542866171, 0.3678314989981802, 0.1252334085114692};
            static constexpr std::array<double, 10> w20 = {0.01761400713915212, 0.04060142980038694, 0.06267204833410906,
                                                           0.08327674157670475, 0.1019301198172404, 0.1181945319615184,
                                                           0.1316886384491766, 0.1420961093183821, 0.1491729864726037,
                                                           0.1527533871307259};
            static constexpr std::array<double, 10> x20 = {0.9931285991850949, 0.9639719272779138, 0.9122344282513259,
                                                           0.8391169718222188, 0.7463319064601508, 0.6360536807265150,
                                                           0.5108670019508271, 0.3737060887154196, 0.2277858511416451,
                                                           0.07652652113349733};

            if (r == 0.0)
                return normal_cdf(-h) * normal_cdf(-k);

            const double *w = nullptr;
            const double *x = nullptr;
            std::size_t lg = 0;
            if (std::abs(r) < 0.3)
                w = w6.data(), x = x6.data(), lg = 3;
            else if (std::abs(r) < 0.75)
                w = w12.data(), x = x12.data(), lg = 6;
            else
                w = w20.data(), x = x20.data(), lg = 10;

            double hk = h * k;
            double bvn = 0.0;
            if (std::abs(r) < 0.925)
            {
                const double hs = (h * h + k * k) / 2.0;
                const double asr = std::asin(r) / 2.0;
                for (std::size_t i = 0; i < lg; ++i)
                {
                    for (double node : {1.0 - x[i], 1.0 + x[i]})
                    {
                        const double sn = std::sin(asr * node);
                        bvn += w[i] * std::exp((sn * hk - hs) / (1.0 - sn * sn));
                    }
                }
                return bvn * asr / two_pi + normal_cdf(-h) * normal_cdf(-k);
            }

            if (r < 0.0)
            {
                k = -k;
                hk = -hk;
            }
            if (std::abs(r) < 1.0)
            {
                const double as = 1.0 - r * r;
                double a = std::sqrt(as);
                const double bs = (h - k) * (h - k);
                const double c = (4.0 - hk) / 8.0;
                const double d = (12.0 - hk) / 80.0;
                double asr = -(bs / as + hk) / 2.0;
                if (asr > -100.0)
                    bvn = a * std::exp(asr) * (1.0 - c * (bs - as) * (1.0 - d * bs) / 3.0 + c * d * as * as);
                if (hk > -100.0)
                {
                    const double b = std::sqrt(bs);
                    const double sp = std::sqrt(two_pi) * normal_cdf(-b / a);
                    bvn -= std::exp(-hk / 2.0) * sp * b * (1.0 - c * bs * (1.0 - d * bs) / 3.0);
                }
                a /= 2.0;
                double acc = 0.0;
                for (std::size_t i = 0; i < lg; ++i)
                {
                    for (double node : {1.0 - x[i], 1.0 + x[i]})
                    {
                        const double xs = (a * node) * (a * node);
                        asr = -(bs / xs + hk) / 2.0;
                        if (asr > -100.0)
                        {
                            const double sp = 1.0 + c * xs * (1.0 + 5.0 * d * xs);
                            const double rs = std::sqrt(1.0 - xs);
                            const double ep = std::exp(-(hk / 2.0) * xs / ((1.0 + rs) * (1.0 + rs))) / rs;
                            acc += w[i] * std::exp(asr) * (sp - ep);
                        }
                    }
                }
                bvn = (a * acc - bvn) / two_pi;
            }
            if (r > 0.0)
                return bvn + normal_cdf(-std::max(h, k));
            if (h >= k)
                return -bvn;
            const double l = h < 0.0 ? normal_cdf(k) - normal_cdf(h) : normal_cdf(-h) - normal_cdf(-k);
            return l - bvn;
        }
    } // namespace

    double bivariate_normal_cdf(double x, double y, double rho)
    {
        if (!(rho >= -1.0 && rho <= 1.0))
            throw std::invalid_argument("bivariate_normal_cdf: correlation outside [-1, 1]");
        if (std::isnan(x) || std::isnan(y))
            throw std::invalid_argument("bivariate_normal_cdf: NaN limit");
        if (x == -INFINITY || y == -INFINITY)
            return 0.0;
        if (x == INFINITY)
            return normal_cdf(y);
        if (y == INFINITY)
            return normal_cdf(x);
        return std::clamp(bvn_upper(-x, -y, rho), 0.0, 1.0);
    }

    // ---- complex linear algebra ------------------------------------------

    double hermitian_defect(const CMatrix &m)
    {
        if (m.rows() != m.cols())
            throw std::invalid_argument("hermitian_defect: matrix is not square");
        if (m.size() == 0)
            return 0.0;
        const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
        return (m - m.adjoint()).cwiseAbs().maxCoeff() / scale;
    }

    CMatrix symmetrize(const CMatrix &m, double tolerance)
    {
        if (hermitian_defect(m) > tolerance)
            throw std::invalid_argument("symmetrize: matrix is not Hermitian");
        return 0.5 * (m + m.adjoint());
    }

    EigenPair leading_eigenvector(const CMatrix &m)
    {
        if (m.rows() == 0)
            throw std::invalid_argument("leading_eigenvector: empty matrix");
        const CMatrix h = symmetrize(m);
        const Eigen::Index n = h.rows();
        const double scale = h.norm();

        CVector v = CVector::Zero(n);
        v(0) = 1.0;
        if (n > 1)
            v(1) = 1e-3;
        v.normalize();

        Eigen::Index restart = 1;
        double lambda = 0.0;
        for (int it = 0; it < 10000; ++it)
        {
            const CVector w = h * v;
            lambda = v.dot(w).real();
            const double residual = (w - lambda * v).norm();
            if (residual <= 1e-13 * std::max(std::abs(lambda), scale))
                break;
            const double nw = w.norm();
            if (nw == 0.0)
            {
                // start vector in the null space; move to the next basis direction
                if (restart >= n)
                    break;
                v = CVector::Unit(n, restart++);
                continue;
            }
            v = w / nw;
        }
        return {v, lambda};
    }

    double hermitian_quadratic_solve(const CMatrix &a, const CVector &x)
    {
        if (a.rows() != a.cols() || a.rows() != x.size())
            throw std::invalid_argument("hermitian_quadratic_solve: dimension mismatch");
        CMatrix h = symmetrize(a);
        Eigen::LLT<CMatrix> llt(h);
        if (llt.info() != Eigen::Success)
        {
            const double jitter = 1e-12 * std::abs(h.trace().real()) / static_cast<double>(h.rows());
            h.diagonal().array() += jitter;
            llt.compute(h);
            if (llt.info() != Eigen::Success)
                throw NumericalError("hermitian_quadratic_solve: matrix is singular or indefinite");
        }
        const CVector z = llt.matrixL().solve(x);
        return z.squaredNorm();
    }

    // ---- random sampling --------------------------------------------------

    namespace
    {
        constexpr std::uint64_t splitmix64(std::uint64_t z)
        {
            z += 0x9e3779b97f4a7c15ULL;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            return z ^ (z >> 31);
        }

        constexpr std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    } // namespace

    RngStream::RngStream(std::uint64_t seed, std::uint64_t stream, std::uint64_t substream)
        : seed_(seed), stream_(stream), sub_(substream)
    {
        std::uint64_t key = splitmix64(seed);
        key = splitmix64(key ^ splitmix64(stream + 0x632be59bd9b4e019ULL));
        key = splitmix64(key ^ splitmix64(substream + 0x85157af5ULL));
        for (auto &word : s_)
        {
            key += 0x9e3779b97f4a7c15ULL;
            word = splitmix64(key);
        }
    }

    RngStream RngStream::substream(std::uint64_t index) const
    {
        return RngStream(seed_, stream_, index);
    }

    std::uint64_t RngStream::next_u64()
    {
        // xoshiro256**
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    double RngStream::uniform()
    {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    cplx RngStream::complex_gaussian()
    {
        const double radius = std::sqrt(-std::log(uniform()));
        const double angle = 2.0 * std::numbers::pi * uniform();
        return {radius * std::cos(angle), radius * std::sin(angle)};
    }

    CVector sample_complex_gaussian(RngStream &rng, Eigen::Index n)
    {
        if (n < 1)
            throw std::invalid_argument("sample_complex_gaussian: n must be positive");
        CVector v(n);
        for (Eigen::Index i = 0; i < n; ++i)
            v(i) = rng.complex_gaussian();
        return v;
    }

    CMatrix sample_complex_gaussian(RngStream &rng, Eigen::Index rows, Eigen::Index cols)
    {
        if (rows < 1 || cols < 1)
            throw std::invalid_argument("sample_complex_gaussian: dimensions must be positive");
        CMatrix m(rows, cols);
        // row-major fill so row i of a K x Nt channel matrix is the i-th user's draw
        for (Eigen::Index i = 0; i < rows; ++i)
            for (Eigen::Index j = 0; j < cols; ++j)
                m(i, j) = rng.complex_gaussian();
        return m;
    }

} // namespace adcfb
