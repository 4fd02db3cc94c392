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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace adcfb
{
    namespace
    {
        constexpr double half_pi = std::numbers::pi / 2.0;
        // relative slack under which two candidate scores count as tied
        constexpr double tie_tolerance = 1e-12;

        bool beats(double candidate, double best)
        {
            return candidate > best + tie_tolerance * std::max(1.0, std::abs(best));
        }
    } // namespace

    double PhaseCodebook::spacing() const { return std::ldexp(std::numbers::pi, -(bits + 1)); }

    double PhaseCodebook::max_error() const { return std::ldexp(std::numbers::pi, -(bits + 2)); }

    PhaseCodebook phase_codebook(int bits)
    {
        if (bits < 0 || bits > 30)
            throw std::invalid_argument("phase_codebook: bit count must be in 0..30");
        PhaseCodebook cb{bits, {}};
        const std::size_t n = std::size_t{1} << bits;
        cb.entries.reserve(n);
        for (std::size_t i = 0; i < n; ++i)
            cb.entries.push_back(static_cast<double>(2 * i + 1) * std::ldexp(std::numbers::pi, -(bits + 2)));
        return cb;
    }

    PhaseQuantization quantize_residual_phase(double angle, const PhaseCodebook &cb)
    {
        if (!std::isfinite(angle))
            throw std::invalid_argument("quantize_residual_phase: angle must be finite");
        if (cb.entries.empty())
            throw std::invalid_argument("quantize_residual_phase: empty codebook");
        double reduced = std::fmod(angle, half_pi);
        if (reduced < 0.0)
            reduced += half_pi;
        if (reduced >= half_pi)
            reduced = 0.0;

        std::size_t best = 0;
        double best_distance = std::abs(reduced - cb.entries[0]);
        for (std::size_t i = 1; i < cb.entries.size(); ++i)
        {
            const double d = std::abs(reduced - cb.entries[i]);
            if (d < best_distance - tie_tolerance)
            {
                best = i;
                best_distance = d;
            }
        }
        return {best, cb.entries[best], cb.entries[best] - reduced};
    }

    RvqCodebook rvq_codebook(int nt, int bits, RngStream &rng)
    {
        if (nt < 2)
            throw std::invalid_argument("rvq_codebook: Nt must be at least 2");
        if (bits < 0 || bits > 24)
            throw std::invalid_argument("rvq_codebook: bit count must be in 0..24");
        const Eigen::Index n = Eigen::Index{1} << bits;
        RvqCodebook cb{bits, nt, CMatrix(nt, n)};
        for (Eigen::Index i = 0; i < n; ++i)
        {
            for (Eigen::Index j = 0; j < nt; ++j)
                cb.codewords(j, i) = rng.complex_gaussian();
            cb.codewords.col(i).normalize();
        }
        return cb;
    }

    std::size_t select_miso(const CVector &h, const RvqCodebook &cb)
    {
        if (h.size() != cb.codewords.rows())
            throw std::invalid_argument("select_miso: channel and codebook dimensions differ");
        const Eigen::VectorXd score = (cb.codewords.adjoint() * h).cwiseAbs2();
        std::size_t best = 0;
        for (Eigen::Index i = 1; i < score.size(); ++i)
            if (beats(score(i), score(static_cast<Eigen::Index>(best))))
                best = static_cast<std::size_t>(i);
        return best;
    }

    double mimo_selection_metric(const CMatrix &h, const CVector &v, double gamma, AdcResolution adc)
    {
        if (h.cols() != v.size())
            throw std::invalid_argument("mimo_selection_metric: dimension mismatch");
        if (gamma < 0.0)
            throw std::invalid_argument("mimo_selection_metric: negative SNR");
        const Eigen::VectorXd g = (h * v).cwiseAbs2();
        if (gamma == 0.0)
            return g.sum();
        const double eta = adc.nmse();
        double metric = 0.0;
        for (Eigen::Index i = 0; i < g.size(); ++i)
            metric += (1.0 - eta) * gamma * g(i) / (eta * gamma * g(i) + 1.0);
        return metric;
    }

    MimoBeamformer select_mimo_beamformer(const CMatrix &h, const RvqCodebook &cb, double gamma,
                                          AdcResolution adc, bool include_eigenvector)
    {
        if (h.cols() != cb.codewords.rows())
            throw std::invalid_argument("select_mimo: channel and codebook dimensions differ");
        if (gamma < 0.0)
            throw std::invalid_argument("select_mimo: negative SNR");

        const double eta = adc.nmse();
        const CMatrix projected = h * cb.codewords; // Nr x 2^B
        std::size_t best = 0;
        double best_metric = -1.0;
        for (Eigen::Index i = 0; i < projected.cols(); ++i)
        {
            double metric = 0.0;
            for (Eigen::Index r = 0; r < projected.rows(); ++r)
            {
                const double g = std::norm(projected(r, i));
                metric += gamma == 0.0 ? g : (1.0 - eta) * gamma * g / (eta * gamma * g + 1.0);
            }
            if (i == 0 || beats(metric, best_metric))
            {
                best = static_cast<std::size_t>(i);
                best_metric = metric;
            }
        }
        MimoBeamformer out{cb.codeword(best), best, best_metric};
        if (include_eigenvector)
        {
            const EigenPair top = leading_eigenvector(h.adjoint() * h);
            const double metric = mimo_selection_metric(h, top.vector, gamma, adc);
            if (beats(metric, best_metric))
                out = {top.vector, cb.size(), metric};
        }
        return out;
    }

    std::size_t select_mimo(const CMatrix &h, const RvqCodebook &cb, double gamma, AdcResolution adc)
    {
        return select_mimo_beamformer(h, cb, gamma, adc, false).index;
    }

    CMatrix zf_precoder(const CMatrix &hhat)
    {
        if (hhat.rows() == 0 || hhat.rows() > hhat.cols())
            throw PrecodingError("zf_precoder: need 1 <= K <= Nt");
        Eigen::JacobiSVD<CMatrix> svd(hhat, Eigen::ComputeThinU | Eigen::ComputeThinV);
        const Eigen::VectorXd &s = svd.singularValues();
        if (!(s(0) > 0.0) || s(s.size() - 1) < 1e-10 * s(0))
            throw PrecodingError("zf_precoder: quantized channel matrix is rank deficient");
        CMatrix v = svd.matrixV() * s.cwiseInverse().asDiagonal() * svd.matrixU().adjoint();
        v.colwise().normalize();
        return v;
    }

    CVector conjugate_beamformer(const CVector &h)
    {
        const double n = h.norm();
        if (!(n > 0.0))
            throw std::invalid_argument("conjugate_beamformer: zero channel");
        return h / n;
    }

    DirectionFeedback rvq_feedback_explicit(const CVector &h, int bits, RngStream &rng)
    {
        const RvqCodebook cb = rvq_codebook(static_cast<int>(h.size()), bits, rng);
        const std::size_t i = select_miso(h, cb);
        CVector w = cb.codeword(i);
        const double alignment = std::norm(h.dot(w)) / h.squaredNorm();
        return {std::move(w), alignment};
    }

    DirectionFeedback rvq_feedback_sampled(const CVector &h, int bits, RngStream &rng)
    {
        const Eigen::Index nt = h.size();
        if (nt < 2)
            throw std::invalid_argument("rvq_feedback_sampled: Nt must be at least 2");
        if (bits < 0 || bits > 60)
            throw std::invalid_argument("rvq_feedback_sampled: bit count must be in 0..60");
        const CVector dir = conjugate_beamformer(h);

        // inverse CDF of the maximum of 2^B Beta(1, Nt - 1) variables
        const double n = std::ldexp(1.0, bits);
        const double tail = -std::expm1(std::log(rng.uniform()) / n); // 1 - u^(1/N)
        const double x = -std::expm1(std::log(tail) / static_cast<double>(nt - 1));

        const double phase = 2.0 * std::numbers::pi * rng.uniform();
        CVector u = sample_complex_gaussian(rng, nt);
        u -= dir * dir.dot(u);
        u.normalize();

        CVector w = std::sqrt(x) * std::polar(1.0, phase) * dir + std::sqrt(1.0 - x) * u;
        w.normalize();
        return {std::move(w), x};
    }

    DirectionFeedback rvq_feedback(const CVector &h, int bits, RngStream &rng)
    {
        return bits <= explicit_rvq_max_bits ? rvq_feedback_explicit(h, bits, rng)
                                             : rvq_feedback_sampled(h, bits, rng);
    }

} // namespace adcfb
