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

#ifndef ADCFB_CODEBOOK_HPP
#define ADCFB_CODEBOOK_HPP

#include "adcfb/numerics.hpp"
#include "adcfb/quantizer.hpp"

#include <cstddef>
#include <vector>

namespace adcfb
{
    /// Uniform codebook for the residual phase modulo pi/2:
    /// psi_i = i pi / 2^(B+1) + pi / 2^(B+2), i = 0 .. 2^B - 1.
    struct PhaseCodebook
    {
        int bits;
        std::vector<double> entries;

        double spacing() const;
        /// Largest possible |theta|, pi / 2^(B+2).
        double max_error() const;
    };

    PhaseCodebook phase_codebook(int bits);

    struct PhaseQuantization
    {
        std::size_t index;
        double codeword; ///< psi-hat
        double error;    ///< theta = psi-hat - mod(angle, pi/2)
    };

    /// Nearest codeword to mod(angle, pi/2); ties go to the lower index.
    PhaseQuantization quantize_residual_phase(double angle, const PhaseCodebook &cb);

    /// Random vector quantization codebook: 2^B isotropic unit vectors in C^Nt,
    /// stored as the columns of `codewords`.
    struct RvqCodebook
    {
        int bits;
        int dimension;
        CMatrix codewords;

        std::size_t size() const { return static_cast<std::size_t>(codewords.cols()); }
        CVector codeword(std::size_t i) const { return codewords.col(static_cast<Eigen::Index>(i)); }
    };

    /// Draws 2^B normalized CN(0, I) vectors from `rng`. Codeword i is the i-th
    /// draw, so a larger codebook from the same stream extends a smaller one.
    RvqCodebook rvq_codebook(int nt, int bits, RngStream &rng);

    /// argmax_i |h^* w_i|; ties go to the lower index.
    std::size_t select_miso(const CVector &h, const RvqCodebook &cb);

    /// Sum over receive antennas of the per-antenna SQNR
    /// (1 - eta) gamma |h_i^* v|^2 / (eta gamma |h_i^* v|^2 + 1), with rows of H equal to h_i^*.
    double mimo_selection_metric(const CMatrix &h, const CVector &v, double gamma, AdcResolution adc);

    /// argmax of the SQNR-sum metric over the codebook. At gamma = 0 the limiting
    /// rule argmax |H v|^2 is used.
    std::size_t select_mimo(const CMatrix &h, const RvqCodebook &cb, double gamma, AdcResolution adc);

    struct MimoBeamformer
    {
        CVector vector;
        std::size_t index; ///< codebook index, or cb.size() when the eigen-beamformer won
        double metric;
    };

    /// Same rule as select_mimo; when `include_eigenvector` is set the candidate
    /// set also holds the leading eigenvector of H^* H (perfect-CSIT variant).
    MimoBeamformer select_mimo_beamformer(const CMatrix &h, const RvqCodebook &cb, double gamma,
                                          AdcResolution adc, bool include_eigenvector);

    /// Unit-norm zero-forcing beamformers. Row k of `hhat` is the conjugate
    /// transpose of user k's (quantized) channel direction; column i of the result
    /// is the normalized column i of the pseudo-inverse, so hhat.row(k) * v_i = 0
    /// for k != i. Throws PrecodingError when hhat loses row rank (singular values
    /// below 1e-10 of the largest) or has more rows than columns.
    CMatrix zf_precoder(const CMatrix &hhat);

    class PrecodingError : public NumericalError
    {
    public:
        using NumericalError::NumericalError;
    };

    /// h / |h|.
    CVector conjugate_beamformer(const CVector &h);

    /// Outcome of limited-feedback direction quantization.
    struct DirectionFeedback
    {
        CVector codeword; ///< selected unit vector
        double alignment; ///< |h~^* w|^2 with h~ = h / |h|
    };

    /// Explicit RVQ: draws the codebook from `rng` and selects with select_miso.
    DirectionFeedback rvq_feedback_explicit(const CVector &h, int bits, RngStream &rng);

    /// Distributionally identical shortcut for large codebooks. The alignment of
    /// the best of N = 2^B isotropic codewords has CDF (1 - (1 - x)^(Nt-1))^N and is
    /// sampled by inversion; the codeword is rebuilt as
    /// sqrt(x) e^{j a} h~ + sqrt(1 - x) u with a uniform phase and u isotropic in
    /// the orthogonal complement of h~.
    DirectionFeedback rvq_feedback_sampled(const CVector &h, int bits, RngStream &rng);

    /// Largest codebook size (in bits) drawn explicitly by rvq_feedback.
    constexpr int explicit_rvq_max_bits = 12;

    /// rvq_feedback_explicit for bits <= explicit_rvq_max_bits, rvq_feedback_sampled above.
    DirectionFeedback rvq_feedback(const CVector &h, int bits, RngStream &rng);

} // namespace adcfb

#endif
