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

#ifndef ADCFB_SIMULATE_HPP
#define ADCFB_SIMULATE_HPP

#include "adcfb/quantizer.hpp"
#include "adcfb/rate.hpp"

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace adcfb
{
    enum class Scenario
    {
        siso_1bit,
        miso_1bit,
        miso_multibit,
        mimo,
        mu_miso
    };

    enum class Csit
    {
        perfect,
        limited,
        none
    };

    /// Which MIMO lower bound a curve evaluates.
    enum class MimoBound
    {
        exact,
        approx
    };

    /// What a sweep reports per curve.
    enum class Report
    {
        rate, ///< mean rate
        loss  ///< mean paired difference to the first perfect-CSIT curve
    };

    std::string_view to_string(Scenario s);
    std::string_view to_string(Csit c);
    std::string_view to_string(MimoBound m);
    std::string_view to_string(Report r);
    Scenario parse_scenario(std::string_view s);
    Csit parse_csit(std::string_view s);
    MimoBound parse_mimo_bound(std::string_view s);
    Report parse_report(std::string_view s);

    /// One curve of an experiment.
    ///
    /// `feedback_bits` is the phase codebook size for siso_1bit and the
    /// direction codebook size for miso_multibit, mimo and mu_miso.
    /// miso_1bit uses the split (`direction_bits`, `phase_bits`) instead.
    struct CurveSpec
    {
        std::string label;
        Csit csit = Csit::perfect;
        AdcResolution adc = AdcResolution::finite(1);
        int feedback_bits = 0;
        int direction_bits = 0;
        int phase_bits = 0;
        int nr = 1;
        MimoBound bound = MimoBound::approx;
    };

    struct ExperimentConfig
    {
        std::string name = "custom";
        Scenario scenario = Scenario::siso_1bit;
        int nt = 1;
        int users = 1;
        std::vector<double> snr_db;
        std::size_t trials = 1000;
        std::uint64_t seed = 1;
        Report report = Report::rate;
        std::vector<CurveSpec> curves;
    };

    class ConfigError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    /// Throws ConfigError describing the first inconsistency.
    void validate(const ExperimentConfig &config);

    /// Canonical key=value text, readable by the cli config parser.
    std::string format_config(const ExperimentConfig &config);

    /// 64-bit FNV-1a of format_config with the seed line excluded.
    std::uint64_t config_hash(const ExperimentConfig &config);

    /// Counters accumulated while evaluating trials.
    struct TrialStats
    {
        std::size_t zf_failures = 0;
    };

    /// Rates of every curve at every point of `snr_db` for one trial:
    /// result[curve][point]. Channels are drawn from stream (seed, trial) and
    /// reused at every SNR point and by every curve; user k's RVQ codebook comes
    /// from substream 1 + k, so codebooks of different sizes are nested.
    std::vector<std::vector<double>> trial_rates(const ExperimentConfig &config, std::size_t trial,
                                                 const std::vector<double> &snr_db, TrialStats *stats = nullptr);

    /// Rate of one curve at one SNR for one trial.
    double run_trial(const ExperimentConfig &config, std::size_t curve, double snr_db, std::size_t trial);

    struct SweepRow
    {
        double snr_db;
        double mean;
        double std_error; ///< sample standard deviation / sqrt(trials)
        std::size_t trials;
    };

    struct CurveResult
    {
        CurveSpec spec;
        std::vector<SweepRow> rows;
        /// per-trial values, samples[point][trial]; filled only on request
        std::vector<std::vector<double>> samples;
    };

    struct SweepResult
    {
        std::string name;
        std::uint64_t seed = 0;
        std::uint64_t config_hash = 0;
        Report report = Report::rate;
        std::vector<CurveResult> curves;
        std::size_t zf_failures = 0;
    };

    struct SweepOptions
    {
        unsigned threads = 1;      ///< 0 uses the hardware concurrency
        bool keep_samples = false; ///< store per-trial values in CurveResult::samples
    };

    /// Runs all trials and reduces them in trial order, so the result does not
    /// depend on the thread count.
    SweepResult run_sweep(const ExperimentConfig &config, const SweepOptions &options = {});

    /// Names accepted by preset().
    std::vector<std::string> preset_names();

    /// Experiment definitions fig4, fig5a, fig5b, fig6, fig7, fig8, fig9, fig10, fig11.
    ExperimentConfig preset(std::string_view name);

    /// Inclusive arithmetic grid start, start + step, ..., stop.
    std::vector<double> snr_grid(double start, double step, double stop);

} // namespace adcfb

#endif
