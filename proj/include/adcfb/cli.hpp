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

#ifndef ADCFB_CLI_HPP
#define ADCFB_CLI_HPP

#include "adcfb/simulate.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace adcfb::cli
{
    inline constexpr std::string_view tool_version = "0.1.0";

    /// Environment variable holding the default seed.
    inline constexpr const char *seed_env_var = "ADCFB_SEED";

    /// Exit codes of the command-line tool.
    enum ExitCode : int
    {
        exit_ok = 0,
        exit_usage = 2,
        exit_config = 3,
        exit_numerical = 4
    };

    /// Inconsistent or missing command-line options.
    class UsageError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    /// CSV table with a leading block of `# key: value` metadata lines.
    ///
    /// Cells are stored as text; numbers go through format_number so that the
    /// byte output is a pure function of the values.
    struct OutputTable
    {
        std::vector<std::pair<std::string, std::string>> metadata;
        std::vector<std::string> columns;
        std::vector<std::vector<std::string>> rows;

        void add_row(std::vector<std::string> row);
        std::size_t column(std::string_view name) const;
        double number(std::size_t row, std::string_view column) const;

        /// Comma-delimited, LF line endings, metadata first.
        std::string to_csv() const;
        static OutputTable from_csv(std::string_view text);
    };

    /// 12 significant digits (shortest %g form), "inf" / "-inf" / "nan" for non-finite values.
    std::string format_number(double x);

    /// Writes `contents` to a temporary file next to `path` and renames it into place.
    /// "-" writes to stdout. Paths under /dev and /proc and other non-regular files are
    /// appended to in place. A symlink is kept and the file it points to is replaced.
    void write_file_atomic(const std::string &path, std::string_view contents);

    /// Parses "start:step:stop" ranges and plain values separated by commas.
    /// `allow_infinite` admits "-inf" (zero linear SNR).
    std::vector<double> parse_grid(std::string_view text, bool allow_infinite = false);

    struct ParsedConfig
    {
        ExperimentConfig config;
        bool seed_given = false;
    };

    /// Flat key=value experiment description with `#` comments.
    ///
    /// Global keys: preset, name, scenario, nt, k, trials, seed, report, snr_db.
    /// Per-curve keys (comma lists, length-1 lists broadcast): label, csit, b,
    /// B, b1, b2, nr, bound. A `preset` line loads that experiment first; any
    /// per-curve key then rebuilds the curve list from the given keys.
    /// Errors are ConfigError with "<source>:<line>: key '<k>': ..." context.
    ParsedConfig parse_config(std::string_view text, std::string_view source = "<config>");
    ParsedConfig load_config(const std::string &path);

    /// Quantizer table: b, stepsize, nmse, bussgang_gain_db, sqr_bits, plus Monte Carlo
    /// nmse_mc / rel_error (against the table) / nmse_uniform (closed-form distortion
    /// of the uniform quantizer at Delta_b) columns when `verify_samples` is set.
    OutputTable cmd_constants(std::optional<std::size_t> verify_samples = std::nullopt, std::uint64_t seed = 1);

    /// phi, f(phi) and (1 - eta_b) phi on a uniform grid over [-1, 1].
    OutputTable cmd_fmap(int bits, std::size_t grid_points);

    struct RateOptions
    {
        std::string scenario; ///< siso-1bit | miso-1bit | miso-multibit | mu-bound
        int nt = 0;
        int users = 0;
        std::optional<AdcResolution> adc;
        std::optional<int> feedback_bits;
        std::optional<int> direction_bits;
        std::optional<int> phase_bits;
        std::vector<double> snr_db;
    };

    /// Closed-form curves over an SNR grid. Throws UsageError on inconsistent options.
    OutputTable cmd_rate(const RateOptions &options);

    struct ExperimentOptions
    {
        std::optional<std::string> preset;
        std::optional<std::string> config_path;
        std::optional<std::uint64_t> seed;          ///< overrides config and environment
        std::optional<std::uint64_t> default_seed;  ///< used when nothing else sets a seed
        std::optional<std::size_t> trials;
        unsigned threads = 1;
    };

    /// Builds the configuration from a preset or a config file, runs the sweep
    /// and returns curve, snr_db, mean, std_error, trials rows.
    OutputTable cmd_experiment(const ExperimentOptions &options);

    /// The configuration cmd_experiment would run.
    ExperimentConfig resolve_experiment(const ExperimentOptions &options);

    OutputTable sweep_table(const ExperimentConfig &config, const SweepResult &result);

} // namespace adcfb::cli

#endif
