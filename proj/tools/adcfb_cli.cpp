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

#include "adcfb/cli.hpp"
#include "adcfb/numerics.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <iostream>

using namespace adcfb;
using namespace adcfb::cli;

namespace
{
    void emit(const OutputTable &table, const std::string &output)
    {
        const std::string csv = table.to_csv();
        if (output.empty() || output == "-")
            std::cout << csv;
        else
            write_file_atomic(output, csv);
    }

    std::optional<std::uint64_t> env_seed()
    {
        const char *v = std::getenv(seed_env_var);
        if (v == nullptr || *v == '\0')
            return std::nullopt;
        std::uint64_t s = 0;
        const std::string_view t(v);
        const auto r = std::from_chars(t.data(), t.data() + t.size(), s);
        if (r.ec != std::errc() || r.ptr != t.data() + t.size())
            throw UsageError(std::string(seed_env_var) + " must be an unsigned integer, got '" + v + "'");
        return s;
    }

    // accepts 10000000 as well as 1e7
    std::size_t sample_count(double n)
    {
        if (!(n >= 1.0) || n > 1e12 || std::floor(n) != n)
            throw UsageError("--verify expects a positive integer sample count");
        return static_cast<std::size_t>(n);
    }
} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Achievable rates of finite-bit ADC links with limited feedback"};
    app.set_version_flag("--version", std::string(tool_version));
    app.require_subcommand(1);

    std::string output;

    auto *constants = app.add_subcommand("constants", "Quantizer step sizes and NMSE for b = 1..8");
    double verify = 0.0;
    std::optional<std::uint64_t> seed;
    constants->add_option("--verify", verify, "Monte Carlo samples per resolution (e.g. 1e7)");
    constants->add_option("--seed", seed, "Seed for --verify");
    constants->add_option("-o,--output", output, "Output CSV path (default stdout)");

    auto *fmap = app.add_subcommand("fmap", "Input-to-output correlation map of a b-bit quantizer");
    int fmap_bits = 1;
    std::size_t fmap_points = 201;
    fmap->add_option("-b,--bits", fmap_bits, "ADC resolution 1..8")->required();
    fmap->add_option("-n,--points", fmap_points, "Grid points over [-1, 1]")->capture_default_str();
    fmap->add_option("-o,--output", output, "Output CSV path (default stdout)");

    auto *rate = app.add_subcommand("rate", "Closed-form rate curves and bounds");
    RateOptions ro;
    std::string rate_b, rate_snr;
    std::optional<int> rate_B, rate_b1, rate_b2;
    rate->add_option("-s,--scenario", ro.scenario, "siso-1bit | miso-1bit | miso-multibit | mu-bound")->required();
    rate->add_option("--nt", ro.nt, "Transmit antennas");
    rate->add_option("--k", ro.users, "Users (mu-bound)");
    rate->add_option("--b", rate_b, "ADC bits 1..8 or inf");
    rate->add_option("--B", rate_B, "Feedback bits");
    rate->add_option("--b1", rate_b1, "Direction feedback bits (miso-1bit)");
    rate->add_option("--b2", rate_b2, "Phase feedback bits (miso-1bit)");
    rate->add_option("--snr", rate_snr, "SNR grid in dB: start:step:stop or a list; -inf is zero SNR")
        ->default_val("-10:1:30");
    rate->add_option("-o,--output", output, "Output CSV path (default stdout)");

    auto *experiment = app.add_subcommand("experiment", "Monte Carlo sweep from a preset or config file");
    ExperimentOptions eo;
    std::string preset_name, config_path;
    std::optional<std::uint64_t> exp_seed;
    std::optional<std::size_t> exp_trials;
    auto *opt_preset = experiment->add_option("--preset", preset_name, "fig4 .. fig11");
    auto *opt_config = experiment->add_option("-c,--config", config_path, "key=value config file");
    opt_preset->excludes(opt_config);
    experiment->add_option("--seed", exp_seed, "Seed (overrides config and " + std::string(seed_env_var) + ")");
    experiment->add_option("--trials", exp_trials, "Override the trial count");
    experiment->add_option("-j,--threads", eo.threads, "Worker threads, 0 = all cores")->capture_default_str();
    experiment->add_option("-o,--output", output, "Output CSV path (default stdout)");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try
    {
        if (constants->parsed())
        {
            std::optional<std::size_t> n;
            if (constants->count("--verify"))
                n = sample_count(verify);
            const std::uint64_t s = seed ? *seed : env_seed().value_or(1);
            emit(cmd_constants(n, s), output);
        }
        else if (fmap->parsed())
            emit(cmd_fmap(fmap_bits, fmap_points), output);
        else if (rate->parsed())
        {
            if (!rate_b.empty())
                ro.adc = rate_b == "inf" ? AdcResolution::infinite() : AdcResolution::finite(std::stoi(rate_b));
            ro.feedback_bits = rate_B;
            ro.direction_bits = rate_b1;
            ro.phase_bits = rate_b2;
            ro.snr_db = parse_grid(rate_snr, true);
            emit(cmd_rate(ro), output);
        }
        else if (experiment->parsed())
        {
            if (!preset_name.empty())
                eo.preset = preset_name;
            if (!config_path.empty())
                eo.config_path = config_path;
            eo.seed = exp_seed;
            eo.default_seed = env_seed();
            eo.trials = exp_trials;
            emit(cmd_experiment(eo), output);
        }
    }
    catch (const ConfigError &e)
    {
        std::cerr << "config error: " << e.what() << '\n';
        return exit_config;
    }
    catch (const NumericalError &e)
    {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return exit_numerical;
    }
    catch (const std::invalid_argument &e)
    {
        // UsageError and argument-domain errors from the library
        std::cerr << "usage error: " << e.what() << "\n\n" << app.help();
        return exit_usage;
    }
    catch (const std::out_of_range &e)
    {
        std::cerr << "usage error: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return exit_config;
    }
    return exit_ok;
}
