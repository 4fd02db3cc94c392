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

#include "adcfb/simulate.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>

using namespace adcfb;
using Catch::Approx;

namespace
{
    ExperimentConfig small(std::string_view name, std::size_t trials = 40)
    {
        ExperimentConfig c = preset(name);
        c.trials = trials;
        return c;
    }
} // namespace

TEST_CASE("every preset validates and hashes independently of the seed")
{
    const auto names = preset_names();
    REQUIRE(names.size() == 9);
    for (const auto &n : names)
    {
        ExperimentConfig c = preset(n);
        CHECK_NOTHROW(validate(c));
        CHECK(c.name == n);
        const auto h = config_hash(c);
        c.seed += 1;
        CHECK(config_hash(c) == h);
        c.trials += 1;
        CHECK(config_hash(c) != h);
    }
    CHECK_THROWS_AS(preset("fig99"), ConfigError);
}

TEST_CASE("snr_grid is inclusive")
{
    CHECK(snr_grid(-10, 1, 30).size() == 41);
    const auto g = snr_grid(0, 0.1, 1);
    REQUIRE(g.size() == 11);
    CHECK(g.back() == Approx(1.0));
    CHECK(snr_grid(5, 1, 5).size() == 1);
    CHECK_THROWS(snr_grid(0, 0, 1));
    CHECK_THROWS(snr_grid(1, 1, 0));
}

TEST_CASE("validation rejects inconsistent configurations")
{
    auto expect_bad = [](auto mutate) {
        ExperimentConfig c = preset("fig4");
        mutate(c);
        CHECK_THROWS_AS(validate(c), ConfigError);
    };
    expect_bad([](ExperimentConfig &c) { c.nt = 4; });
    expect_bad([](ExperimentConfig &c) { c.trials = 0; });
    expect_bad([](ExperimentConfig &c) { c.snr_db.clear(); });
    expect_bad([](ExperimentConfig &c) { c.curves[1].label = c.curves[0].label; });
    expect_bad([](ExperimentConfig &c) { c.curves[0].label = "a,b"; });
    expect_bad([](ExperimentConfig &c) { c.curves[0].adc = AdcResolution::finite(2); });
    expect_bad([](ExperimentConfig &c) { c.curves.clear(); });
    expect_bad([](ExperimentConfig &c) { c.snr_db[0] = std::nan(""); });

    ExperimentConfig mu = preset("fig11");
    mu.users = 5;
    CHECK_THROWS_AS(validate(mu), ConfigError);
    mu = preset("fig11");
    mu.curves[0].csit = Csit::none;
    CHECK_THROWS_AS(validate(mu), ConfigError);

    ExperimentConfig loss = preset("fig6");
    loss.curves.erase(loss.curves.begin());
    CHECK_THROWS_AS(validate(loss), ConfigError);
}

TEST_CASE("sweeps do not depend on the thread count")
{
    for (const auto *name : {"fig4", "fig5a", "fig9", "fig11"})
    {
        const ExperimentConfig c = small(name, 24);
        SweepOptions one, many;
        many.threads = 3;
        const SweepResult a = run_sweep(c, one);
        const SweepResult b = run_sweep(c, many);
        REQUIRE(a.curves.size() == b.curves.size());
        for (std::size_t i = 0; i < a.curves.size(); ++i)
            for (std::size_t p = 0; p < a.curves[i].rows.size(); ++p)
            {
                CHECK(a.curves[i].rows[p].mean == b.curves[i].rows[p].mean);
                CHECK(a.curves[i].rows[p].std_error == b.curves[i].rows[p].std_error);
            }
        CHECK(a.config_hash == config_hash(c));
    }
}

TEST_CASE("the seed changes the draws")
{
    ExperimentConfig c = small("fig4");
    const double a = run_sweep(c).curves[0].rows[10].mean;
    c.seed = 2;
    CHECK(run_sweep(c).curves[0].rows[10].mean != a);
}

TEST_CASE("run_trial agrees with trial_rates")
{
    const ExperimentConfig c = small("fig8");
    const auto all = trial_rates(c, 3, c.snr_db);
    for (std::size_t ci = 0; ci < c.curves.size(); ++ci)
        CHECK(run_trial(c, ci, c.snr_db[7], 3) == all[ci][7]);
    CHECK_THROWS_AS(run_trial(c, 99, 0.0, 0), std::out_of_range);
}

TEST_CASE("common random numbers across curves")
{
    ExperimentConfig c = small("fig4");
    c.curves = {c.curves[2], c.curves[2]};
    c.curves[1].label = "copy";
    SweepOptions o;
    o.keep_samples = true;
    const SweepResult r = run_sweep(c, o);
    CHECK(r.curves[0].samples == r.curves[1].samples);
    REQUIRE(r.curves[0].samples.size() == c.snr_db.size());
    CHECK(r.curves[0].samples[0].size() == c.trials);
}

TEST_CASE("per-trial orderings")
{
    // perfect CSIT never loses to limited or no CSIT on the same channel
    for (const auto *name : {"fig4", "fig5a", "fig8"})
    {
        const ExperimentConfig c = small(name, 30);
        for (std::size_t t = 0; t < c.trials; ++t)
        {
            const auto rates = trial_rates(c, t, c.snr_db);
            for (std::size_t ci = 1; ci < c.curves.size(); ++ci)
            {
                if (c.curves[ci].csit == Csit::perfect || c.curves[ci].adc != c.curves[0].adc)
                    continue;
                for (std::size_t p = 0; p < c.snr_db.size(); ++p)
                    CHECK(rates[ci][p] <= rates[0][p] + 1e-12);
            }
            // and every curve is non-decreasing in SNR
            for (const auto &curve : rates)
                for (std::size_t p = 1; p < curve.size(); ++p)
                    CHECK(curve[p] >= curve[p - 1] - 1e-12);
        }
    }
}

TEST_CASE("nested RVQ codebooks give monotone per-trial alignment")
{
    // fig8 curves B = 2, 4, 8, 16 draw from the same substream
    const ExperimentConfig c = small("fig8", 30);
    std::vector<std::size_t> order;
    for (int bits : {2, 4, 8})
        for (std::size_t i = 0; i < c.curves.size(); ++i)
            if (c.curves[i].csit == Csit::limited && c.curves[i].feedback_bits == bits)
                order.push_back(i);
    REQUIRE(order.size() == 3);
    for (std::size_t t = 0; t < c.trials; ++t)
    {
        const auto rates = trial_rates(c, t, c.snr_db);
        for (std::size_t k = 1; k < order.size(); ++k)
            CHECK(rates[order[k]][20] >= rates[order[k - 1]][20] - 1e-12);
    }
}

TEST_CASE("loss report is the paired difference to perfect CSIT")
{
    ExperimentConfig c = small("fig6");
    SweepOptions o;
    o.keep_samples = true;
    const SweepResult loss = run_sweep(c, o);
    c.report = Report::rate;
    const SweepResult rate = run_sweep(c, o);
    for (std::size_t ci = 0; ci < c.curves.size(); ++ci)
        for (std::size_t p = 0; p < c.snr_db.size(); ++p)
            CHECK(loss.curves[ci].rows[p].mean ==
                  Approx(rate.curves[0].rows[p].mean - rate.curves[ci].rows[p].mean).margin(1e-12));
    CHECK(loss.curves[0].rows[5].mean == 0.0);
}

TEST_CASE("multi-user sweeps report ZF failures in the result")
{
    const SweepResult r = run_sweep(small("fig11", 20));
    CHECK(r.zf_failures == 0);
    CHECK(r.curves.size() == 6);
}

TEST_CASE("config text is canonical")
{
    const ExperimentConfig c = preset("fig5a");
    const std::string text = format_config(c);
    CHECK(text.find("scenario=miso_1bit") != std::string::npos);
    CHECK(text.find("seed=1") != std::string::npos);
    CHECK(format_config(c) == text);
}

TEST_CASE("enum names round-trip")
{
    for (Scenario s : {Scenario::siso_1bit, Scenario::miso_1bit, Scenario::miso_multibit, Scenario::mimo,
                       Scenario::mu_miso})
        CHECK(parse_scenario(to_string(s)) == s);
    for (Csit s : {Csit::perfect, Csit::limited, Csit::none})
        CHECK(parse_csit(to_string(s)) == s);
    CHECK(parse_mimo_bound("exact") == MimoBound::exact);
    CHECK(parse_report("loss") == Report::loss);
    CHECK_THROWS_AS(parse_scenario("nope"), ConfigError);
}
