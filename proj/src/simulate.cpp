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

#include "adcfb/codebook.hpp"
#include "adcfb/correlation.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <map>
#include <mutex>
#include <numbers>
#include <set>
#include <sstream>
#include <thread>

namespace adcfb
{
    // ---- enum names ---------------------------------------------------------

    namespace
    {
        template <typename E, std::size_t N>
        E parse_enum(std::string_view s, const std::pair<E, std::string_view> (&table)[N], const char *what)
        {
            for (const auto &[value, name] : table)
                if (name == s)
                    return value;
            throw ConfigError(std::string("unknown ") + what + " '" + std::string(s) + "'");
        }

        template <typename E, std::size_t N>
        std::string_view enum_name(E e, const std::pair<E, std::string_view> (&table)[N])
        {
            for (const auto &[value, name] : table)
                if (value == e)
                    return name;
            return "?";
        }

        constexpr std::pair<Scenario, std::string_view> scenario_names[] = {
            {Scenario::siso_1bit, "siso_1bit"},
            {Scenario::miso_1bit, "miso_1bit"},
            {Scenario::miso_multibit, "miso_multibit"},
            {Scenario::mimo, "mimo"},
            {Scenario::mu_miso, "mu_miso"}};
        constexpr std::pair<Csit, std::string_view> csit_names[] = {
            {Csit::perfect, "perfect"}, {Csit::limited, "limited"}, {Csit::none, "none"}};
        constexpr std::pair<MimoBound, std::string_view> bound_names[] = {
            {MimoBound::exact, "exact"}, {MimoBound::approx, "approx"}};
        constexpr std::pair<Report, std::string_view> report_names[] = {
            {Report::rate, "rate"}, {Report::loss, "loss"}};
    } // namespace

    std::string_view to_string(Scenario s) { return enum_name(s, scenario_names); }
    std::string_view to_string(Csit c) { return enum_name(c, csit_names); }
    std::string_view to_string(MimoBound m) { return enum_name(m, bound_names); }
    std::string_view to_string(Report r) { return enum_name(r, report_names); }
    Scenario parse_scenario(std::string_view s) { return parse_enum(s, scenario_names, "scenario"); }
    Csit parse_csit(std::string_view s) { return parse_enum(s, csit_names, "csit mode"); }
    MimoBound parse_mimo_bound(std::string_view s) { return parse_enum(s, bound_names, "MIMO bound"); }
    Report parse_report(std::string_view s) { return parse_enum(s, report_names, "report"); }

    // ---- validation and canonical text ----------------------------------------

    void validate(const ExperimentConfig &c)
    {
        auto fail = [](const std::string &msg) { throw ConfigError(msg); };
        if (c.snr_db.empty())
            fail("snr_db: grid must not be empty");
        for (double s : c.snr_db)
            if (!std::isfinite(s) || s > 200.0)
                fail("snr_db: grid values must be finite and at most 200 dB");
        if (c.trials < 1)
            fail("trials: must be at least 1");
        if (c.curves.empty())
            fail("at least one curve is required");
        if (c.name.empty() || c.name.find_first_of(",\n\r") != std::string::npos)
            fail("name: must be non-empty without commas or line breaks");

        switch (c.scenario)
        {
        case Scenario::siso_1bit:
            if (c.nt != 1)
                fail("nt: siso_1bit requires nt = 1");
            break;
        case Scenario::miso_1bit:
        case Scenario::miso_multibit:
        case Scenario::mimo:
            if (c.nt < 2 || c.nt > 256)
                fail("nt: must be in 2..256");
            break;
        case Scenario::mu_miso:
            if (c.nt < 2 || c.nt > 256)
                fail("nt: must be in 2..256");
            if (c.users < 2 || c.users > c.nt)
                fail("k: mu_miso requires 2 <= k <= nt");
            break;
        }

        std::set<std::string> labels;
        bool has_perfect = false;
        for (const auto &curve : c.curves)
        {
            const std::string where = "curve '" + curve.label + "': ";
            if (curve.label.empty() || curve.label.find_first_of(",\n\r#") != std::string::npos)
                fail("label: curve labels must be non-empty without commas, '#' or line breaks");
            if (!labels.insert(curve.label).second)
                fail("label: duplicate curve label '" + curve.label + "'");
            has_perfect = has_perfect || curve.csit == Csit::perfect;

            const bool one_bit_scenario = c.scenario == Scenario::siso_1bit || c.scenario == Scenario::miso_1bit;
            if (one_bit_scenario && (curve.adc.is_infinite() || curve.adc.bits() != 1))
                fail(where + "b: 1-bit scenarios require b = 1");
            if (curve.feedback_bits < 0 || curve.direction_bits < 0 || curve.phase_bits < 0)
                fail(where + "feedback bit counts must be non-negative");
            switch (c.scenario)
            {
            case Scenario::siso_1bit:
                if (curve.feedback_bits > 20)
                    fail(where + "B: phase codebook limited to 20 bits");
                break;
            case Scenario::miso_1bit:
                if (curve.direction_bits > 40 || curve.phase_bits > 20)
                    fail(where + "b1/b2: at most 40 direction and 20 phase bits");
                break;
            case Scenario::miso_multibit:
                if (curve.feedback_bits > 40)
                    fail(where + "B: at most 40 bits");
                break;
            case Scenario::mimo:
                if (curve.feedback_bits > 16)
                    fail(where + "B: MIMO codebooks are drawn explicitly, at most 16 bits");
                if (curve.nr < 1 || curve.nr > 256)
                    fail(where + "nr: must be in 1..256");
                break;
            case Scenario::mu_miso:
                if (curve.csit == Csit::none)
                    fail(where + "csit: mu_miso has no 'none' mode");
                if (curve.feedback_bits > 40)
                    fail(where + "B: at most 40 bits");
                break;
            }
        }
        if (c.report == Report::loss && !has_perfect)
            fail("report: 'loss' needs a perfect-CSIT reference curve");
    }

    namespace
    {
        std::string format_double(double x)
        {
            char buf[64];
            const auto r = std::to_chars(buf, buf + sizeof buf, x);
            return std::string(buf, r.ptr);
        }

        template <typename F>
        std::string join(const std::vector<CurveSpec> &curves, F &&f)
        {
            std::string out;
            for (std::size_t i = 0; i < curves.size(); ++i)
            {
                if (i)
                    out += ',';
                out += f(curves[i]);
            }
            return out;
        }

        std::string format_body(const ExperimentConfig &c)
        {
            std::ostringstream os;
            os << "name=" << c.name << '\n';
            os << "scenario=" << to_string(c.scenario) << '\n';
            os << "nt=" << c.nt << '\n';
            os << "k=" << c.users << '\n';
            os << "trials=" << c.trials << '\n';
            os << "report=" << to_string(c.report) << '\n';
            os << "snr_db=";
            for (std::size_t i = 0; i < c.snr_db.size(); ++i)
                os << (i ? "," : "") << format_double(c.snr_db[i]);
            os << '\n';
            os << "label=" << join(c.curves, [](const CurveSpec &s) { return s.label; }) << '\n';
            os << "csit=" << join(c.curves, [](const CurveSpec &s) { return std::string(to_string(s.csit)); }) << '\n';
            os << "b=" << join(c.curves, [](const CurveSpec &s) { return s.adc.to_string(); }) << '\n';
            os << "B=" << join(c.curves, [](const CurveSpec &s) { return std::to_string(s.feedback_bits); }) << '\n';
            os << "b1=" << join(c.curves, [](const CurveSpec &s) { return std::to_string(s.direction_bits); }) << '\n';
            os << "b2=" << join(c.curves, [](const CurveSpec &s) { return std::to_string(s.phase_bits); }) << '\n';
            os << "nr=" << join(c.curves, [](const CurveSpec &s) { return std::to_string(s.nr); }) << '\n';
            os << "bound=" << join(c.curves, [](const CurveSpec &s) { return std::string(to_string(s.bound)); })
               << '\n';
            return os.str();
        }
    } // namespace

    std::string format_config(const ExperimentConfig &c)
    {
        return format_body(c) + "seed=" + std::to_string(c.seed) + '\n';
    }

    std::uint64_t config_hash(const ExperimentConfig &c)
    {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (unsigned char ch : format_body(c))
        {
            h ^= ch;
            h *= 0x100000001b3ULL;
        }
        return h;
    }

    // ---- trials -----------------------------------------------------------------

    namespace
    {
        constexpr double tie_tolerance = 1e-12;

        double residual_phase_error(cplx effective, int phase_bits)
        {
            const PhaseCodebook cb = phase_codebook(phase_bits);
            return quantize_residual_phase(std::arg(effective), cb).error;
        }

        CVector unit_e1(Eigen::Index n)
        {
            CVector e = CVector::Zero(n);
            e(0) = 1.0;
            return e;
        }

        // 1-bit SISO and MISO share everything after the effective scalar gain.
        void one_bit_curves(const ExperimentConfig &c, const CVector &h, RngStream &chan,
                            const std::vector<double> &gammas, std::vector<std::vector<double>> &out)
        {
            for (std::size_t ci = 0; ci < c.curves.size(); ++ci)
            {
                const CurveSpec &curve = c.curves[ci];
                double gain = 0.0;
                double theta = 0.0;
                if (c.scenario == Scenario::siso_1bit)
                {
                    gain = std::norm(h(0));
                    if (curve.csit == Csit::limited)
                        theta = residual_phase_error(h(0), curve.feedback_bits);
                    else if (curve.csit == Csit::none)
                        theta = residual_phase_error(h(0), 0);
                }
                else
                {
                    switch (curve.csit)
                    {
                    case Csit::perfect:
                        gain = h.squaredNorm();
                        break;
                    case Csit::limited:
                    {
                        RngStream cb_rng = chan.substream(1);
                        const DirectionFeedback fb = rvq_feedback(h, curve.direction_bits, cb_rng);
                        const cplx z = h.dot(fb.codeword);
                        gain = std::norm(z);
                        theta = residual_phase_error(z, curve.phase_bits);
                        break;
                    }
                    case Csit::none:
                    {
                        const cplx z = std::conj(h(0));
                        gain = std::norm(z);
                        theta = residual_phase_error(z, 0);
                        break;
                    }
                    }
                }
                for (std::size_t p = 0; p < gammas.size(); ++p)
                    out[ci][p] = rate_siso_1bit(gammas[p] * gain, theta);
            }
        }

        void miso_multibit_curves(const ExperimentConfig &c, const CVector &h, RngStream &chan,
                                  const std::vector<double> &gammas, std::vector<std::vector<double>> &out)
        {
            for (std::size_t ci = 0; ci < c.curves.size(); ++ci)
            {
                const CurveSpec &curve = c.curves[ci];
                double gain = 0.0;
                switch (curve.csit)
                {
                case Csit::perfect:
                    gain = h.squaredNorm();
                    break;
                case Csit::limited:
                {
                    RngStream cb_rng = chan.substream(1);
                    gain = h.squaredNorm() * rvq_feedback(h, curve.feedback_bits, cb_rng).alignment;
                    break;
                }
                case Csit::none:
                    gain = std::norm(h(0));
                    break;
                }
                for (std::size_t p = 0; p < gammas.size(); ++p)
                    out[ci][p] = rate_miso_multibit(gammas[p], gain, curve.adc);
            }
        }

        void mimo_curves(const ExperimentConfig &c, RngStream &chan, const std::vector<double> &gammas,
                         std::vector<std::vector<double>> &out)
        {
            int nr_max = 1;
            for (const auto &curve : c.curves)
                nr_max = std::max(nr_max, curve.nr);
            // row-major draw: the first nr rows do not depend on nr_max
            const CMatrix h_full = sample_complex_gaussian(chan, nr_max, c.nt);

            std::map<int, CVector> eigen_beams;
            std::map<int, RvqCodebook> codebooks;
            for (std::size_t ci = 0; ci < c.curves.size(); ++ci)
            {
                const CurveSpec &curve = c.curves[ci];
                const CMatrix h = h_full.topRows(curve.nr);
                const CorrelationMap *map =
                    (curve.bound == MimoBound::exact && !curve.adc.is_infinite()) ? &correlation_map(curve.adc.bits())
                                                                                 : nullptr;
                auto evaluate = [&](const CVector &v, double gamma) {
                    return curve.bound == MimoBound::exact
                               ? rate_mimo_exact(h, v, gamma, curve.adc, MimoNoiseModel::power_consistent, map)
                               : rate_mimo_approx(h, v, gamma, curve.adc);
                };

                if (curve.csit == Csit::none)
                {
                    const CVector v = unit_e1(c.nt);
                    for (std::size_t p = 0; p < gammas.size(); ++p)
                        out[ci][p] = evaluate(v, gammas[p]);
                    continue;
                }

                auto cb_it = codebooks.find(curve.feedback_bits);
                if (cb_it == codebooks.end())
                {
                    RngStream cb_rng = chan.substream(1);
                    cb_it = codebooks.emplace(curve.feedback_bits, rvq_codebook(c.nt, curve.feedback_bits, cb_rng))
                                .first;
                }
                const RvqCodebook &cb = cb_it->second;

                const CVector *vmax = nullptr;
                if (curve.csit == Csit::perfect)
                {
                    auto it = eigen_beams.find(curve.nr);
                    if (it == eigen_beams.end())
                        it = eigen_beams.emplace(curve.nr, leading_eigenvector(h.adjoint() * h).vector).first;
                    vmax = &it->second;
                }

                for (std::size_t p = 0; p < gammas.size(); ++p)
                {
                    MimoBeamformer sel = select_mimo_beamformer(h, cb, gammas[p], curve.adc, false);
                    if (vmax)
                    {
                        const double m = mimo_selection_metric(h, *vmax, gammas[p], curve.adc);
                        if (m > sel.metric + tie_tolerance * std::max(1.0, std::abs(sel.metric)))
                            sel = {*vmax, cb.size(), m};
                    }
                    out[ci][p] = evaluate(sel.vector, gammas[p]);
                }
            }
        }

        void mu_curves(const ExperimentConfig &c, RngStream &chan, const std::vector<double> &gammas,
                       std::vector<std::vector<double>> &out, TrialStats *stats)
        {
            const int k_users = c.users;
            const CMatrix h = sample_complex_gaussian(chan, k_users, c.nt); // row k = h_k^*
            constexpr int max_attempts = 16;

            for (std::size_t ci = 0; ci < c.curves.size(); ++ci)
            {
                const CurveSpec &curve = c.curves[ci];
                CMatrix v;
                if (curve.csit == Csit::perfect)
                {
                    try
                    {
                        v = zf_precoder(h);
                    }
                    catch (const PrecodingError &e)
                    {
                        throw NumericalError(std::string("perfect-CSIT zero forcing on a rank-deficient channel: ") +
                                             e.what());
                    }
                }
                else
                {
                    for (int attempt = 0;; ++attempt)
                    {
                        CMatrix hhat(k_users, c.nt);
                        for (int k = 0; k < k_users; ++k)
                        {
                            RngStream cb_rng = chan.substream(1 + k + static_cast<std::uint64_t>(attempt) * k_users);
                            const CVector hk = h.row(k).adjoint();
                            hhat.row(k) = rvq_feedback(hk, curve.feedback_bits, cb_rng).codeword.adjoint();
                        }
                        try
                        {
                            v = zf_precoder(hhat);
                            break;
                        }
                        catch (const PrecodingError &)
                        {
                            if (stats)
                                ++stats->zf_failures;
                            if (attempt + 1 >= max_attempts)
                                throw;
                        }
                    }
                }
                for (std::size_t p = 0; p < gammas.size(); ++p)
                    out[ci][p] = rate_mu_zf(h, v, gammas[p] / k_users, curve.adc).mean();
            }
        }
    } // namespace

    std::vector<std::vector<double>> trial_rates(const ExperimentConfig &c, std::size_t trial,
                                                 const std::vector<double> &snr_db, TrialStats *stats)
    {
        std::vector<double> gammas(snr_db.size());
        std::transform(snr_db.begin(), snr_db.end(), gammas.begin(), db_to_linear);
        std::vector<std::vector<double>> out(c.curves.size(), std::vector<double>(snr_db.size(), 0.0));

        RngStream chan(c.seed, trial, 0);
        switch (c.scenario)
        {
        case Scenario::siso_1bit:
        case Scenario::miso_1bit:
        {
            const CVector h = sample_complex_gaussian(chan, c.nt);
            one_bit_curves(c, h, chan, gammas, out);
            break;
        }
        case Scenario::miso_multibit:
        {
            const CVector h = sample_complex_gaussian(chan, c.nt);
            miso_multibit_curves(c, h, chan, gammas, out);
            break;
        }
        case Scenario::mimo:
            mimo_curves(c, chan, gammas, out);
            break;
        case Scenario::mu_miso:
            mu_curves(c, chan, gammas, out, stats);
            break;
        }
        return out;
    }

    double run_trial(const ExperimentConfig &config, std::size_t curve, double snr_db, std::size_t trial)
    {
        validate(config);
        if (curve >= config.curves.size())
            throw std::out_of_range("run_trial: curve index out of range");
        ExperimentConfig one = config;
        one.curves = {config.curves[curve]};
        return trial_rates(one, trial, {snr_db})[0][0];
    }

    // ---- sweeps --------------------------------------------------------------------

    namespace
    {
        struct Moments
        {
            double mean;
            double std_error;
        };

        // Neumaier-compensated mean and a two-pass variance, both in input order.
        Moments moments(const std::vector<double> &x)
        {
            double sum = 0.0;
            double comp = 0.0;
            for (double v : x)
            {
                const double t = sum + v;
                comp += std::abs(sum) >= std::abs(v) ? (sum - t) + v : (v - t) + sum;
                sum = t;
            }
            const double n = static_cast<double>(x.size());
            const double mean = (sum + comp) / n;
            if (x.size() < 2)
                return {mean, 0.0};
            double ss = 0.0;
            for (double v : x)
                ss += (v - mean) * (v - mean);
            return {mean, std::sqrt(ss / (n - 1.0) / n)};
        }
    } // namespace

    SweepResult run_sweep(const ExperimentConfig &config, const SweepOptions &options)
    {
        validate(config);
        const std::size_t n_trials = config.trials;
        const std::size_t n_curves = config.curves.size();
        const std::size_t n_points = config.snr_db.size();

        // touch shared correlation tables before workers start
        if (config.scenario == Scenario::mimo)
            for (const auto &curve : config.curves)
                if (curve.bound == MimoBound::exact && !curve.adc.is_infinite())
                    (void)correlation_map(curve.adc.bits());

        std::vector<std::vector<std::vector<double>>> per_trial(n_trials);
        std::vector<TrialStats> stats(n_trials);

        unsigned threads = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.threads;
        threads = static_cast<unsigned>(std::min<std::size_t>(threads, n_trials));

        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::size_t failed_trial = 0;
        std::mutex failure_mutex;
        auto worker = [&] {
            for (;;)
            {
                const std::size_t t = next.fetch_add(1);
                if (t >= n_trials)
                    return;
                try
                {
                    per_trial[t] = trial_rates(config, t, config.snr_db, &stats[t]);
                }
                catch (...)
                {
                    std::lock_guard lock(failure_mutex);
                    if (!failure || t < failed_trial)
                    {
                        failure = std::current_exception();
                        failed_trial = t;
                    }
                    next.store(n_trials);
                    return;
                }
            }
        };
        if (threads <= 1)
            worker();
        else
        {
            std::vector<std::thread> pool;
            pool.reserve(threads);
            for (unsigned i = 0; i < threads; ++i)
                pool.emplace_back(worker);
            for (auto &th : pool)
                th.join();
        }
        if (failure)
        {
            try
            {
                std::rethrow_exception(failure);
            }
            catch (const NumericalError &e)
            {
                throw NumericalError("trial " + std::to_string(failed_trial) + ": " + e.what());
            }
        }

        std::size_t reference = n_curves;
        if (config.report == Report::loss)
            for (std::size_t ci = 0; ci < n_curves; ++ci)
                if (config.curves[ci].csit == Csit::perfect)
                {
                    reference = ci;
                    break;
                }

        SweepResult result;
        result.name = config.name;
        result.seed = config.seed;
        result.config_hash = config_hash(config);
        result.report = config.report;
        for (const auto &s : stats)
            result.zf_failures += s.zf_failures;

        std::vector<double> column(n_trials);
        for (std::size_t ci = 0; ci < n_curves; ++ci)
        {
            CurveResult curve{config.curves[ci], {}, {}};
            curve.rows.reserve(n_points);
            for (std::size_t p = 0; p < n_points; ++p)
            {
                for (std::size_t t = 0; t < n_trials; ++t)
                {
                    const double r = per_trial[t][ci][p];
                    column[t] = reference < n_curves ? per_trial[t][reference][p] - r : r;
                }
                const Moments m = moments(column);
                curve.rows.push_back({config.snr_db[p], m.mean, m.std_error, n_trials});
                if (options.keep_samples)
                    curve.samples.push_back(column);
            }
            result.curves.push_back(std::move(curve));
        }
        return result;
    }

    // ---- presets ---------------------------------------------------------------------

    std::vector<double> snr_grid(double start, double step, double stop)
    {
        if (!(step > 0.0) || !(stop >= start) || !std::isfinite(start) || !std::isfinite(stop))
            throw std::invalid_argument("snr_grid: need step > 0 and stop >= start");
        const auto n = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
        std::vector<double> g(n);
        for (std::size_t i = 0; i < n; ++i)
            g[i] = start + static_cast<double>(i) * step;
        return g;
    }

    std::vector<std::string> preset_names()
    {
        return {"fig4", "fig5a", "fig5b", "fig6", "fig7", "fig8", "fig9", "fig10", "fig11"};
    }

    namespace
    {
        CurveSpec curve(std::string label, Csit csit, AdcResolution adc)
        {
            CurveSpec s;
            s.label = std::move(label);
            s.csit = csit;
            s.adc = adc;
            return s;
        }

        CurveSpec split_curve(int b1, int b2)
        {
            CurveSpec s = curve("B1=" + std::to_string(b1) + " B2=" + std::to_string(b2), Csit::limited,
                                AdcResolution::finite(1));
            s.direction_bits = b1;
            s.phase_bits = b2;
            return s;
        }

        ExperimentConfig miso_allocation(std::string name, int nt)
        {
            ExperimentConfig c;
            c.name = std::move(name);
            c.scenario = Scenario::miso_1bit;
            c.nt = nt;
            c.snr_db = snr_grid(-10, 1, 20);
            const AdcResolution one = AdcResolution::finite(1);
            c.curves.push_back(curve("csit", Csit::perfect, one));
            for (int b2 = 0; b2 <= 4; ++b2)
                c.curves.push_back(split_curve(nt - b2, b2));
            c.curves.push_back(curve("no_csit", Csit::none, one));
            return c;
        }
    } // namespace

    ExperimentConfig preset(std::string_view name)
    {
        const AdcResolution one = AdcResolution::finite(1);
        ExperimentConfig c;
        c.name = std::string(name);

        if (name == "fig4")
        {
            c.scenario = Scenario::siso_1bit;
            c.nt = 1;
            c.snr_db = snr_grid(-10, 1, 30);
            c.curves.push_back(curve("csit", Csit::perfect, one));
            for (int b : {1, 2})
            {
                CurveSpec s = curve("B=" + std::to_string(b), Csit::limited, one);
                s.feedback_bits = b;
                c.curves.push_back(s);
            }
            c.curves.push_back(curve("no_csit", Csit::none, one));
            return c;
        }
        if (name == "fig5a")
            return miso_allocation("fig5a", 4);
        if (name == "fig5b")
            return miso_allocation("fig5b", 16);
        if (name == "fig6")
        {
            c.scenario = Scenario::miso_1bit;
            c.nt = 4;
            c.snr_db = snr_grid(-10, 1, 20);
            c.report = Report::loss;
            c.curves.push_back(curve("csit", Csit::perfect, one));
            for (auto [b1, b2] : {std::pair{1, 1}, {2, 1}, {3, 1}, {1, 2}, {2, 2}, {3, 2}})
                c.curves.push_back(split_curve(b1, b2));
            return c;
        }
        if (name == "fig7")
        {
            c.scenario = Scenario::miso_multibit;
            c.nt = 16;
            c.snr_db = snr_grid(-20, 1, 30);
            for (int b = 1; b <= 4; ++b)
            {
                const AdcResolution adc = AdcResolution::finite(b);
                c.curves.push_back(curve("csit b=" + std::to_string(b), Csit::perfect, adc));
                CurveSpec s = curve("B=8 b=" + std::to_string(b), Csit::limited, adc);
                s.feedback_bits = 8;
                c.curves.push_back(s);
            }
            return c;
        }
        if (name == "fig8")
        {
            c.scenario = Scenario::miso_multibit;
            c.nt = 16;
            c.snr_db = snr_grid(-20, 1, 30);
            const AdcResolution two = AdcResolution::finite(2);
            c.curves.push_back(curve("csit", Csit::perfect, two));
            for (int b : {2, 4, 8, 16})
            {
                CurveSpec s = curve("B=" + std::to_string(b), Csit::limited, two);
                s.feedback_bits = b;
                c.curves.push_back(s);
            }
            c.curves.push_back(curve("B=0", Csit::none, two));
            return c;
        }
        if (name == "fig9" || name == "fig10")
        {
            c.scenario = Scenario::mimo;
            c.nt = 16;
            const AdcResolution two = AdcResolution::finite(2);
            const bool nine = name == "fig9";
            c.snr_db = nine ? snr_grid(-20, 1, 30) : snr_grid(-20, 1, 40);
            const std::vector<int> receivers = nine ? std::vector<int>{4} : std::vector<int>{1, 4, 16};
            const std::vector<MimoBound> bounds =
                nine ? std::vector<MimoBound>{MimoBound::exact, MimoBound::approx} : std::vector<MimoBound>{MimoBound::approx};
            for (int nr : receivers)
                for (MimoBound bound : bounds)
                    for (Csit csit : {Csit::perfect, Csit::limited})
                    {
                        std::string label = std::string(csit == Csit::perfect ? "csit" : "B=4") +
                                            " nr=" + std::to_string(nr) + " " + std::string(to_string(bound));
                        CurveSpec s = curve(label, csit, two);
                        s.feedback_bits = 4;
                        s.nr = nr;
                        s.bound = bound;
                        c.curves.push_back(s);
                    }
            return c;
        }
        if (name == "fig11")
        {
            c.scenario = Scenario::mu_miso;
            c.nt = 4;
            c.users = 2;
            c.snr_db = snr_grid(-20, 1, 40);
            for (int b : {3, 4, 5})
                c.curves.push_back(curve("csit b=" + std::to_string(b), Csit::perfect, AdcResolution::finite(b)));
            for (auto [b, bits] : {std::pair{3, 6}, {4, 12}, {5, 18}})
            {
                CurveSpec s = curve("B=" + std::to_string(bits) + " b=" + std::to_string(b), Csit::limited,
                                    AdcResolution::finite(b));
                s.feedback_bits = bits;
                c.curves.push_back(s);
            }
            return c;
        }
        throw ConfigError("unknown preset '" + std::string(name) + "'");
    }

} // namespace adcfb
