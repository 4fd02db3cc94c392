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

#include "adcfb/correlation.hpp"
#include "adcfb/quantizer.hpp"
#include "adcfb/rate.hpp"

#include <algorithm>
#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>
#include <unistd.h>

namespace adcfb::cli
{
    // ---- OutputTable --------------------------------------------------------

    std::string format_number(double x)
    {
        if (std::isnan(x))
            return "nan";
        if (std::isinf(x))
            return x > 0 ? "inf" : "-inf";
        if (x == 0.0)
            return "0"; // folds -0
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.12g", x);
        return buf;
    }

    void OutputTable::add_row(std::vector<std::string> row)
    {
        if (row.size() != columns.size())
            throw std::logic_error("OutputTable: row width differs from the header");
        rows.push_back(std::move(row));
    }

    std::size_t OutputTable::column(std::string_view name) const
    {
        for (std::size_t i = 0; i < columns.size(); ++i)
            if (columns[i] == name)
                return i;
        throw std::out_of_range("OutputTable: no column '" + std::string(name) + "'");
    }

    double OutputTable::number(std::size_t row, std::string_view name) const
    {
        const std::string &cell = rows.at(row).at(column(name));
        char *end = nullptr;
        const double v = std::strtod(cell.c_str(), &end);
        if (end == cell.c_str() || *end != '\0')
            throw std::invalid_argument("OutputTable: cell '" + cell + "' is not a number");
        return v;
    }

    std::string OutputTable::to_csv() const
    {
        std::string out;
        for (const auto &[key, value] : metadata)
            out += "# " + key + ": " + value + '\n';
        auto line = [&out](const std::vector<std::string> &cells) {
            for (std::size_t i = 0; i < cells.size(); ++i)
            {
                if (i)
                    out += ',';
                out += cells[i];
            }
            out += '\n';
        };
        line(columns);
        for (const auto &r : rows)
            line(r);
        return out;
    }

    namespace
    {
        std::vector<std::string> split(std::string_view s, char sep)
        {
            std::vector<std::string> parts;
            std::size_t start = 0;
            for (;;)
            {
                const std::size_t pos = s.find(sep, start);
                parts.emplace_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
                if (pos == std::string_view::npos)
                    return parts;
                start = pos + 1;
            }
        }

        std::string trim(std::string_view s)
        {
            const auto b = s.find_first_not_of(" \t\r");
            if (b == std::string_view::npos)
                return {};
            const auto e = s.find_last_not_of(" \t\r");
            return std::string(s.substr(b, e - b + 1));
        }
    } // namespace

    OutputTable OutputTable::from_csv(std::string_view text)
    {
        OutputTable t;
        bool header = false;
        for (const std::string &raw : split(text, '\n'))
        {
            if (raw.empty())
                continue;
            if (raw.front() == '#')
            {
                if (header)
                    throw std::invalid_argument("OutputTable: metadata after the header line");
                const std::string body = raw.size() > 2 ? raw.substr(2) : std::string();
                const auto colon = body.find(": ");
                if (colon == std::string::npos)
                    t.metadata.emplace_back(body, "");
                else
                    t.metadata.emplace_back(body.substr(0, colon), body.substr(colon + 2));
                continue;
            }
            if (!header)
            {
                t.columns = split(raw, ',');
                header = true;
            }
            else
            {
                std::vector<std::string> row = split(raw, ',');
                if (row.size() != t.columns.size())
                    throw std::invalid_argument("OutputTable: ragged row in CSV input");
                t.rows.push_back(std::move(row));
            }
        }
        return t;
    }

    void write_file_atomic(const std::string &path, std::string_view contents)
    {
        namespace fs = std::filesystem;
        if (path == "-")
        {
            std::cout.write(contents.data(), static_cast<std::streamsize>(contents.size()));
            std::cout.flush();
            return;
        }
        fs::path target(path);
        std::error_code status_ec;
        const fs::file_status st = fs::status(target, status_ec);
        const bool stream_path = path.starts_with("/dev/") || path.starts_with("/proc/");
        if (stream_path || (fs::exists(st) && !fs::is_regular_file(st)))
        {
            // devices, pipes and descriptor aliases are written in place
            std::ofstream os(target, std::ios::binary | std::ios::app);
            if (!os)
                throw std::runtime_error("cannot open '" + path + "' for writing");
            os.write(contents.data(), static_cast<std::streamsize>(contents.size()));
            os.flush();
            if (!os)
                throw std::runtime_error("write to '" + path + "' failed");
            return;
        }
        // replace the file a symlink points to, not the link
        if (fs::is_symlink(fs::symlink_status(target, status_ec)))
            target = fs::canonical(target);
        fs::path tmp = target;
        tmp += ".tmp." + std::to_string(::getpid());
        {
            std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
            if (!os)
                throw std::runtime_error("cannot open '" + tmp.string() + "' for writing");
            os.write(contents.data(), static_cast<std::streamsize>(contents.size()));
            os.flush();
            if (!os)
            {
                std::error_code ec;
                fs::remove(tmp, ec);
                throw std::runtime_error("write to '" + tmp.string() + "' failed");
            }
        }
        std::error_code ec;
        fs::rename(tmp, target, ec);
        if (ec)
        {
            fs::remove(tmp, ec);
            throw std::runtime_error("cannot move output into place at '" + path + "'");
        }
    }

    // ---- value parsing -------------------------------------------------------------

    namespace
    {
        double parse_double(std::string_view s, bool allow_infinite)
        {
            const std::string t = trim(s);
            if (allow_infinite && t == "-inf")
                return -std::numeric_limits<double>::infinity();
            double v = 0.0;
            const auto r = std::from_chars(t.data(), t.data() + t.size(), v);
            if (t.empty() || r.ec != std::errc() || r.ptr != t.data() + t.size() || !std::isfinite(v))
                throw std::invalid_argument("'" + t + "' is not a finite number");
            return v;
        }

        template <typename Int>
        Int parse_int(std::string_view s)
        {
            const std::string t = trim(s);
            Int v{};
            const auto r = std::from_chars(t.data(), t.data() + t.size(), v);
            if (t.empty() || r.ec != std::errc() || r.ptr != t.data() + t.size())
                throw std::invalid_argument("'" + t + "' is not an integer");
            return v;
        }

        AdcResolution parse_adc(std::string_view s)
        {
            const std::string t = trim(s);
            if (t == "inf")
                return AdcResolution::infinite();
            return AdcResolution::finite(parse_int<int>(t));
        }
    } // namespace

    std::vector<double> parse_grid(std::string_view text, bool allow_infinite)
    {
        std::vector<double> grid;
        for (const std::string &item : split(text, ','))
        {
            const std::vector<std::string> parts = split(item, ':');
            if (parts.size() == 1)
                grid.push_back(parse_double(parts[0], allow_infinite));
            else if (parts.size() == 3)
            {
                const auto range = snr_grid(parse_double(parts[0], false), parse_double(parts[1], false),
                                            parse_double(parts[2], false));
                grid.insert(grid.end(), range.begin(), range.end());
            }
            else
                throw std::invalid_argument("'" + trim(item) + "' is neither a value nor start:step:stop");
        }
        if (grid.empty())
            throw std::invalid_argument("empty grid");
        return grid;
    }

    // ---- config files -------------------------------------------------------------

    ParsedConfig parse_config(std::string_view text, std::string_view source)
    {
        struct Entry
        {
            std::string value;
            std::size_t line;
        };
        std::map<std::string, Entry> entries;
        static const std::vector<std::string> global_keys = {"preset", "name",   "scenario", "nt", "k",
                                                             "trials", "seed",   "report",   "snr_db"};
        static const std::vector<std::string> curve_keys = {"label", "csit", "b", "B", "b1", "b2", "nr", "bound"};
        auto known = [](const std::vector<std::string> &keys, const std::string &k) {
            return std::find(keys.begin(), keys.end(), k) != keys.end();
        };
        auto error = [&](std::size_t line, const std::string &key, const std::string &msg) -> ConfigError {
            std::string where = std::string(source) + ":" + std::to_string(line) + ": ";
            if (!key.empty())
                where += "key '" + key + "': ";
            return ConfigError(where + msg);
        };

        std::size_t line_no = 0;
        for (const std::string &raw : split(text, '\n'))
        {
            ++line_no;
            std::string line = raw;
            if (const auto hash = line.find('#'); hash != std::string::npos)
                line.erase(hash);
            line = trim(line);
            if (line.empty())
                continue;
            const auto eq = line.find('=');
            if (eq == std::string::npos)
                throw error(line_no, "", "expected key=value");
            const std::string key = trim(line.substr(0, eq));
            const std::string value = trim(line.substr(eq + 1));
            if (!known(global_keys, key) && !known(curve_keys, key))
                throw error(line_no, key, "unknown key");
            if (value.empty())
                throw error(line_no, key, "empty value");
            if (!entries.emplace(key, Entry{value, line_no}).second)
                throw error(line_no, key, "duplicate key (first set on line " +
                                              std::to_string(entries.at(key).line) + ")");
        }

        ParsedConfig out;
        ExperimentConfig &c = out.config;
        auto with = [&](const std::string &key, auto &&apply) {
            const auto it = entries.find(key);
            if (it == entries.end())
                return;
            try
            {
                apply(it->second.value);
            }
            catch (const ConfigError &e)
            {
                throw error(it->second.line, key, e.what());
            }
            catch (const std::exception &e)
            {
                throw error(it->second.line, key, e.what());
            }
        };

        with("preset", [&](const std::string &v) { c = preset(v); });
        with("name", [&](const std::string &v) { c.name = v; });
        with("scenario", [&](const std::string &v) { c.scenario = parse_scenario(v); });
        with("nt", [&](const std::string &v) { c.nt = parse_int<int>(v); });
        with("k", [&](const std::string &v) { c.users = parse_int<int>(v); });
        with("trials", [&](const std::string &v) { c.trials = parse_int<std::size_t>(v); });
        with("seed", [&](const std::string &v) {
            c.seed = parse_int<std::uint64_t>(v);
            out.seed_given = true;
        });
        with("report", [&](const std::string &v) { c.report = parse_report(v); });
        with("snr_db", [&](const std::string &v) { c.snr_db = parse_grid(v); });

        // per-curve lists with length-1 broadcasting
        std::size_t n_curves = 0;
        std::string widest;
        std::map<std::string, std::vector<std::string>> lists;
        for (const auto &key : curve_keys)
        {
            const auto it = entries.find(key);
            if (it == entries.end())
                continue;
            std::vector<std::string> items = split(it->second.value, ',');
            for (auto &item : items)
            {
                item = trim(item);
                if (item.empty())
                    throw error(it->second.line, key, "empty list item");
            }
            if (items.size() > n_curves)
            {
                n_curves = items.size();
                widest = key;
            }
            lists.emplace(key, std::move(items));
        }
        for (const auto &[key, items] : lists)
            if (items.size() != 1 && items.size() != n_curves)
                throw error(entries.at(key).line, key,
                            "list has " + std::to_string(items.size()) + " items but '" + widest + "' has " +
                                std::to_string(n_curves));

        if (n_curves > 0)
        {
            c.curves.assign(n_curves, CurveSpec{});
            for (std::size_t i = 0; i < n_curves; ++i)
                c.curves[i].label = "curve" + std::to_string(i + 1);
            for (const auto &[key, items] : lists)
            {
                const std::size_t line = entries.at(key).line;
                for (std::size_t i = 0; i < n_curves; ++i)
                {
                    const std::string &v = items.size() == 1 ? items[0] : items[i];
                    CurveSpec &s = c.curves[i];
                    try
                    {
                        if (key == "label")
                            s.label = v;
                        else if (key == "csit")
                            s.csit = parse_csit(v);
                        else if (key == "b")
                            s.adc = parse_adc(v);
                        else if (key == "B")
                            s.feedback_bits = parse_int<int>(v);
                        else if (key == "b1")
                            s.direction_bits = parse_int<int>(v);
                        else if (key == "b2")
                            s.phase_bits = parse_int<int>(v);
                        else if (key == "nr")
                            s.nr = parse_int<int>(v);
                        else if (key == "bound")
                            s.bound = parse_mimo_bound(v);
                    }
                    catch (const std::exception &e)
                    {
                        throw error(line, key, "item " + std::to_string(i + 1) + ": " + e.what());
                    }
                }
            }
            if (lists.count("label") && lists.at("label").size() == 1 && n_curves > 1)
                throw error(entries.at("label").line, "label", "a single label cannot name several curves");
        }

        try
        {
            validate(c);
        }
        catch (const ConfigError &e)
        {
            // point at the most relevant line when the message names a key
            const std::string msg = e.what();
            for (const auto &[key, entry] : entries)
                if (msg.rfind(key + ":", 0) == 0)
                    throw error(entry.line, key, msg.substr(key.size() + 2));
            throw ConfigError(std::string(source) + ": " + msg);
        }
        return out;
    }

    ParsedConfig load_config(const std::string &path)
    {
        std::ifstream is(path, std::ios::binary);
        if (!is)
            throw ConfigError("cannot read config file '" + path + "'");
        std::ostringstream ss;
        ss << is.rdbuf();
        return parse_config(ss.str(), path);
    }

    // ---- commands -----------------------------------------------------------------

    namespace
    {
        void base_metadata(OutputTable &t, std::string_view command)
        {
            t.metadata.emplace_back("tool", "adcfb " + std::string(tool_version));
            t.metadata.emplace_back("command", std::string(command));
        }

        std::string hex64(std::uint64_t x)
        {
            char buf[20];
            std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
            return buf;
        }
    } // namespace

    OutputTable cmd_constants(std::optional<std::size_t> verify_samples, std::uint64_t seed)
    {
        OutputTable t;
        base_metadata(t, "constants");
        t.columns = {"b", "stepsize", "nmse", "bussgang_gain_db", "sqr_bits"};
        if (verify_samples)
        {
            t.metadata.emplace_back("verify_samples", std::to_string(*verify_samples));
            t.metadata.emplace_back("seed", std::to_string(seed));
            t.columns.push_back("nmse_mc");
            t.columns.push_back("rel_error");
            t.columns.push_back("nmse_uniform");
        }
        for (int b = min_adc_bits; b <= max_adc_bits; ++b)
        {
            const AdcSpec s = adc_spec(b);
            std::vector<std::string> row = {std::to_string(b), format_number(s.stepsize), format_number(s.nmse),
                                            format_number(linear_to_db(1.0 - s.nmse)),
                                            format_number(std::log2(1.0 / s.nmse))};
            if (verify_samples)
            {
                const double mc = estimate_nmse(s, *verify_samples, seed + static_cast<std::uint64_t>(b));
                row.push_back(format_number(mc));
                row.push_back(format_number(std::abs(mc - s.nmse) / s.nmse));
                row.push_back(format_number(uniform_quantizer_moments(s).distortion));
            }
            t.add_row(std::move(row));
        }
        return t;
    }

    OutputTable cmd_fmap(int bits, std::size_t grid_points)
    {
        if (grid_points < 3)
            throw UsageError("fmap: at least 3 grid points are required");
        const AdcSpec spec = adc_spec(bits);
        OutputTable t;
        base_metadata(t, "fmap");
        t.metadata.emplace_back("bits", std::to_string(bits));
        t.metadata.emplace_back("grid_points", std::to_string(grid_points));
        t.columns = {"phi", "f", "linear"};
        const double step = 2.0 / static_cast<double>(grid_points - 1);
        for (std::size_t i = 0; i < grid_points; ++i)
        {
            // mirror the lower half so the grid is symmetric to the last bit
            double phi = -1.0 + static_cast<double>(i) * step;
            if (i == grid_points - 1)
                phi = 1.0;
            if (2 * i + 1 == grid_points)
                phi = 0.0;
            if (2 * i + 1 > grid_points)
                phi = 1.0 - static_cast<double>(grid_points - 1 - i) * step;
            t.add_row({format_number(phi), format_number(f_map(phi, bits)),
                       format_number(spec.bussgang_gain() * phi)});
        }
        return t;
    }

    OutputTable cmd_rate(const RateOptions &o)
    {
        if (o.snr_db.empty())
            throw UsageError("rate: --snr grid is required");
        OutputTable t;
        base_metadata(t, "rate");
        t.metadata.emplace_back("scenario", o.scenario);

        auto need = [&](bool ok, const char *msg) {
            if (!ok)
                throw UsageError(std::string("rate: ") + msg);
        };
        auto forbid = [&](bool present, const char *flag) {
            if (present)
                throw UsageError("rate: " + std::string(flag) + " does not apply to scenario '" + o.scenario + "'");
        };

        if (o.scenario == "siso-1bit")
        {
            forbid(o.nt != 0 && o.nt != 1, "--nt");
            forbid(o.users != 0, "--k");
            forbid(o.direction_bits || o.phase_bits, "--b1/--b2");
            need(!o.adc || (!o.adc->is_infinite() && o.adc->bits() == 1), "siso-1bit requires b = 1");
            need(o.feedback_bits.has_value(), "siso-1bit needs --B (phase feedback bits)");
            const PhasePowerLoss loss = bound_phase_power_loss(*o.feedback_bits);
            const double worst = std::ldexp(std::numbers::pi, -(*o.feedback_bits + 2));
            t.metadata.emplace_back("B", std::to_string(*o.feedback_bits));
            t.metadata.emplace_back("gain", "|h|^2 = 1");
            t.columns = {"snr_db", "rate_csit", "rate_worst_phase", "rate_average_power_loss"};
            for (double s : o.snr_db)
            {
                const double g = db_to_linear(s);
                t.add_row({format_number(s), format_number(rate_siso_1bit(g, 0.0)),
                           format_number(rate_siso_1bit(g, worst)),
                           format_number(rate_siso_1bit(g * loss.average, 0.0))});
            }
            return t;
        }
        if (o.scenario == "miso-1bit")
        {
            need(o.nt >= 2, "miso-1bit needs --nt >= 2");
            forbid(o.users != 0, "--k");
            forbid(o.feedback_bits.has_value(), "--B (use --b1 and --b2)");
            need(!o.adc || (!o.adc->is_infinite() && o.adc->bits() == 1), "miso-1bit requires b = 1");
            need(o.direction_bits && o.phase_bits, "miso-1bit needs --b1 and --b2");
            const FeedbackBits b1 = FeedbackBits::finite(*o.direction_bits);
            const FeedbackBits b2 = FeedbackBits::finite(*o.phase_bits);
            const double bound = bound_miso_power_loss(b1, b2, o.nt);
            t.metadata.emplace_back("nt", std::to_string(o.nt));
            t.metadata.emplace_back("b1", b1.to_string());
            t.metadata.emplace_back("b2", b2.to_string());
            t.metadata.emplace_back("power_loss_db", format_number(linear_to_db(bound)));
            t.columns = {"snr_db", "rate_csit", "rate_power_loss_bound", "requirement_met"};
            for (double s : o.snr_db)
            {
                const double g = db_to_linear(s);
                const FeedbackRequirement req = check_miso_feedback_requirement(b1, b2, o.nt, g);
                t.add_row({format_number(s), format_number(rate_siso_1bit(g * o.nt, 0.0)),
                           format_number(rate_siso_1bit(g * o.nt * bound, 0.0)), req.satisfied ? "1" : "0"});
            }
            return t;
        }
        if (o.scenario == "miso-multibit")
        {
            need(o.nt >= 2, "miso-multibit needs --nt >= 2");
            forbid(o.users != 0, "--k");
            forbid(o.direction_bits || o.phase_bits, "--b1/--b2");
            need(o.adc.has_value(), "miso-multibit needs --b");
            need(o.feedback_bits.has_value(), "miso-multibit needs --B");
            const FeedbackBits fb = FeedbackBits::finite(*o.feedback_bits);
            t.metadata.emplace_back("nt", std::to_string(o.nt));
            t.metadata.emplace_back("b", o.adc->to_string());
            t.metadata.emplace_back("B", fb.to_string());
            t.metadata.emplace_back("low_snr_power_loss_db", format_number(linear_to_db(1.0 - fb.rvq_residual(o.nt))));
            t.columns = {"snr_db", "rate_csit", "rate_rvq_beta", "rate_rvq_lower"};
            for (double s : o.snr_db)
            {
                const double g = db_to_linear(s);
                t.add_row({format_number(s),
                           format_number(rate_miso_multibit_rvq_bound(g, o.nt, FeedbackBits::perfect(), *o.adc)),
                           format_number(rate_miso_multibit_rvq_bound(g, o.nt, fb, *o.adc, RvqBound::beta)),
                           format_number(rate_miso_multibit_rvq_bound(g, o.nt, fb, *o.adc))});
            }
            return t;
        }
        if (o.scenario == "mu-bound")
        {
            need(o.nt >= 2, "mu-bound needs --nt >= 2");
            need(o.users >= 2 && o.users <= o.nt, "mu-bound needs 2 <= --k <= --nt");
            forbid(o.direction_bits || o.phase_bits, "--b1/--b2");
            need(o.adc.has_value(), "mu-bound needs --b");
            need(o.feedback_bits.has_value(), "mu-bound needs --B");
            const FeedbackBits fb = FeedbackBits::finite(*o.feedback_bits);
            const FeedbackScaling rule = o.adc->is_infinite() ? FeedbackScaling{0, o.nt, 2.0 * (o.nt - 1), false}
                                                               : feedback_bits_for_rate_loss(o.adc->bits(), o.nt);
            t.metadata.emplace_back("nt", std::to_string(o.nt));
            t.metadata.emplace_back("k", std::to_string(o.users));
            t.metadata.emplace_back("b", o.adc->to_string());
            t.metadata.emplace_back("B", fb.to_string());
            t.metadata.emplace_back("scaling_slope", format_number(rule.slope));
            t.metadata.emplace_back("scaling_regime_ok", rule.approximation_ok ? "1" : "0");
            t.columns = {"snr_db", "rho", "rate_csit", "rate_rvq_beta", "rate_rvq_lower",
                         "loss_bound", "high_snr_loss", "low_snr_power_loss_db", "c1", "c2"};
            for (double s : o.snr_db)
            {
                const double rho = db_to_linear(s) / o.users;
                const MuRateLoss l = bound_mu_rate_loss(*o.adc, fb, o.nt, o.users, rho);
                t.add_row({format_number(s), format_number(rho),
                           format_number(rate_mu_zf_csit_bound(rho, o.nt, o.users, *o.adc)),
                           format_number(rate_mu_zf_rvq_bound(rho, o.nt, o.users, fb, *o.adc, RvqBound::beta)),
                           format_number(rate_mu_zf_rvq_bound(rho, o.nt, o.users, fb, *o.adc)),
                           format_number(l.loss), format_number(l.high_snr_loss),
                           format_number(l.low_snr_power_loss_db), format_number(l.c1), format_number(l.c2)});
            }
            return t;
        }
        throw UsageError("rate: unknown scenario '" + o.scenario +
                         "' (expected siso-1bit, miso-1bit, miso-multibit or mu-bound)");
    }

    ExperimentConfig resolve_experiment(const ExperimentOptions &o)
    {
        if (o.preset.has_value() == o.config_path.has_value())
            throw UsageError("experiment: pass exactly one of --preset or --config");
        ExperimentConfig c;
        bool seed_given = false;
        if (o.preset)
            c = preset(*o.preset);
        else
        {
            ParsedConfig parsed = load_config(*o.config_path);
            c = std::move(parsed.config);
            seed_given = parsed.seed_given;
        }
        if (o.seed)
            c.seed = *o.seed;
        else if (!seed_given && o.default_seed)
            c.seed = *o.default_seed;
        if (o.trials)
            c.trials = *o.trials;
        validate(c);
        return c;
    }

    OutputTable sweep_table(const ExperimentConfig &c, const SweepResult &r)
    {
        OutputTable t;
        base_metadata(t, "experiment");
        t.metadata.emplace_back("experiment", c.name);
        t.metadata.emplace_back("seed", std::to_string(r.seed));
        t.metadata.emplace_back("config_hash", hex64(r.config_hash));
        t.metadata.emplace_back("report", std::string(to_string(r.report)));
        t.metadata.emplace_back("zf_failures", std::to_string(r.zf_failures));
        for (const std::string &line : split(format_config(c), '\n'))
            if (!line.empty())
                t.metadata.emplace_back("config", line);
        t.columns = {"curve", "snr_db", "mean", "std_error", "trials"};
        for (const auto &curve : r.curves)
            for (const auto &row : curve.rows)
                t.add_row({curve.spec.label, format_number(row.snr_db), format_number(row.mean),
                           format_number(row.std_error), std::to_string(row.trials)});
        return t;
    }

    OutputTable cmd_experiment(const ExperimentOptions &o)
    {
        const ExperimentConfig c = resolve_experiment(o);
        SweepOptions so;
        so.threads = o.threads;
        return sweep_table(c, run_sweep(c, so));
    }

} // namespace adcfb::cli
