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
#include "adcfb/codebook.hpp"
#include "adcfb/correlation.hpp"
#include "adcfb/numerics.hpp"
#include "adcfb/quantizer.hpp"
#include "adcfb/rate.hpp"
#include "adcfb/simulate.hpp"

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace adcfb;

namespace
{
    // None means infinite resolution / perfect feedback on the Python side
    AdcResolution to_adc(std::optional<int> b)
    {
        return b ? AdcResolution::finite(*b) : AdcResolution::infinite();
    }

    FeedbackBits to_feedback(std::optional<int> bits)
    {
        return bits ? FeedbackBits::finite(*bits) : FeedbackBits::perfect();
    }

    RvqBound to_form(const std::string &form)
    {
        if (form == "closed_form")
            return RvqBound::closed_form;
        if (form == "beta")
            return RvqBound::beta;
        throw std::invalid_argument("form must be 'closed_form' or 'beta'");
    }

    py::dict sweep_to_dict(const SweepResult &r)
    {
        py::dict curves;
        for (const auto &c : r.curves)
        {
            std::vector<double> snr, mean, se;
            for (const auto &row : c.rows)
            {
                snr.push_back(row.snr_db);
                mean.push_back(row.mean);
                se.push_back(row.std_error);
            }
            py::dict d;
            d["snr_db"] = snr;
            d["mean"] = mean;
            d["std_error"] = se;
            curves[py::str(c.spec.label)] = d;
        }
        py::dict out;
        out["name"] = r.name;
        out["seed"] = r.seed;
        out["config_hash"] = r.config_hash;
        out["report"] = std::string(to_string(r.report));
        out["zf_failures"] = r.zf_failures;
        out["curves"] = curves;
        return out;
    }
} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Achievable rates of finite-bit ADC links with limited feedback";
    m.attr("__version__") = std::string(cli::tool_version);

    py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);
    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

    // numerics
    m.def("q_function", &q_function, py::arg("x"));
    m.def("binary_entropy", &binary_entropy, py::arg("p"));
    m.def("bivariate_normal_cdf", &bivariate_normal_cdf, py::arg("x"), py::arg("y"), py::arg("rho"));
    m.def("leading_eigenvector", [](const CMatrix &a) {
        const EigenPair e = leading_eigenvector(a);
        return py::make_tuple(e.value, e.vector);
    }, py::arg("a"));

    // quantizer
    m.def("adc_spec", [](int b) {
        const AdcSpec s = adc_spec(b);
        py::dict d;
        d["bits"] = s.bits;
        d["stepsize"] = s.stepsize;
        d["nmse"] = s.nmse;
        d["uniform_distortion"] = uniform_quantizer_moments(s).distortion;
        return d;
    }, py::arg("b"));
    m.def("quantize", [](cplx x, int b, double re_power, double im_power) {
        return quantize(x, adc_spec(b), re_power, im_power);
    }, py::arg("x"), py::arg("b"), py::arg("re_power") = 0.5, py::arg("im_power") = 0.5);
    m.def("estimate_nmse", py::overload_cast<int, std::size_t, std::uint64_t>(&estimate_nmse),
          py::arg("b"), py::arg("num_samples"), py::arg("seed") = 1, py::call_guard<py::gil_scoped_release>());

    // correlation
    m.def("f_map", &f_map, py::arg("phi"), py::arg("b"));
    m.def("quantized_covariance", [](const CMatrix &c_yy, int b, bool exact) {
        const QuantizedCovariance q = exact ? quantized_covariance_exact(c_yy, b) : quantized_covariance_approx(c_yy, b);
        return py::make_tuple(q.c_rr, q.c_qq);
    }, py::arg("c_yy"), py::arg("b"), py::arg("exact") = true);

    // codebook
    m.def("phase_codebook", [](int bits) { return phase_codebook(bits).entries; }, py::arg("bits"));
    m.def("quantize_residual_phase", [](double angle, int bits) {
        const PhaseQuantization q = quantize_residual_phase(angle, phase_codebook(bits));
        return py::make_tuple(q.index, q.codeword, q.error);
    }, py::arg("angle"), py::arg("bits"));
    m.def("rvq_codebook", [](int nt, int bits, std::uint64_t seed) {
        RngStream rng(seed, 0, 0);
        return rvq_codebook(nt, bits, rng).codewords;
    }, py::arg("nt"), py::arg("bits"), py::arg("seed") = 1);
    m.def("zf_precoder", &zf_precoder, py::arg("hhat"));

    // rate
    m.def("rate_siso_1bit", &rate_siso_1bit, py::arg("snr"), py::arg("theta"));
    m.def("rate_miso_1bit", &rate_miso_1bit, py::arg("gamma"), py::arg("h"), py::arg("v"), py::arg("theta"));
    m.def("rate_miso_multibit", [](double gamma, double gain, std::optional<int> b) {
        return rate_miso_multibit(gamma, gain, to_adc(b));
    }, py::arg("gamma"), py::arg("gain"), py::arg("b"));
    m.def("rate_miso_multibit_rvq_bound", [](double gamma, int nt, std::optional<int> bits, std::optional<int> b,
                                             const std::string &form) {
        return rate_miso_multibit_rvq_bound(gamma, nt, to_feedback(bits), to_adc(b), to_form(form));
    }, py::arg("gamma"), py::arg("nt"), py::arg("bits"), py::arg("b"), py::arg("form") = "closed_form");
    m.def("rate_mimo", [](const CMatrix &h, const CVector &v, double gamma, std::optional<int> b, bool exact) {
        return exact ? rate_mimo_exact(h, v, gamma, to_adc(b)) : rate_mimo_approx(h, v, gamma, to_adc(b));
    }, py::arg("h"), py::arg("v"), py::arg("gamma"), py::arg("b"), py::arg("exact") = false);
    m.def("rate_mu_zf", [](const CMatrix &h, const CMatrix &v, double rho, std::optional<int> b) {
        return rate_mu_zf(h, v, rho, to_adc(b)).per_user;
    }, py::arg("h"), py::arg("v"), py::arg("rho"), py::arg("b"));
    m.def("rate_mu_zf_rvq_bound", [](double rho, int nt, int users, std::optional<int> bits, std::optional<int> b,
                                     const std::string &form) {
        return bits ? rate_mu_zf_rvq_bound(rho, nt, users, FeedbackBits::finite(*bits), to_adc(b), to_form(form))
                    : rate_mu_zf_csit_bound(rho, nt, users, to_adc(b));
    }, py::arg("rho"), py::arg("nt"), py::arg("users"), py::arg("bits"), py::arg("b"), py::arg("form") = "closed_form");
    m.def("bound_phase_power_loss", [](int bits) {
        const PhasePowerLoss l = bound_phase_power_loss(bits);
        return py::make_tuple(l.worst_case, l.average);
    }, py::arg("bits"));
    m.def("bound_mu_rate_loss", [](std::optional<int> b, int bits, int nt, int users, double rho) {
        const MuRateLoss l = bound_mu_rate_loss(to_adc(b), FeedbackBits::finite(bits), nt, users, rho);
        py::dict d;
        d["c1"] = l.c1;
        d["c2"] = l.c2;
        d["loss"] = l.loss;
        d["high_snr_loss"] = l.high_snr_loss;
        d["low_snr_power_loss_db"] = l.low_snr_power_loss_db;
        return d;
    }, py::arg("b"), py::arg("bits"), py::arg("nt"), py::arg("users"), py::arg("rho"));

    // simulate
    m.def("preset_names", &preset_names);
    m.def("format_preset", [](const std::string &name) { return format_config(preset(name)); }, py::arg("name"));
    m.def("run_experiment", [](const std::optional<std::string> &preset_name,
                               const std::optional<std::string> &config_text, std::optional<std::uint64_t> seed,
                               std::optional<std::size_t> trials, unsigned threads) {
        if (preset_name.has_value() == config_text.has_value())
            throw std::invalid_argument("pass exactly one of preset or config");
        ExperimentConfig c = preset_name ? preset(*preset_name) : cli::parse_config(*config_text).config;
        if (seed)
            c.seed = *seed;
        if (trials)
            c.trials = *trials;
        validate(c);
        SweepOptions so;
        so.threads = threads;
        SweepResult r;
        {
            py::gil_scoped_release release;
            r = run_sweep(c, so);
        }
        return sweep_to_dict(r);
    }, py::arg("preset") = py::none(), py::arg("config") = py::none(), py::arg("seed") = py::none(),
       py::arg("trials") = py::none(), py::arg("threads") = 1);

    // cli tables as CSV text
    m.def("constants_csv", [](std::optional<std::size_t> verify, std::uint64_t seed) {
        return cli::cmd_constants(verify, seed).to_csv();
    }, py::arg("verify") = py::none(), py::arg("seed") = 1);
    m.def("fmap_csv", [](int b, std::size_t points) { return cli::cmd_fmap(b, points).to_csv(); },
          py::arg("b"), py::arg("points") = 201);
}
