// Copyright (C) 2026 the galois-dsp authors
// SPDX-License-Identifier: Apache-2.0

#include "gdsp/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gdsp/cesaro.hpp"
#include "gdsp/filters.hpp"
#include "gdsp/json_io.hpp"

namespace gdsp::cli {

namespace {

using jio::json;

// Payload arguments take inline JSON, @path for a file, or "-" for stdin.
json parse_payload(const std::string& arg) {
    std::string text = arg;
    if (arg == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else if (!arg.empty() && arg[0] == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) throw BadInput("cannot read file " + arg.substr(1));
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    return json::parse(text);
}

void emit(std::ostream& out, const json& j) { out << j.dump() << "\n"; }

struct Options {
    std::int64_t p = 0;
    std::int64_t r = 1;
    std::int64_t m = 1;
    std::int64_t n = 0;
    std::int64_t value = 0;
    std::int64_t re = 0;
    std::int64_t im = 0;
    bool relaxed = false;
    std::string seq;
    std::string spectrum;
    std::string input;
    std::string f;
    std::string g;
    std::string request;
};

json plan_descriptor(const FfftPlan& plan) {
    return {{"p", plan.field().prime().value()},
            {"r", plan.field().r()},
            {"m", plan.field().m()},
            {"N", plan.length()}};
}

json ffft_output(const FfftPlan& plan, const FfftVector& v) {
    bool all_real = true;
    for (const auto& e : v) all_real = all_real && plan.field().is_real(e);
    return {{"plan", plan_descriptor(plan)},
            {"field", jio::ext_field_to_json(plan.field().carrier())},
            {"output", jio::ffft_vector_to_json(v)},
            {"all_real", all_real}};
}

int cmd_field_info(const Options& o, std::ostream& out) {
    const PrimeModulus p(o.p);
    json j = {{"p", p.value()}, {"supports_complex", p.supports_complex()}};
    if (p.supports_complex()) {
        const PolarContext ctx = PolarContext::build(p);
        j["group_order"] = p.value() * p.value() - 1;
        j["n_r"] = ctx.radial_order();
        j["n_theta"] = ctx.phase_order();
        j["generator"] = jio::gaussian_to_json(ctx.generator());
        j["epsilon"] = jio::gaussian_to_json(ctx.epsilon());
        j["g_r"] = ctx.radial_generator().value();
    }
    emit(out, j);
    return 0;
}

int cmd_modulus(const Options& o, bool complex_input, std::ostream& out) {
    const PrimeModulus p(o.p);
    if (complex_input) {
        const GaussianInteger z(o.re, o.im, p);
        emit(out, {{"p", p.value()},
                   {"input", jio::gaussian_to_json(z)},
                   {"modulus", complex_modulus(z).value()}});
    } else {
        const FpElement x(o.value, p);
        emit(out, {{"p", p.value()},
                   {"input", x.value()},
                   {"modulus", modulus_signed(x).value()}});
    }
    return 0;
}

int cmd_polar(const Options& o, std::ostream& out) {
    const PrimeModulus p(o.p);
    const PolarContext ctx = PolarContext::build(p);
    const GaussianInteger z(o.re, o.im, p);
    const PolarForm pf = to_polar(z, ctx);
    json j = jio::polar_context_to_json(ctx);
    j["input"] = jio::gaussian_to_json(z);
    j["r"] = pf.r.value();
    j["theta"] = pf.theta;
    emit(out, j);
    return 0;
}

int cmd_cesaro(const Options& o, std::ostream& out) {
    const PrimeModulus p(o.p);
    const SequenceSpec seq = jio::sequence_from_json(parse_payload(o.seq), p);
    const auto res = cesaro_sum(seq);
    if (res.is_convergent())
        emit(out, {{"sigma", res.sigma().value()}});
    else
        emit(out, {{"divergent", true}, {"reason", to_string(res.reason())}});
    return 0;
}

int cmd_fdtft(const Options& o, std::ostream& out) {
    const PrimeModulus p(o.p);
    const PolarContext ctx = PolarContext::build(p);
    const SequenceSpec seq = jio::sequence_from_json(parse_payload(o.seq), p);
    emit(out, jio::spectrum_to_json(fdtft(seq, ctx)));
    return 0;
}

int cmd_ifdtft(const Options& o, std::ostream& out) {
    const Spectrum X = jio::spectrum_from_json(parse_payload(o.spectrum));
    if (o.p != 0 && o.p != X.context().prime().value())
        throw BadInput("--p does not match the spectrum payload");
    emit(out, {{"p", X.context().prime().value()},
               {"window", jio::window_to_json(inverse_fdtft(X))}});
    return 0;
}

int cmd_ffft(const Options& o, bool inverse, std::ostream& out) {
    const FfftPlan plan = FfftPlan::make(PrimeModulus(o.p), o.r, o.m, o.n);
    const FfftVector in =
        jio::ffft_vector_from_json(parse_payload(o.input), plan.field().carrier());
    const FfftVector result =
        inverse ? iffft(in, plan) : ffft(in, plan, o.relaxed);
    emit(out, ffft_output(plan, result));
    return 0;
}

int cmd_conv(const Options& o, std::ostream& out) {
    const FfftPlan plan = FfftPlan::make(PrimeModulus(o.p), o.r, o.m, o.n);
    const auto& carrier = plan.field().carrier();
    const FfftVector f = jio::ffft_vector_from_json(parse_payload(o.f), carrier);
    const FfftVector g = jio::ffft_vector_from_json(parse_payload(o.g), carrier);
    emit(out, ffft_output(plan, cyclic_convolution(f, g, plan)));
    return 0;
}

int cmd_filter(const Options& o, std::ostream& out) {
    const PrimeModulus p(o.p);
    const json req = parse_payload(o.request);
    if (!req.is_object() || !req.contains("filter") || !req.contains("mode"))
        throw BadInput("filter request needs \"filter\" and \"mode\"");
    const std::string mode = req.at("mode").get<std::string>();
    const json& fj = req.at("filter");
    const std::string kind = fj.contains("kind")
                                 ? fj.at("kind").get<std::string>()
                                 : std::string();

    if (mode == "response") {
        if (kind != "iir")
            throw BadInput("response mode needs an IIR filter");
        std::vector<IirPole> poles;
        for (const auto& pj : fj.at("poles")) {
            if (!pj.is_array() || pj.size() != 2)
                throw BadInput("each pole must be a two element array [A, a]");
            poles.push_back({FpElement(pj[0].get<std::int64_t>(), p),
                             FpElement(pj[1].get<std::int64_t>(), p)});
        }
        const IirFilter filt(std::move(poles));
        emit(out, jio::spectrum_to_json(
                      iir_frequency_response(filt, PolarContext::build(p))));
        return 0;
    }

    if (kind != "fir") throw BadInput(mode + " mode needs an FIR filter");
    std::vector<FpElement> taps;
    for (const auto& t : fj.at("taps")) taps.emplace_back(t.get<std::int64_t>(), p);
    const FirFilter filt(std::move(taps));
    const Window x = jio::window_from_json(req.at("input"), p);

    if (mode == "time") {
        emit(out, {{"p", p.value()},
                   {"window", jio::window_to_json(fir_apply_time(filt, x))}});
        return 0;
    }
    if (mode == "ffft") {
        if (!req.contains("plan"))
            throw BadInput("ffft mode needs a \"plan\" {r, m, N}");
        const json& pj = req.at("plan");
        const FfftPlan plan =
            FfftPlan::make(p, pj.value("r", std::int64_t{1}),
                           pj.value("m", std::int64_t{1}),
                           pj.at("N").get<std::int64_t>());
        emit(out, {{"p", p.value()},
                   {"plan", plan_descriptor(plan)},
                   {"window", jio::window_to_json(fir_apply_ffft(filt, x, plan))}});
        return 0;
    }
    throw BadInput("unknown filter mode \"" + mode + "\"");
}

int cmd_lengths(const Options& o, std::ostream& out) {
    const PrimeModulus p(o.p);
    json list = json::array();
    std::int64_t group = 0;
    for (const auto& e : length_catalogue(p, o.r, o.m)) {
        list.push_back({{"N", e.n}, {"class", to_string(e.cls)}});
        group = std::max(group, e.n);
    }
    emit(out, {{"p", p.value()},
               {"r", o.r},
               {"m", o.m},
               {"group_order", group},
               {"lengths", std::move(list)}});
    return 0;
}

// Replays the built-in worked examples against hard-coded expectations.
int cmd_examples(std::ostream& out) {
    json results = json::array();
    bool all_pass = true;
    const auto record = [&](const char* name, bool pass, json detail) {
        detail["name"] = name;
        detail["pass"] = pass;
        results.push_back(std::move(detail));
        all_pass = all_pass && pass;
    };

    {
        // Periods 6, 1, 9 for {3^n} over GF(7), the unit step over GF(5),
        // and a two-sided {0 0 0 1 1 1 2 2 2} over GF(3).
        const PrimeModulus p7(7), p5(5), p3(3);
        const auto e1 =
            SequenceSpec::exponential(FpElement(1, p7), FpElement(3, p7));
        const auto e2 = SequenceSpec::unit_step(p5);
        const auto e3 = SequenceSpec::two_sided(p3, {0, 0, 0, 1, 1, 1, 2, 2, 2}, 0);
        const std::vector<std::int64_t> got = {e1.period().value_or(-1),
                                               e2.period().value_or(-1),
                                               e3.period().value_or(-1)};
        record("example-1-periods", got == std::vector<std::int64_t>{6, 1, 9},
               {{"periods", got}});
    }
    {
        // Cesaro sum of {3^n} over GF(7) is 3.
        const PrimeModulus p(7);
        const auto res = cesaro_sum(
            SequenceSpec::exponential(FpElement(1, p), FpElement(3, p)));
        const bool pass = res.is_convergent() && res.sigma().value() == 3;
        record("example-2-cesaro-sigma", pass,
               {{"sigma", res.is_convergent() ? res.sigma().value() : -1}});
    }
    {
        // Spectrum of a^n u[n] over GF(7) matches 1/(1 - a eps^(-theta))
        // for every nonzero a, divergence positions included.
        const PrimeModulus p(7);
        const PolarContext ctx = PolarContext::build(p);
        bool pass = true;
        for (std::int64_t a = 1; a < p.value(); ++a) {
            const auto seq =
                SequenceSpec::exponential(FpElement(1, p), FpElement(a, p));
            pass = pass && fdtft(seq, ctx) == fdtft_closed_form_exponential(
                                                  FpElement(1, p),
                                                  FpElement(a, p), ctx);
        }
        record("example-3-exponential-spectrum", pass, json::object());
    }
    {
        // Inverting the plane spectrum over GF(3) yields the Galois impulse.
        const PrimeModulus p(3);
        const PolarContext ctx = PolarContext::build(p);
        Spectrum plane(ctx);
        for (std::int64_t theta = 0; theta < plane.size(); ++theta)
            plane.set(theta, GaussianInteger::one(p));
        const Window w = inverse_fdtft(plane);
        json values = json::array();
        bool pass = w.start == 0 && w.values.size() == 8;
        for (std::size_t i = 0; i < w.values.size(); ++i) {
            values.push_back(w.values[i].value());
            pass = pass && w.values[i].value() == (i == 0 ? 1 : 0);
        }
        record("example-4-plane-spectrum-impulse", pass, {{"window", values}});
    }

    emit(out, {{"examples", std::move(results)}, {"all_pass", all_pass}});
    return all_pass ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"complex finite-field arithmetic, Cesaro sums, finite-field "
                 "Fourier transforms and filters"};
    app.require_subcommand(1);
    Options o;

    auto* c_info = app.add_subcommand("field-info", "Describe GF(p) and GL(p)");
    c_info->add_option("--p", o.p, "odd prime modulus")->required();

    auto* c_mod = app.add_subcommand(
        "modulus", "Signed modulus of a real or complex element");
    c_mod->add_option("--p", o.p)->required();
    auto* mod_value = c_mod->add_option("--value", o.value, "real element");
    auto* mod_re = c_mod->add_option("--re", o.re, "real part");
    auto* mod_im = c_mod->add_option("--im", o.im, "imaginary part");
    mod_value->excludes(mod_re)->excludes(mod_im);

    auto* c_polar = app.add_subcommand("polar", "Polar form r * epsilon^theta");
    c_polar->add_option("--p", o.p)->required();
    c_polar->add_option("--re", o.re)->required();
    c_polar->add_option("--im", o.im)->required();

    auto* c_cesaro = app.add_subcommand("cesaro", "Cesaro sum of a series");
    c_cesaro->add_option("--p", o.p)->required();
    c_cesaro->add_option("--seq", o.seq, "sequence JSON, @file or -")->required();

    auto* c_fdtft = app.add_subcommand("fdtft", "Discrete-time Fourier "
                                                "transform over GL(p)");
    c_fdtft->add_option("--p", o.p)->required();
    c_fdtft->add_option("--seq", o.seq, "sequence JSON, @file or -")->required();

    auto* c_ifdtft = app.add_subcommand("ifdtft", "Invert a spectrum");
    c_ifdtft->add_option("--p", o.p, "optional cross-check against payload");
    c_ifdtft->add_option("--spectrum", o.spectrum, "spectrum JSON, @file or -")
        ->required();

    auto* c_ffft = app.add_subcommand("ffft", "Complex-kernel transform over "
                                              "GL(q^m)");
    auto* c_iffft = app.add_subcommand("iffft", "Inverse complex-kernel "
                                                "transform");
    for (auto* c : {c_ffft, c_iffft}) {
        c->add_option("--p", o.p)->required();
        c->add_option("--r", o.r, "q = p^r");
        c->add_option("--m", o.m, "alphabet GL(q^m)");
        c->add_option("--N", o.n, "transform length")->required();
        c->add_option("--input", o.input, "vector JSON, @file or -")->required();
    }
    c_ffft->add_flag("--relaxed", o.relaxed,
                     "accept carrier-valued input components");

    auto* c_conv = app.add_subcommand("conv", "Cyclic convolution");
    c_conv->add_option("--p", o.p)->required();
    c_conv->add_option("--r", o.r);
    c_conv->add_option("--m", o.m);
    c_conv->add_option("--N", o.n)->required();
    c_conv->add_option("--f", o.f, "vector JSON, @file or -")->required();
    c_conv->add_option("--g", o.g, "vector JSON, @file or -")->required();

    auto* c_filter = app.add_subcommand("filter", "Apply an FIR/IIR filter");
    c_filter->add_option("--p", o.p)->required();
    c_filter->add_option("--json", o.request,
                         "{filter, input, mode, plan?} JSON, @file or -")
        ->required();

    auto* c_lengths = app.add_subcommand("lengths", "Admissible FFFT lengths");
    c_lengths->add_option("--p", o.p)->required();
    c_lengths->add_option("--r", o.r);
    c_lengths->add_option("--m", o.m);

    auto* c_examples =
        app.add_subcommand("examples", "Replay the worked examples");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (c_info->parsed()) return cmd_field_info(o, out);
        if (c_mod->parsed()) {
            if (mod_value->count() > 0) return cmd_modulus(o, false, out);
            if (mod_re->count() > 0 && mod_im->count() > 0)
                return cmd_modulus(o, true, out);
            throw BadInput("pass either --value or both --re and --im");
        }
        if (c_polar->parsed()) return cmd_polar(o, out);
        if (c_cesaro->parsed()) return cmd_cesaro(o, out);
        if (c_fdtft->parsed()) return cmd_fdtft(o, out);
        if (c_ifdtft->parsed()) return cmd_ifdtft(o, out);
        if (c_ffft->parsed()) return cmd_ffft(o, false, out);
        if (c_iffft->parsed()) return cmd_ffft(o, true, out);
        if (c_conv->parsed()) return cmd_conv(o, out);
        if (c_filter->parsed()) return cmd_filter(o, out);
        if (c_lengths->parsed()) return cmd_lengths(o, out);
        if (c_examples->parsed()) return cmd_examples(out);
        throw BadInput("no subcommand dispatched");  // unreachable
    } catch (const Error& e) {
        emit(out, {{"code", e.code()}, {"message", e.what()}});
        return 1;
    } catch (const json::exception& e) {
        emit(out, {{"code", "bad-input"}, {"message", e.what()}});
        return 1;
    }
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("galois-dsp");
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace gdsp::cli
