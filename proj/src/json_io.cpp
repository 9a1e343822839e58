// Copyright (C) 2026 the galois-dsp authors
// SPDX-License-Identifier: Apache-2.0

#include "gdsp/json_io.hpp"

namespace gdsp::jio {

namespace {

std::int64_t as_int(const json& j, const char* what) {
    if (!j.is_number_integer())
        throw BadInput(std::string(what) + " must be an integer");
    return j.get<std::int64_t>();
}

std::vector<std::int64_t> as_int_list(const json& j, const char* what) {
    if (!j.is_array()) throw BadInput(std::string(what) + " must be an array");
    std::vector<std::int64_t> out;
    out.reserve(j.size());
    for (const auto& e : j) out.push_back(as_int(e, what));
    return out;
}

const json& field_at(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw BadInput(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

json fp_list_to_json(const std::vector<FpElement>& v) {
    json out = json::array();
    for (const auto& e : v) out.push_back(e.value());
    return out;
}

}  // namespace

json gaussian_to_json(const GaussianInteger& z) {
    return json::array({z.re().value(), z.im().value()});
}

GaussianInteger gaussian_from_json(const json& j, PrimeModulus p) {
    if (!j.is_array() || j.size() != 2)
        throw BadInput("complex value must be a two element array [re, im]");
    return {as_int(j[0], "re"), as_int(j[1], "im"), p};
}

json window_to_json(const Window& w) {
    return {{"start", w.start}, {"values", fp_list_to_json(w.values)}};
}

Window window_from_json(const json& j, PrimeModulus p) {
    Window w;
    w.start = as_int(field_at(j, "start"), "start");
    for (std::int64_t v : as_int_list(field_at(j, "values"), "values"))
        w.values.emplace_back(v, p);
    if (w.values.empty()) throw BadInput("window values must be nonempty");
    return w;
}

json sequence_to_json(const SequenceSpec& s) {
    using FS = SequenceSpec::FiniteSupport;
    using RS = SequenceSpec::RightSidedPeriodic;
    using LS = SequenceSpec::LeftSidedPeriodic;
    using TS = SequenceSpec::TwoSidedPeriodic;
    using ER = SequenceSpec::ExponentialRight;
    return std::visit(
        [](const auto& v) -> json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, FS>) {
                return {{"kind", "finite"},
                        {"start", v.start},
                        {"values", fp_list_to_json(v.values)}};
            } else if constexpr (std::is_same_v<T, RS>) {
                return {{"kind", "right_periodic"},
                        {"start", v.start},
                        {"transient", fp_list_to_json(v.transient)},
                        {"period", fp_list_to_json(v.period_values)}};
            } else if constexpr (std::is_same_v<T, LS>) {
                return {{"kind", "left_periodic"},
                        {"end", v.end},
                        {"transient", fp_list_to_json(v.transient)},
                        {"period", fp_list_to_json(v.period_values)}};
            } else if constexpr (std::is_same_v<T, TS>) {
                return {{"kind", "two_sided"},
                        {"period", fp_list_to_json(v.period_values)},
                        {"phase", v.phase}};
            } else {
                static_assert(std::is_same_v<T, ER>);
                return {{"kind", "exponential"},
                        {"A", v.amplitude.value()},
                        {"a", v.base.value()}};
            }
        },
        s.variant());
}

SequenceSpec sequence_from_json(const json& j, PrimeModulus p) {
    const json& kind_j = field_at(j, "kind");
    if (!kind_j.is_string()) throw BadInput("\"kind\" must be a string");
    const std::string kind = kind_j.get<std::string>();

    if (kind == "finite") {
        return SequenceSpec::finite(p, as_int(field_at(j, "start"), "start"),
                                    as_int_list(field_at(j, "values"), "values"));
    }
    if (kind == "right_periodic") {
        return SequenceSpec::right_periodic(
            p, as_int(field_at(j, "start"), "start"),
            j.contains("transient") ? as_int_list(j.at("transient"), "transient")
                                    : std::vector<std::int64_t>{},
            as_int_list(field_at(j, "period"), "period"));
    }
    if (kind == "left_periodic") {
        return SequenceSpec::left_periodic(
            p, as_int(field_at(j, "end"), "end"),
            j.contains("transient") ? as_int_list(j.at("transient"), "transient")
                                    : std::vector<std::int64_t>{},
            as_int_list(field_at(j, "period"), "period"));
    }
    if (kind == "two_sided") {
        return SequenceSpec::two_sided(
            p, as_int_list(field_at(j, "period"), "period"),
            j.contains("phase") ? as_int(j.at("phase"), "phase") : 0);
    }
    if (kind == "exponential") {
        return SequenceSpec::exponential(
            FpElement(as_int(field_at(j, "A"), "A"), p),
            FpElement(as_int(field_at(j, "a"), "a"), p));
    }
    if (kind == "impulse") return SequenceSpec::impulse(p);
    if (kind == "unit_step") return SequenceSpec::unit_step(p);
    throw BadInput("unknown sequence kind \"" + kind + "\"");
}

json polar_context_to_json(const PolarContext& ctx) {
    return {{"p", ctx.prime().value()},
            {"epsilon", gaussian_to_json(ctx.epsilon())},
            {"g_r", ctx.radial_generator().value()}};
}

json spectrum_to_json(const Spectrum& X) {
    json entries = json::array();
    for (std::int64_t theta = 0; theta < X.size(); ++theta) {
        const auto& e = X.entry(theta);
        if (e)
            entries.push_back(gaussian_to_json(*e));
        else
            entries.push_back("div");
    }
    json out = polar_context_to_json(X.context());
    out["entries"] = std::move(entries);
    return out;
}

Spectrum spectrum_from_json(const json& j) {
    const PrimeModulus p(as_int(field_at(j, "p"), "p"));
    const PolarContext ctx = PolarContext::build(p);
    if (gaussian_from_json(field_at(j, "epsilon"), p) != ctx.epsilon() ||
        FpElement(as_int(field_at(j, "g_r"), "g_r"), p) != ctx.radial_generator())
        throw BadInput("spectrum context does not match the deterministic "
                       "context for this p");
    const json& entries = field_at(j, "entries");
    if (!entries.is_array() ||
        static_cast<std::int64_t>(entries.size()) != ctx.phase_order())
        throw BadInput("spectrum must carry exactly 2(p+1) entries");
    Spectrum X(ctx);
    for (std::int64_t theta = 0; theta < X.size(); ++theta) {
        const json& e = entries[static_cast<std::size_t>(theta)];
        if (e.is_string() && e.get<std::string>() == "div")
            X.set_divergent(theta);
        else
            X.set(theta, gaussian_from_json(e, p));
    }
    return X;
}

json ext_field_to_json(const ExtField& f) {
    return {{"p", f.prime().value()},
            {"k", f.degree()},
            {"modulus_poly", f.modulus_poly()}};
}

json ext_element_to_json(const ExtElement& e) {
    return fp_list_to_json(e.coeffs());
}

ExtElement ext_element_from_json(const json& j, const ExtField& f) {
    if (j.is_number_integer())
        return ExtElement::from_coeffs(f, {j.get<std::int64_t>()});
    return ExtElement::from_coeffs(f, as_int_list(j, "element"));
}

json ffft_vector_to_json(const FfftVector& v) {
    json out = json::array();
    for (const auto& e : v) out.push_back(ext_element_to_json(e));
    return out;
}

FfftVector ffft_vector_from_json(const json& j, const ExtField& f) {
    if (!j.is_array()) throw BadInput("vector must be an array");
    FfftVector out;
    out.reserve(j.size());
    for (const auto& e : j) out.push_back(ext_element_from_json(e, f));
    return out;
}

}  // namespace gdsp::jio
