// Copyright (C) 2026 the galois-dsp authors
// SPDX-License-Identifier: Apache-2.0
//
// JSON wire formats used by the CLI. GF(p) values travel as plain integers
// next to a top-level "p"; GL(p) values as [re, im]; spectra as entry arrays
// ([re, im] or "div") bundled with their polar context {p, epsilon, g_r};
// extension elements as constant-first coefficient arrays with a field
// descriptor {p, k, modulus_poly}.

#pragma once

#include <json.hpp>

#include "gdsp/complex_field.hpp"
#include "gdsp/extension_field.hpp"
#include "gdsp/ffdtft.hpp"
#include "gdsp/ffft.hpp"
#include "gdsp/sequences.hpp"

namespace gdsp::jio {

using nlohmann::json;

json gaussian_to_json(const GaussianInteger& z);
GaussianInteger gaussian_from_json(const json& j, PrimeModulus p);

json window_to_json(const Window& w);
Window window_from_json(const json& j, PrimeModulus p);

json sequence_to_json(const SequenceSpec& s);
SequenceSpec sequence_from_json(const json& j, PrimeModulus p);

json polar_context_to_json(const PolarContext& ctx);

// {"p": ..., "epsilon": [..], "g_r": ..., "entries": [...]}. Parsing rebuilds
// the deterministic context for p and insists the embedded epsilon and g_r
// match it; entries must number 2(p+1).
json spectrum_to_json(const Spectrum& X);
Spectrum spectrum_from_json(const json& j);

json ext_field_to_json(const ExtField& f);
json ext_element_to_json(const ExtElement& e);
// Accepts a plain integer (constant) or a coefficient array.
ExtElement ext_element_from_json(const json& j, const ExtField& f);

json ffft_vector_to_json(const FfftVector& v);
FfftVector ffft_vector_from_json(const json& j, const ExtField& f);

}  // namespace gdsp::jio
