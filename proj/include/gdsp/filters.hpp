// Copyright (C) 2026 the galois-dsp authors
// SPDX-License-Identifier: Apache-2.0
//
// FIR filtering of GF(p) windows, with a transform route over an FFFT plan,
// and frequency responses of IIR filters given as sums of exponentials
// A a^n u[n] (one term per pole).

#pragma once

#include <vector>

#include "gdsp/complex_field.hpp"
#include "gdsp/ffdtft.hpp"
#include "gdsp/ffft.hpp"
#include "gdsp/sequences.hpp"

namespace gdsp {

class FirFilter {
public:
    // Taps are h[0..L-1]; the list must be nonempty and share one modulus.
    explicit FirFilter(std::vector<FpElement> taps);

    const std::vector<FpElement>& taps() const noexcept { return taps_; }
    PrimeModulus modulus() const noexcept { return taps_.front().modulus(); }

private:
    std::vector<FpElement> taps_;
};

struct IirPole {
    FpElement amplitude;  // A
    FpElement base;       // a, nonzero
};

class IirFilter {
public:
    // Impulse response sum_i A_i a_i^n u[n]; every a_i must be nonzero.
    explicit IirFilter(std::vector<IirPole> poles);

    const std::vector<IirPole>& poles() const noexcept { return poles_; }

private:
    std::vector<IirPole> poles_;
};

// Linear convolution y[n] = sum_k h[k] x[n-k]; output starts at x.start and
// has length len(x) + L - 1.
Window fir_apply_time(const FirFilter& f, const Window& x);

// Same result via ffft: zero-pad h and x to the plan length, multiply
// spectra, invert, truncate. Throws PlanTooShort when the plan cannot hold
// the full linear convolution.
Window fir_apply_ffft(const FirFilter& f, const Window& x,
                                 const FfftPlan& plan);

// sum_i A_i / (1 - a_i eps^(-theta)) per phase, divergent where any
// denominator vanishes.
Spectrum iir_frequency_response(const IirFilter& f, const PolarContext& ctx);

}  // namespace gdsp
