// Copyright (C) 2026 the galois-dsp authors
// SPDX-License-Identifier: Apache-2.0
//
// Discrete-time Fourier transform over GL(p). The transform of x[n] is
//
//   X(eps^theta) = sum_n x[n] eps^(-n theta),  theta = 0 .. 2(p+1)-1,
//
// where eps generates the phase subgroup of GL(p)*. Infinite sums are
// evaluated as Cesaro limits, so individual bins can diverge; a Spectrum
// stores a value or a divergence marker per bin.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gdsp/cesaro.hpp"
#include "gdsp/complex_field.hpp"
#include "gdsp/errors.hpp"
#include "gdsp/sequences.hpp"

namespace gdsp {

class Spectrum {
public:
    explicit Spectrum(PolarContext ctx)
        : ctx_(std::move(ctx)),
          entries_(static_cast<std::size_t>(ctx_.phase_order()),
                   GaussianInteger::zero(ctx_.prime())) {}

    const PolarContext& context() const noexcept { return ctx_; }
    std::int64_t size() const noexcept {
        return static_cast<std::int64_t>(entries_.size());
    }

    // theta is taken mod 2(p+1), so negative indices address reflected bins.
    bool is_divergent(std::int64_t theta) const { return !entry(theta).has_value(); }
    const GaussianInteger& at(std::int64_t theta) const {
        const auto& e = entry(theta);
        if (!e) throw DivergentSpectrum("spectrum bin diverges");
        return *e;
    }
    const std::optional<GaussianInteger>& entry(std::int64_t theta) const {
        return entries_[wrap(theta)];
    }

    void set(std::int64_t theta, GaussianInteger v) {
        entries_[wrap(theta)] = std::move(v);
    }
    void set_divergent(std::int64_t theta) { entries_[wrap(theta)].reset(); }

    bool any_divergent() const {
        for (const auto& e : entries_)
            if (!e) return true;
        return false;
    }

    friend bool operator==(const Spectrum& a, const Spectrum& b) {
        return a.ctx_.prime().value() == b.ctx_.prime().value() &&
               a.entries_ == b.entries_;
    }

private:
    std::size_t wrap(std::int64_t theta) const {
        const std::int64_t n = size();
        return static_cast<std::size_t>(((theta % n) + n) % n);
    }

    PolarContext ctx_;
    std::vector<std::optional<GaussianInteger>> entries_;
};

// Transform of a finite, right-sided or left-sided sequence. Two-sided
// periodic sequences have no convergent right-sided partial sums and are
// rejected with UnsupportedSequence.
Spectrum fdtft(const SequenceSpec& x, const PolarContext& ctx);

// X(eps^theta) = A / (1 - a eps^(-theta)) with a pole (divergent bin)
// wherever a == eps^theta. Matches fdtft of A a^n u[n].
Spectrum fdtft_closed_form_exponential(FpElement amplitude, FpElement base,
                                       const PolarContext& ctx);

// sum_{theta=0}^{2(p+1)-1} eps^(theta k); equals 2(p+1) mod p when
// 2(p+1) | k and 0 otherwise.
GaussianInteger orthogonality_sum(const PolarContext& ctx, std::int64_t k);

// x[n] = inv(2) sum_theta X(eps^theta) eps^(theta n) for n in [0, 2(p+1)).
// Throws DivergentSpectrum if any bin diverges and NonRealResult if the
// reconstruction has a nonzero imaginary part.
Window inverse_fdtft(const Spectrum& X);

}  // namespace gdsp
