// Copyright (C) 2026 the galois-dsp authors
// SPDX-License-Identifier: Apache-2.0

#include "gdsp/filters.hpp"

namespace gdsp {

FirFilter::FirFilter(std::vector<FpElement> taps) : taps_(std::move(taps)) {
    if (taps_.empty()) throw BadInput("FIR filter needs at least one tap");
    for (const auto& t : taps_)
        if (t.modulus().value() != taps_.front().modulus().value())
            throw ModulusMismatch("taps use different moduli");
}

IirFilter::IirFilter(std::vector<IirPole> poles) : poles_(std::move(poles)) {
    for (const auto& pl : poles_) {
        if (pl.base.is_zero()) throw ZeroArgument("IIR pole base must be nonzero");
        if (pl.amplitude.modulus().value() != pl.base.modulus().value() ||
            pl.base.modulus().value() != poles_.front().base.modulus().value())
            throw ModulusMismatch("pole terms use different moduli");
    }
}

Window fir_apply_time(const FirFilter& f, const Window& x) {
    const PrimeModulus p = f.modulus();
    if (!x.values.empty() && x.values.front().modulus().value() != p.value())
        throw ModulusMismatch("filter and input use different moduli");
    const auto& h = f.taps();
    Window y;
    y.start = x.start;
    y.values.assign(x.values.size() + h.size() - 1, FpElement::zero(p));
    for (std::size_t k = 0; k < h.size(); ++k) {
        if (h[k].is_zero()) continue;
        for (std::size_t i = 0; i < x.values.size(); ++i)
            y.values[k + i] += h[k] * x.values[i];
    }
    return y;
}

Window fir_apply_ffft(const FirFilter& f, const Window& x,
                                 const FfftPlan& plan) {
    const PrimeModulus p = f.modulus();
    if (plan.field().prime().value() != p.value())
        throw ModulusMismatch("plan and filter use different primes");
    const auto out_len =
        static_cast<std::int64_t>(x.values.size() + f.taps().size()) - 1;
    if (out_len > plan.length())
        throw PlanTooShort("plan length below linear convolution length");

    const auto lift = [&](const std::vector<FpElement>& v) {
        FfftVector out(static_cast<std::size_t>(plan.length()),
                       ExtElement::zero(plan.field().carrier()));
        for (std::size_t i = 0; i < v.size(); ++i)
            out[i] = plan.field().from_prime_field(v[i]);
        return out;
    };

    const FfftVector y =
        iffft(pointwise_mul(ffft(lift(f.taps()), plan), ffft(lift(x.values), plan)),
              plan);

    Window out;
    out.start = x.start;
    out.values.reserve(static_cast<std::size_t>(out_len));
    for (std::int64_t i = 0; i < out_len; ++i) {
        const auto& coeffs = y[static_cast<std::size_t>(i)].coeffs();
        for (std::size_t d = 1; d < coeffs.size(); ++d)
            if (!coeffs[d].is_zero())
                throw NonRealResult("convolution left the prime field");
        out.values.push_back(coeffs[0]);
    }
    return out;
}

Spectrum iir_frequency_response(const IirFilter& f, const PolarContext& ctx) {
    const PrimeModulus p = ctx.prime();
    for (const auto& pl : f.poles())
        if (pl.base.modulus().value() != p.value())
            throw ModulusMismatch("filter and context use different primes");

    Spectrum X(ctx);
    const GaussianInteger one = GaussianInteger::one(p);
    for (std::int64_t theta = 0; theta < X.size(); ++theta) {
        GaussianInteger acc = GaussianInteger::zero(p);
        bool divergent = false;
        for (const auto& pl : f.poles()) {
            const GaussianInteger denom =
                one - GaussianInteger::from_real(pl.base) * ctx.epsilon_pow(-theta);
            if (denom.is_zero()) {
                divergent = true;
                break;
            }
            acc += GaussianInteger::from_real(pl.amplitude) * denom.inv();
        }
        if (divergent)
            X.set_divergent(theta);
        else
            X.set(theta, acc);
    }
    return X;
}

}  // namespace gdsp
