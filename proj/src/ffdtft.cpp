// Copyright (C) 2026 the galois-dsp authors
// SPDX-License-Identifier: Apache-2.0

#include "gdsp/ffdtft.hpp"

#include <numeric>

namespace gdsp {

namespace {

// Cesaro limit of sum_n x[n] eps^(-n theta) for one bin of a right-sided
// periodic sequence. The product stream is periodic with period dividing
// lcm(P_x, 2(p+1)); the engine reduces that candidate to the minimal period
// before testing for divergence.
std::optional<GaussianInteger> periodic_bin(
    const SequenceSpec::RightSidedPeriodic& s, const PolarContext& ctx,
    std::int64_t theta) {
    const PrimeModulus p = ctx.prime();
    Series<GaussianInteger> series;
    for (std::size_t i = 0; i < s.transient.size(); ++i) {
        const std::int64_t n = s.start + static_cast<std::int64_t>(i);
        series.transient.push_back(GaussianInteger::from_real(s.transient[i]) *
                                   ctx.epsilon_pow(-n * theta));
    }
    const auto p_x = static_cast<std::int64_t>(s.period_values.size());
    const std::int64_t cand = std::lcm(p_x, ctx.phase_order());
    const std::int64_t n0 = s.start + static_cast<std::int64_t>(s.transient.size());
    series.period.reserve(static_cast<std::size_t>(cand));
    for (std::int64_t k = 0; k < cand; ++k) {
        const FpElement v = s.period_values[static_cast<std::size_t>(k % p_x)];
        series.period.push_back(GaussianInteger::from_real(v) *
                                ctx.epsilon_pow(-(n0 + k) * theta));
    }
    const auto res = cesaro_sum(series, p);
    if (!res.is_convergent()) return std::nullopt;
    return res.sigma();
}

std::optional<GaussianInteger> exponential_bin(
    const SequenceSpec::ExponentialRight& s, const PolarContext& ctx,
    std::int64_t theta) {
    // Terms A (a eps^(-theta))^n form a geometric stream.
    const GaussianInteger b =
        GaussianInteger::from_real(s.base) * ctx.epsilon_pow(-theta);
    const GaussianInteger amp = GaussianInteger::from_real(s.amplitude);
    const std::int64_t order = multiplicative_order(b);
    Series<GaussianInteger> series;
    series.period.reserve(static_cast<std::size_t>(order));
    GaussianInteger pw = GaussianInteger::one(ctx.prime());
    for (std::int64_t k = 0; k < order; ++k) {
        series.period.push_back(amp * pw);
        pw = pw * b;
    }
    const auto res = cesaro_sum(series, ctx.prime());
    if (!res.is_convergent()) return std::nullopt;
    return res.sigma();
}

}  // namespace

Spectrum fdtft(const SequenceSpec& x, const PolarContext& ctx) {
    using FS = SequenceSpec::FiniteSupport;
    using RS = SequenceSpec::RightSidedPeriodic;
    using LS = SequenceSpec::LeftSidedPeriodic;
    using TS = SequenceSpec::TwoSidedPeriodic;
    using ER = SequenceSpec::ExponentialRight;

    if (x.prime().value() != ctx.prime().value())
        throw ModulusMismatch("sequence and polar context use different primes");

    Spectrum X(ctx);
    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, FS>) {
                for (std::int64_t theta = 0; theta < X.size(); ++theta) {
                    GaussianInteger acc = GaussianInteger::zero(ctx.prime());
                    for (std::size_t i = 0; i < s.values.size(); ++i) {
                        const std::int64_t n =
                            s.start + static_cast<std::int64_t>(i);
                        acc += GaussianInteger::from_real(s.values[i]) *
                               ctx.epsilon_pow(-n * theta);
                    }
                    X.set(theta, acc);
                }
            } else if constexpr (std::is_same_v<T, RS>) {
                for (std::int64_t theta = 0; theta < X.size(); ++theta) {
                    if (auto v = periodic_bin(s, ctx, theta))
                        X.set(theta, *v);
                    else
                        X.set_divergent(theta);
                }
            } else if constexpr (std::is_same_v<T, ER>) {
                for (std::int64_t theta = 0; theta < X.size(); ++theta) {
                    if (auto v = exponential_bin(s, ctx, theta))
                        X.set(theta, *v);
                    else
                        X.set_divergent(theta);
                }
            } else if constexpr (std::is_same_v<T, LS>) {
                // x[n] = y[-n] with y right-sided, so X(theta) = Y(-theta).
                const Spectrum Y = fdtft(time_reverse(x), ctx);
                for (std::int64_t theta = 0; theta < X.size(); ++theta) {
                    const auto& e = Y.entry(-theta);
                    if (e)
                        X.set(theta, *e);
                    else
                        X.set_divergent(theta);
                }
            } else {
                static_assert(std::is_same_v<T, TS>);
                throw UnsupportedSequence(
                    "two-sided periodic sequences have no right-sided partial sums");
            }
        },
        x.variant());
    return X;
}

Spectrum fdtft_closed_form_exponential(FpElement amplitude, FpElement base,
                                       const PolarContext& ctx) {
    if (amplitude.modulus().value() != ctx.prime().value() ||
        base.modulus().value() != ctx.prime().value())
        throw ModulusMismatch("closed form arguments use different primes");
    if (base.is_zero()) throw ZeroArgument("exponential base must be nonzero");

    Spectrum X(ctx);
    if (amplitude.is_zero()) return X;
    const GaussianInteger one = GaussianInteger::one(ctx.prime());
    const GaussianInteger amp = GaussianInteger::from_real(amplitude);
    for (std::int64_t theta = 0; theta < X.size(); ++theta) {
        const GaussianInteger denom =
            one - GaussianInteger::from_real(base) * ctx.epsilon_pow(-theta);
        if (denom.is_zero())
            X.set_divergent(theta);
        else
            X.set(theta, amp * denom.inv());
    }
    return X;
}

GaussianInteger orthogonality_sum(const PolarContext& ctx, std::int64_t k) {
    GaussianInteger acc = GaussianInteger::zero(ctx.prime());
    for (std::int64_t theta = 0; theta < ctx.phase_order(); ++theta)
        acc += ctx.epsilon_pow(theta * k);
    return acc;
}

Window inverse_fdtft(const Spectrum& X) {
    if (X.any_divergent())
        throw DivergentSpectrum("cannot invert a spectrum with divergent bins");
    const PolarContext& ctx = X.context();
    const PrimeModulus p = ctx.prime();
    const FpElement scale = FpElement(2, p).inv();

    Window out;
    out.start = 0;
    out.values.reserve(static_cast<std::size_t>(X.size()));
    for (std::int64_t n = 0; n < X.size(); ++n) {
        GaussianInteger acc = GaussianInteger::zero(p);
        for (std::int64_t theta = 0; theta < X.size(); ++theta)
            acc += X.at(theta) * ctx.epsilon_pow(theta * n);
        acc = acc * GaussianInteger::from_real(scale);
        if (!acc.im().is_zero())
            throw NonRealResult("inverse transform is not real valued");
        out.values.push_back(acc.re());
    }
    return out;
}

}  // namespace gdsp
