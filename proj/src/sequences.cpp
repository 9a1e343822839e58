// Copyright (C) 2026 the galois-dsp authors
// SPDX-License-Identifier: Apache-2.0

#include "gdsp/sequences.hpp"

#include <algorithm>

namespace gdsp {

namespace {

std::vector<FpElement> to_elements(const std::vector<std::int64_t>& raw,
                                   PrimeModulus p) {
    std::vector<FpElement> out;
    out.reserve(raw.size());
    for (std::int64_t v : raw) out.emplace_back(v, p);
    return out;
}

std::vector<FpElement> reduce_period(std::vector<FpElement> values) {
    if (values.empty()) throw BadInput("period values must be nonempty");
    values.resize(static_cast<std::size_t>(minimal_period(values)),
                  values.front());
    return values;
}

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
    return ((a % m) + m) % m;
}

}  // namespace

SequenceSpec SequenceSpec::finite(PrimeModulus p, std::int64_t start,
                                  const std::vector<std::int64_t>& values) {
    return {p, FiniteSupport{start, to_elements(values, p)}};
}

SequenceSpec SequenceSpec::right_periodic(
    PrimeModulus p, std::int64_t start,
    const std::vector<std::int64_t>& transient,
    const std::vector<std::int64_t>& period) {
    return {p, RightSidedPeriodic{start, to_elements(transient, p),
                                  reduce_period(to_elements(period, p))}};
}

SequenceSpec SequenceSpec::left_periodic(
    PrimeModulus p, std::int64_t end,
    const std::vector<std::int64_t>& transient,
    const std::vector<std::int64_t>& period) {
    return {p, LeftSidedPeriodic{end, to_elements(transient, p),
                                 reduce_period(to_elements(period, p))}};
}

SequenceSpec SequenceSpec::two_sided(PrimeModulus p,
                                     const std::vector<std::int64_t>& period,
                                     std::int64_t phase) {
    auto values = reduce_period(to_elements(period, p));
    const auto n = static_cast<std::int64_t>(values.size());
    return {p, TwoSidedPeriodic{std::move(values), floor_mod(phase, n)}};
}

SequenceSpec SequenceSpec::exponential(FpElement amplitude, FpElement base) {
    if (base.is_zero()) throw ZeroArgument("exponential base must be nonzero");
    if (!(amplitude.modulus() == base.modulus())) {
        throw ModulusMismatch("amplitude and base use different moduli");
    }
    return {amplitude.modulus(), ExponentialRight{amplitude, base}};
}

SequenceSpec SequenceSpec::impulse(PrimeModulus p) {
    p.require_complex();
    std::vector<std::int64_t> period(static_cast<std::size_t>(2 * (p.value() + 1)), 0);
    period[0] = 1;
    return two_sided(p, period, 0);
}

SequenceSpec SequenceSpec::unit_step(PrimeModulus p) {
    return right_periodic(p, 0, {}, {1});
}

FpElement SequenceSpec::eval(std::int64_t n) const {
    const FpElement zero = FpElement::zero(p_);
    return std::visit(
        [&](const auto& s) -> FpElement {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, FiniteSupport>) {
                const std::int64_t i = n - s.start;
                if (i < 0 || i >= static_cast<std::int64_t>(s.values.size()))
                    return zero;
                return s.values[static_cast<std::size_t>(i)];
            } else if constexpr (std::is_same_v<T, RightSidedPeriodic>) {
                if (n < s.start) return zero;
                const std::int64_t i = n - s.start;
                const auto t = static_cast<std::int64_t>(s.transient.size());
                if (i < t) return s.transient[static_cast<std::size_t>(i)];
                const auto period = static_cast<std::int64_t>(s.period_values.size());
                return s.period_values[static_cast<std::size_t>((i - t) % period)];
            } else if constexpr (std::is_same_v<T, LeftSidedPeriodic>) {
                if (n > s.end) return zero;
                const auto t = static_cast<std::int64_t>(s.transient.size());
                const std::int64_t d = s.end - n;
                if (d < t) return s.transient[static_cast<std::size_t>(t - 1 - d)];
                // Last periodic index; period_values tile leftward from it
                // with period_values.back() in that slot.
                const std::int64_t e = s.end - t;
                const auto period = static_cast<std::int64_t>(s.period_values.size());
                return s.period_values[static_cast<std::size_t>(
                    floor_mod(n - e - 1, period))];
            } else if constexpr (std::is_same_v<T, TwoSidedPeriodic>) {
                const auto period = static_cast<std::int64_t>(s.period_values.size());
                return s.period_values[static_cast<std::size_t>(
                    floor_mod(n - s.phase, period))];
            } else {
                static_assert(std::is_same_v<T, ExponentialRight>);
                if (n < 0) return zero;
                return s.amplitude * s.base.pow(n);
            }
        },
        v_);
}

std::optional<std::int64_t> SequenceSpec::period() const {
    return std::visit(
        [](const auto& s) -> std::optional<std::int64_t> {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, FiniteSupport>) {
                return std::nullopt;
            } else if constexpr (std::is_same_v<T, ExponentialRight>) {
                return multiplicative_order(s.base);
            } else {
                return static_cast<std::int64_t>(s.period_values.size());
            }
        },
        v_);
}

Window window(const SequenceSpec& seq, std::int64_t start, std::int64_t length) {
    if (length < 1) throw BadInput("window length must be >= 1");
    Window w;
    w.start = start;
    w.values.reserve(static_cast<std::size_t>(length));
    for (std::int64_t n = start; n < start + length; ++n) {
        w.values.push_back(seq.eval(n));
    }
    return w;
}

SequenceSpec time_reverse(const SequenceSpec& seq) {
    using FS = SequenceSpec::FiniteSupport;
    using RS = SequenceSpec::RightSidedPeriodic;
    using LS = SequenceSpec::LeftSidedPeriodic;
    using TS = SequenceSpec::TwoSidedPeriodic;
    using ER = SequenceSpec::ExponentialRight;

    const PrimeModulus p = seq.prime();
    auto values_of = [](const std::vector<FpElement>& v) {
        std::vector<std::int64_t> out;
        out.reserve(v.size());
        for (FpElement x : v) out.push_back(x.value());
        return out;
    };
    auto reversed = [&](const std::vector<FpElement>& v) {
        auto out = values_of(v);
        std::reverse(out.begin(), out.end());
        return out;
    };

    return std::visit(
        [&](const auto& s) -> SequenceSpec {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, FS>) {
                const auto len = static_cast<std::int64_t>(s.values.size());
                const std::int64_t start = len == 0 ? -s.start : -(s.start + len - 1);
                return SequenceSpec::finite(p, start, reversed(s.values));
            } else if constexpr (std::is_same_v<T, RS>) {
                return SequenceSpec::left_periodic(p, -s.start,
                                                   reversed(s.transient),
                                                   reversed(s.period_values));
            } else if constexpr (std::is_same_v<T, LS>) {
                return SequenceSpec::right_periodic(p, -s.end,
                                                    reversed(s.transient),
                                                    reversed(s.period_values));
            } else if constexpr (std::is_same_v<T, TS>) {
                // s[n] = period[(n - phase) mod P], so s[-n] anchors the
                // reversed list at 1 - phase.
                return SequenceSpec::two_sided(p, reversed(s.period_values),
                                               1 - s.phase);
            } else {
                static_assert(std::is_same_v<T, ER>);
                // A a^{-m} for m <= 0: one period ending with A at index 0.
                const std::int64_t order = multiplicative_order(s.base);
                std::vector<std::int64_t> period(static_cast<std::size_t>(order), 0);
                for (std::int64_t k = 0; k < order; ++k) {
                    period[static_cast<std::size_t>(order - 1 - k)] =
                        (s.amplitude * s.base.pow(k)).value();
                }
                return SequenceSpec::left_periodic(p, 0, {}, period);
            }
        },
        seq.variant());
}

}  // namespace gdsp
