// Copyright (C) 2026 the galois-dsp authors
// SPDX-License-Identifier: Apache-2.0

#include "gdsp/cesaro.hpp"

#include <algorithm>

namespace gdsp {

const char* to_string(DivergenceReason r) {
    switch (r) {
        case DivergenceReason::PeriodDivisibleByP:
            return "period-divisible-by-p";
        case DivergenceReason::PartialSumsAperiodic:
            return "partial-sums-aperiodic";
    }
    return "unknown";
}

CesaroResult<FpElement> cesaro_sum(const SequenceSpec& seq) {
    using FS = SequenceSpec::FiniteSupport;
    using RS = SequenceSpec::RightSidedPeriodic;
    using LS = SequenceSpec::LeftSidedPeriodic;
    using ER = SequenceSpec::ExponentialRight;

    const PrimeModulus p = seq.prime();
    return std::visit(
        [&](const auto& s) -> CesaroResult<FpElement> {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, FS>) {
                // Finitely many terms: the partial sums are eventually
                // constant and the Cesaro limit is the plain sum.
                FpElement total = FpElement::zero(p);
                for (FpElement v : s.values) total += v;
                return CesaroResult<FpElement>::convergent(total);
            } else if constexpr (std::is_same_v<T, RS>) {
                return cesaro_sum(Series<FpElement>{s.transient, s.period_values}, p);
            } else if constexpr (std::is_same_v<T, LS>) {
                // Summed in reflected order, which is the right-sided reading
                // of the same series.
                return cesaro_sum(time_reverse(seq));
            } else if constexpr (std::is_same_v<T, ER>) {
                const std::int64_t order = multiplicative_order(s.base);
                std::vector<FpElement> period;
                period.reserve(static_cast<std::size_t>(order));
                for (std::int64_t k = 0; k < order; ++k) {
                    period.push_back(s.amplitude * s.base.pow(k));
                }
                return cesaro_sum(Series<FpElement>{{}, std::move(period)}, p);
            } else {
                throw UnsupportedSequence(
                    "two-sided periodic series have no right-sided partial sums");
            }
        },
        seq.variant());
}

std::optional<boost::rational<std::int64_t>> cesaro_oracle(
    const std::vector<std::int64_t>& transient,
    const std::vector<std::int64_t>& period,
    std::optional<std::int64_t> modulus, std::int64_t n_max) {
    if (period.empty()) throw BadInput("oracle period must be nonempty");
    if (n_max < 1) throw BadInput("n_max must be >= 1");
    if (modulus && *modulus < 2) throw BadInput("modulus must be >= 2");

    const auto t_len = static_cast<std::int64_t>(transient.size());
    const auto p_len = static_cast<std::int64_t>(period.size());

    // S[k] for k = 1..n_max, reduced only if a modulus was given.
    std::vector<std::int64_t> sums;
    sums.reserve(static_cast<std::size_t>(n_max));
    std::int64_t acc = 0;
    for (std::int64_t k = 1; k <= n_max; ++k) {
        const std::int64_t term =
            k <= t_len ? transient[static_cast<std::size_t>(k - 1)]
                       : period[static_cast<std::size_t>((k - 1 - t_len) % p_len)];
        acc += term;
        if (modulus) acc = ((acc % *modulus) + *modulus) % *modulus;
        sums.push_back(acc);
    }

    // Empirical eventual period of S: smallest shift that matches everywhere
    // past the transient.
    std::int64_t s_period = 0;
    for (std::int64_t cand = 1; cand <= (n_max - t_len) / 2; ++cand) {
        bool ok = true;
        for (std::int64_t k = t_len; k + cand < n_max && ok; ++k) {
            ok = sums[static_cast<std::size_t>(k)] ==
                 sums[static_cast<std::size_t>(k + cand)];
        }
        if (ok) {
            s_period = cand;
            break;
        }
    }
    if (s_period == 0) return std::nullopt;

    const std::int64_t n = (n_max / s_period) * s_period;
    if (n < t_len + s_period) return std::nullopt;
    std::int64_t total = 0;
    for (std::int64_t k = 0; k < n; ++k) total += sums[static_cast<std::size_t>(k)];
    return boost::rational<std::int64_t>(total, n);
}

}  // namespace gdsp
