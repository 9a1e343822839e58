// Copyright (C) 2026 the galois-dsp authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "gdsp/number_theory.hpp"
#include "gdsp/prime_field.hpp"

namespace gdsp {

/// A materialized finite view of a sequence: values for indices
/// [start, start + values.size()).
struct Window {
    std::int64_t start = 0;
    std::vector<FpElement> values;

    friend bool operator==(const Window&, const Window&) = default;
};

/// Smallest d dividing values.size() such that the list is d-periodic.
template <class T>
std::int64_t minimal_period(const std::vector<T>& values) {
    const auto n = static_cast<std::int64_t>(values.size());
    for (std::int64_t d : nt::divisors(n)) {
        bool periodic = true;
        for (std::int64_t i = d; i < n && periodic; ++i) {
            periodic = values[static_cast<std::size_t>(i)] ==
                       values[static_cast<std::size_t>(i % d)];
        }
        if (periodic) return d;
    }
    return n;  // unreachable: d = n always matches
}

/// Symbolic description of a sequence over GF(p), total over all of Z.
///
/// Periodic variants store one minimal period (constructors reduce the given
/// list); sequences are never materialized beyond explicit window() calls, so
/// exact infinite-sum machinery can consume the (transient, period) shape
/// directly.
class SequenceSpec {
  public:
    struct FiniteSupport {
        std::int64_t start;
        std::vector<FpElement> values;
    };
    struct RightSidedPeriodic {
        std::int64_t start;  // first nonzero-eligible index
        std::vector<FpElement> transient;
        std::vector<FpElement> period_values;  // minimal, nonempty
    };
    struct LeftSidedPeriodic {
        std::int64_t end;  // last nonzero-eligible index
        std::vector<FpElement> transient;      // ascending, ends at `end`
        std::vector<FpElement> period_values;  // minimal, nonempty
    };
    struct TwoSidedPeriodic {
        std::vector<FpElement> period_values;  // minimal, nonempty
        std::int64_t phase;  // index holding period_values[0], in [0, P)
    };
    struct ExponentialRight {  // A * a^n * u[n]
        FpElement amplitude;
        FpElement base;  // nonzero
    };

    using Variant = std::variant<FiniteSupport, RightSidedPeriodic,
                                 LeftSidedPeriodic, TwoSidedPeriodic,
                                 ExponentialRight>;

    static SequenceSpec finite(PrimeModulus p, std::int64_t start,
                               const std::vector<std::int64_t>& values);
    static SequenceSpec right_periodic(PrimeModulus p, std::int64_t start,
                                       const std::vector<std::int64_t>& transient,
                                       const std::vector<std::int64_t>& period);
    static SequenceSpec left_periodic(PrimeModulus p, std::int64_t end,
                                      const std::vector<std::int64_t>& transient,
                                      const std::vector<std::int64_t>& period);
    static SequenceSpec two_sided(PrimeModulus p,
                                  const std::vector<std::int64_t>& period,
                                  std::int64_t phase);
    static SequenceSpec exponential(FpElement amplitude, FpElement base);

    /// Galois impulse: 1 at multiples of 2(p+1), 0 elsewhere. Needs a complex
    /// capable modulus since the period is tied to the phase group of GL(p).
    static SequenceSpec impulse(PrimeModulus p);

    /// Unit step u[n]: all ones for n >= 0 (right-sided, period 1).
    static SequenceSpec unit_step(PrimeModulus p);

    PrimeModulus prime() const noexcept { return p_; }
    const Variant& variant() const noexcept { return v_; }

    /// Total evaluation at any index.
    FpElement eval(std::int64_t n) const;

    /// Period of the (eventually) periodic part; nullopt for finite support.
    /// For the right exponential this is the multiplicative order of the base.
    std::optional<std::int64_t> period() const;

    bool is_two_sided_infinite() const noexcept {
        return std::holds_alternative<TwoSidedPeriodic>(v_);
    }

  private:
    SequenceSpec(PrimeModulus p, Variant v) : p_(p), v_(std::move(v)) {}

    PrimeModulus p_;
    Variant v_;
};

/// Materializes eval over [start, start + length); length >= 1.
Window window(const SequenceSpec& seq, std::int64_t start, std::int64_t length);

/// y[n] = x[-n]. Finite stays finite, right-sided becomes left-sided and
/// vice versa; the right exponential reverses into a left-sided periodic.
SequenceSpec time_reverse(const SequenceSpec& seq);

}  // namespace gdsp
