// Copyright (C) 2026 the galois-dsp authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "gdsp/complex_field.hpp"
#include "gdsp/prime_field.hpp"
#include "gdsp/sequences.hpp"

namespace gdsp {

/// Why a series failed to Cesaro-converge over GF(p).
///
/// PeriodDivisibleByP covers both routes to the same obstruction: either the
/// one-period term sum c is nonzero, which inflates the partial-sum period to
/// P * p, or the partial sums are periodic outright with a period divisible
/// by p. Either way the 1/P normalization has no inverse mod p.
/// PartialSumsAperiodic is reserved for term streams without an eventually
/// periodic description; the symbolic sequence types cannot produce one.
enum class DivergenceReason { PeriodDivisibleByP, PartialSumsAperiodic };

const char* to_string(DivergenceReason r);

/// A right-sided term stream t_1, t_2, ...: finitely many transient terms
/// followed by a repeating period (nonempty).
template <class T>
struct Series {
    std::vector<T> transient;
    std::vector<T> period;
};

/// Eventually periodic shape of the partial sums S[n] = t_1 + ... + t_n:
/// the first transient.size() sums verbatim, then one minimal period of the
/// cycle they settle into.
template <class T>
struct PartialSumProfile {
    std::vector<T> transient_sums;
    std::vector<T> period_sums;
};

template <class T>
class CesaroResult {
  public:
    static CesaroResult convergent(T sigma) { return CesaroResult(std::move(sigma)); }
    static CesaroResult divergent(DivergenceReason r) { return CesaroResult(r); }

    bool is_convergent() const noexcept { return sigma_.has_value(); }

    const T& sigma() const {
        if (!sigma_) throw std::logic_error("sigma() on a divergent result");
        return *sigma_;
    }

    DivergenceReason reason() const {
        if (sigma_) throw std::logic_error("reason() on a convergent result");
        return reason_;
    }

  private:
    explicit CesaroResult(T s) : sigma_(std::move(s)), reason_{} {}
    explicit CesaroResult(DivergenceReason r) : reason_(r) {}

    std::optional<T> sigma_;
    DivergenceReason reason_;
};

namespace detail {

inline FpElement sum_as_integers(const std::vector<FpElement>& xs, PrimeModulus p) {
    std::int64_t total = 0;
    for (FpElement x : xs) total += x.value();
    return {total, p};
}

inline GaussianInteger sum_as_integers(const std::vector<GaussianInteger>& xs,
                                       PrimeModulus p) {
    std::int64_t re = 0, im = 0;
    for (const GaussianInteger& x : xs) {
        re += x.re().value();
        im += x.im().value();
    }
    return {re, im, p};
}

}  // namespace detail

/// Builds the partial-sum profile of a periodic term stream, or reports
/// divergence when the one-period term sum is nonzero (the partial-sum
/// period then inflates by a factor of p and the series cannot converge).
template <class T>
std::variant<PartialSumProfile<T>, DivergenceReason> partial_sum_profile(
    Series<T> series) {
    if (series.period.empty()) throw BadInput("series period must be nonempty");
    series.period.resize(
        static_cast<std::size_t>(minimal_period(series.period)),
        series.period.front());

    const T zero = series.period.front() - series.period.front();
    PartialSumProfile<T> profile;
    T acc = zero;
    profile.transient_sums.reserve(series.transient.size());
    for (const T& t : series.transient) {
        acc = acc + t;
        profile.transient_sums.push_back(acc);
    }

    T period_term_sum = zero;
    for (const T& t : series.period) period_term_sum = period_term_sum + t;
    if (!(period_term_sum == zero)) {
        return DivergenceReason::PeriodDivisibleByP;
    }

    profile.period_sums.reserve(series.period.size());
    for (const T& t : series.period) {
        acc = acc + t;
        profile.period_sums.push_back(acc);
    }
    profile.period_sums.resize(
        static_cast<std::size_t>(minimal_period(profile.period_sums)),
        profile.period_sums.front());
    return profile;
}

/// sigma = (1/P) * sum of one period of S[k], with the period sum taken over
/// the integers first and reduced afterwards. Divergent when p divides P.
template <class T>
CesaroResult<T> cesaro_sum(const PartialSumProfile<T>& profile, PrimeModulus p) {
    const auto period = static_cast<std::int64_t>(profile.period_sums.size());
    if (period % p.value() == 0) {
        return CesaroResult<T>::divergent(DivergenceReason::PeriodDivisibleByP);
    }
    T integer_sum = detail::sum_as_integers(profile.period_sums, p);
    FpElement scale = FpElement(period, p).inv();
    if constexpr (std::is_same_v<T, GaussianInteger>) {
        return CesaroResult<T>::convergent(integer_sum *
                                           GaussianInteger::from_real(scale));
    } else {
        return CesaroResult<T>::convergent(integer_sum * scale);
    }
}

template <class T>
CesaroResult<T> cesaro_sum(Series<T> series, PrimeModulus p) {
    auto profile = partial_sum_profile(std::move(series));
    if (auto* reason = std::get_if<DivergenceReason>(&profile)) {
        return CesaroResult<T>::divergent(*reason);
    }
    return cesaro_sum(std::get<PartialSumProfile<T>>(profile), p);
}

/// Cesaro sum of a right-sided periodic sequence over GF(p), taking the
/// terms in index order. Finite-support input is summed directly.
CesaroResult<FpElement> cesaro_sum(const SequenceSpec& seq);

/// Brute-force integer-domain check: simulates the partial sums S[k] of the
/// given integer term stream (reduced into [0, m) when a modulus is given,
/// exact otherwise), finds their eventual period P empirically, and returns
/// the average of S[1..n] at the largest multiple n of P within n_max as an
/// exact rational. For streams that are periodic from the first term this is
/// exactly the Cesaro limit. Returns nullopt when the partial sums never
/// settle into a period (e.g. modulus-free stream with nonzero period sum).
std::optional<boost::rational<std::int64_t>> cesaro_oracle(
    const std::vector<std::int64_t>& transient,
    const std::vector<std::int64_t>& period,
    std::optional<std::int64_t> modulus, std::int64_t n_max = 10000);

}  // namespace gdsp
