// Copyright (C) 2026 the galois-dsp authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>

#include "gdsp/cesaro.hpp"

using namespace gdsp;

namespace {

std::vector<FpElement> fp_list(const std::vector<std::int64_t>& v,
                               PrimeModulus p) {
    std::vector<FpElement> out;
    for (auto x : v) out.emplace_back(x, p);
    return out;
}

}  // namespace

TEST_SUITE("cesaro") {

TEST_CASE("partial sums of the geometric series over GF(7)") {
    const PrimeModulus p(7);
    // Terms 3^n: {1 3 2 6 4 5}; partial sums cycle through {1 4 6 5 2 0}.
    const Series<FpElement> s{{}, fp_list({1, 3, 2, 6, 4, 5}, p)};
    const auto prof = partial_sum_profile(s);
    REQUIRE(std::holds_alternative<PartialSumProfile<FpElement>>(prof));
    const auto& ps = std::get<PartialSumProfile<FpElement>>(prof);
    CHECK(ps.transient_sums.empty());
    CHECK(ps.period_sums == fp_list({1, 4, 6, 5, 2, 0}, p));
    const auto res = cesaro_sum(s, p);
    REQUIRE(res.is_convergent());
    CHECK(res.sigma().value() == 3);
}

TEST_CASE("alternating series averages to one half") {
    for (std::int64_t pv : {3, 7, 11}) {
        const PrimeModulus p(pv);
        const auto res = cesaro_sum(Series<FpElement>{{}, fp_list({1, -1}, p)}, p);
        REQUIRE(res.is_convergent());
        CHECK(res.sigma() == FpElement(2, p).inv());
    }
}

TEST_CASE("nonzero one-period term sum means divergence") {
    const PrimeModulus p(7);
    const auto res = cesaro_sum(Series<FpElement>{{}, fp_list({1}, p)}, p);
    REQUIRE_FALSE(res.is_convergent());
    CHECK(res.reason() == DivergenceReason::PeriodDivisibleByP);
    CHECK(std::string(to_string(res.reason())) == "period-divisible-by-p");
    CHECK_THROWS_AS(res.sigma(), std::logic_error);

    // Sum 1+2 = 3 is nonzero mod 7 but zero mod 3.
    const auto d7 = cesaro_sum(Series<FpElement>{{}, fp_list({1, 2}, p)}, p);
    CHECK_FALSE(d7.is_convergent());
    const PrimeModulus p3(3);
    const auto c3 = cesaro_sum(Series<FpElement>{{}, fp_list({1, 2}, p3)}, p3);
    REQUIRE(c3.is_convergent());
    CHECK(c3.sigma().value() == 2);  // S = 1,0,... mean 1/2 -> inv(2) = 2
}

TEST_CASE("candidate periods reduce before the divergence check") {
    const PrimeModulus p(3);
    // {1,2} written three times: naive use of the 6-term candidate would
    // find a period-sum list of length 6 with total 9 = 0 mod 3; the minimal
    // period 2 must be used instead, and it converges.
    const auto res = cesaro_sum(
        Series<FpElement>{{}, fp_list({1, 2, 1, 2, 1, 2}, p)}, p);
    REQUIRE(res.is_convergent());
    CHECK(res.sigma().value() == 2);
}

TEST_CASE("transients shift partial sums without changing the limit") {
    const PrimeModulus p(7);
    // Transient contributes 5 to every later partial sum.
    const Series<FpElement> s{fp_list({5}, p), fp_list({1, -1}, p)};
    const auto prof = partial_sum_profile(s);
    REQUIRE(std::holds_alternative<PartialSumProfile<FpElement>>(prof));
    const auto& ps = std::get<PartialSumProfile<FpElement>>(prof);
    CHECK(ps.transient_sums == fp_list({5}, p));
    CHECK(ps.period_sums == fp_list({6, 5}, p));
    const auto res = cesaro_sum(s, p);
    REQUIRE(res.is_convergent());
    // S cycles {6,5}: sigma = (6+5)/2 = 11 * inv(2) mod 7.
    CHECK(res.sigma() == FpElement(11, p) * FpElement(2, p).inv());
}

TEST_CASE("gaussian-valued series are summed componentwise") {
    const PrimeModulus p(7);
    const GaussianInteger a(1, 2, p), b(-1, -2, p);
    const auto res = cesaro_sum(Series<GaussianInteger>{{}, {a, b}}, p);
    REQUIRE(res.is_convergent());
    // S = a, 0, a, 0, ...; sigma = a/2.
    CHECK(res.sigma() ==
          a * GaussianInteger::from_real(FpElement(2, p).inv()));
}

TEST_CASE("sequence-level dispatch") {
    const PrimeModulus p(7);
    const auto fin = cesaro_sum(SequenceSpec::finite(p, -2, {1, 2, 3}));
    REQUIRE(fin.is_convergent());
    CHECK(fin.sigma().value() == 6);

    const auto exp = cesaro_sum(
        SequenceSpec::exponential(FpElement(1, p), FpElement(3, p)));
    REQUIRE(exp.is_convergent());
    CHECK(exp.sigma().value() == 3);

    const auto rp = cesaro_sum(SequenceSpec::right_periodic(p, 5, {}, {1, -1}));
    REQUIRE(rp.is_convergent());
    CHECK(rp.sigma() == FpElement(2, p).inv());

    // Reflected reading of a left-sided series gives the right-sided sum.
    const auto lp = cesaro_sum(SequenceSpec::left_periodic(p, 0, {}, {1, -1}));
    REQUIRE(lp.is_convergent());

    CHECK_THROWS_AS(cesaro_sum(SequenceSpec::impulse(p)), UnsupportedSequence);
    CHECK_FALSE(cesaro_sum(SequenceSpec::unit_step(p)).is_convergent());
}

TEST_CASE("oracle returns exactly one half for the alternating series") {
    const auto r = cesaro_oracle({}, {1, -1}, std::nullopt);
    REQUIRE(r.has_value());
    CHECK(*r == boost::rational<std::int64_t>(1, 2));
}

TEST_CASE("oracle returns nothing when partial sums never settle") {
    CHECK_FALSE(cesaro_oracle({}, {1}, std::nullopt).has_value());
}

TEST_CASE("oracle agrees with the engine on random periodic series") {
    std::mt19937_64 rng(20260823);
    const std::int64_t primes[] = {3, 7, 11};
    int convergent_seen = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const PrimeModulus p(primes[trial % 3]);
        const std::size_t len = 1 + rng() % 6;
        std::vector<std::int64_t> period(len);
        for (auto& v : period)
            v = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(
                                                      p.value()));
        const auto engine =
            cesaro_sum(Series<FpElement>{{}, fp_list(period, p)}, p);
        const auto oracle = cesaro_oracle({}, period, p.value());
        REQUIRE(oracle.has_value());
        if (!engine.is_convergent()) continue;
        ++convergent_seen;
        // Reduce the exact rational mod p.
        REQUIRE(oracle->denominator() % p.value() != 0);
        const FpElement want = FpElement(oracle->numerator(), p) *
                               FpElement(oracle->denominator(), p).inv();
        CHECK(engine.sigma() == want);
    }
    CHECK(convergent_seen > 10);
}

TEST_CASE("oracle agrees with the engine on balanced periodic series") {
    // Appending a balancing term forces the one-period sum to zero, so
    // almost every draw converges and the comparison actually exercises the
    // convergent path.
    std::mt19937_64 rng(7117);
    const std::int64_t primes[] = {3, 7, 11};
    int compared = 0;
    for (int trial = 0; trial < 300 && compared < 100; ++trial) {
        const PrimeModulus p(primes[trial % 3]);
        const std::size_t len = 1 + rng() % 5;
        std::vector<std::int64_t> period(len);
        std::int64_t sum = 0;
        for (auto& v : period) {
            v = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(
                                                      p.value()));
            sum += v;
        }
        period.push_back((p.value() - sum % p.value()) % p.value());

        const auto engine =
            cesaro_sum(Series<FpElement>{{}, fp_list(period, p)}, p);
        if (!engine.is_convergent()) continue;
        ++compared;
        const auto oracle = cesaro_oracle({}, period, p.value());
        REQUIRE(oracle.has_value());
        REQUIRE(oracle->denominator() % p.value() != 0);
        const FpElement want = FpElement(oracle->numerator(), p) *
                               FpElement(oracle->denominator(), p).inv();
        CHECK(engine.sigma() == want);
    }
    CHECK(compared == 100);
}

TEST_CASE("oracle input validation") {
    CHECK_THROWS_AS(cesaro_oracle({}, {}, std::nullopt), BadInput);
    CHECK_THROWS_AS(cesaro_oracle({}, {1}, std::nullopt, 0), BadInput);
    CHECK_THROWS_AS(cesaro_oracle({}, {1}, 1), BadInput);
}

}
