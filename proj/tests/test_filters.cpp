// Copyright (C) 2026 the galois-dsp authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "gdsp/errors.hpp"
#include "gdsp/ffdtft.hpp"
#include "gdsp/filters.hpp"

using namespace gdsp;

namespace {

std::vector<FpElement> fp_list(const std::vector<std::int64_t>& vals,
                               PrimeModulus p) {
    std::vector<FpElement> out;
    out.reserve(vals.size());
    for (std::int64_t v : vals) out.emplace_back(v, p);
    return out;
}

// Integer-domain convolution reduced at the end; shares nothing with the
// library routine beyond the definition.
std::vector<std::int64_t> conv_oracle(const std::vector<std::int64_t>& h,
                                      const std::vector<std::int64_t>& x,
                                      std::int64_t p) {
    std::vector<std::int64_t> y(h.size() + x.size() - 1, 0);
    for (std::size_t n = 0; n < y.size(); ++n) {
        for (std::size_t k = 0; k < h.size(); ++k) {
            if (k > n || n - k >= x.size()) continue;
            y[n] += h[k] * x[n - k];
        }
        y[n] %= p;
    }
    return y;
}

}  // namespace

TEST_SUITE("filters") {

TEST_CASE("filter construction validates taps and poles") {
    const PrimeModulus p3(3), p7(7);
    CHECK_THROWS_AS(FirFilter({}), BadInput);
    CHECK_THROWS_AS(FirFilter({FpElement(1, p3), FpElement(1, p7)}),
                    ModulusMismatch);

    CHECK_THROWS_AS(IirFilter({{FpElement(1, p7), FpElement(0, p7)}}),
                    ZeroArgument);
    CHECK_THROWS_AS(IirFilter({{FpElement(1, p3), FpElement(1, p7)}}),
                    ModulusMismatch);
    CHECK_THROWS_AS(IirFilter({{FpElement(1, p7), FpElement(1, p7)},
                               {FpElement(1, p3), FpElement(1, p3)}}),
                    ModulusMismatch);
}

TEST_CASE("a single unit tap is the identity") {
    const PrimeModulus p(7);
    const FirFilter f(fp_list({1}, p));
    const Window x{-4, fp_list({3, 0, 6, 2}, p)};
    const Window y = fir_apply_time(f, x);
    CHECK(y == x);
}

TEST_CASE("small convolutions match hand-computed values") {
    const PrimeModulus p(3);
    const FirFilter f(fp_list({1, 1}, p));
    const Window x{0, fp_list({1, 2, 1}, p)};
    const Window y = fir_apply_time(f, x);
    CHECK(y.start == 0);
    CHECK(y.values == fp_list({1, 0, 0, 1}, p));

    const FirFilter zero(fp_list({0}, p));
    CHECK(fir_apply_time(zero, x).values == fp_list({0, 0, 0}, p));

    const Window shifted{-3, fp_list({1, 1}, p)};
    CHECK(fir_apply_time(f, shifted).start == -3);

    const Window empty{5, {}};
    const Window ye = fir_apply_time(f, empty);
    CHECK(ye.start == 5);
    CHECK(ye.values == fp_list({0}, p));
}

TEST_CASE("time-domain filtering matches an integer-domain oracle") {
    std::mt19937 rng(8080);
    for (std::int64_t pv : {3, 7}) {
        const PrimeModulus p(pv);
        std::uniform_int_distribution<std::int64_t> coef(0, pv - 1);
        std::uniform_int_distribution<std::int64_t> hlen(1, 5), xlen(1, 8);
        std::uniform_int_distribution<std::int64_t> start(-5, 5);
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<std::int64_t> h(static_cast<std::size_t>(hlen(rng)));
            std::vector<std::int64_t> x(static_cast<std::size_t>(xlen(rng)));
            for (auto& v : h) v = coef(rng);
            for (auto& v : x) v = coef(rng);

            const Window y = fir_apply_time(FirFilter(fp_list(h, p)),
                                            Window{start(rng), fp_list(x, p)});
            const auto want = conv_oracle(h, x, pv);
            REQUIRE(y.values.size() == want.size());
            for (std::size_t i = 0; i < want.size(); ++i) {
                CHECK(y.values[i].value() == want[i]);
            }
        }
    }
}

TEST_CASE("the transform route reproduces time-domain filtering") {
    std::mt19937 rng(990);
    for (auto [pv, n] : {std::pair<std::int64_t, std::int64_t>{7, 8}, {7, 16},
                         {3, 8}}) {
        const PrimeModulus p(pv);
        const FfftPlan plan = FfftPlan::make(p, 1, 1, n);
        std::uniform_int_distribution<std::int64_t> coef(0, pv - 1);
        std::uniform_int_distribution<std::int64_t> hlen(1, 3), xlen(1, 6);
        const int trials = n == 8 ? 100 : 20;
        for (int trial = 0; trial < trials; ++trial) {
            std::vector<std::int64_t> h(static_cast<std::size_t>(hlen(rng)));
            std::vector<std::int64_t> x(static_cast<std::size_t>(xlen(rng)));
            for (auto& v : h) v = coef(rng);
            for (auto& v : x) v = coef(rng);
            if (h.empty()) h.push_back(1);

            const FirFilter f(fp_list(h, p));
            const Window win{-2, fp_list(x, p)};
            CHECK(fir_apply_ffft(f, win, plan) == fir_apply_time(f, win));
        }
    }
}

TEST_CASE("the transform route rejects undersized plans and foreign moduli") {
    const PrimeModulus p(7);
    const FfftPlan plan = FfftPlan::make(p, 1, 1, 8);
    const FirFilter f(fp_list({1, 2, 3, 4}, p));
    const Window x{0, fp_list({1, 1, 1, 1, 1, 1}, p)};
    CHECK_THROWS_AS(fir_apply_ffft(f, x, plan), PlanTooShort);

    const Window ok{0, fp_list({1, 1, 1}, p)};
    CHECK(fir_apply_ffft(f, ok, plan).values.size() == 6);

    const FfftPlan plan3 = FfftPlan::make(PrimeModulus(3), 1, 1, 8);
    CHECK_THROWS_AS(fir_apply_ffft(f, ok, plan3), ModulusMismatch);

    const Window wrong{0, fp_list({1}, PrimeModulus(3))};
    CHECK_THROWS_AS(fir_apply_time(f, wrong), ModulusMismatch);
    CHECK_THROWS_AS(fir_apply_ffft(f, wrong, plan), ModulusMismatch);
}

TEST_CASE("single-pole responses match the exponential transform") {
    for (std::int64_t pv : {3, 7}) {
        const PrimeModulus p(pv);
        const PolarContext ctx = PolarContext::build(p);
        for (std::int64_t a = 1; a < pv; ++a) {
            for (std::int64_t amp : {1, 2}) {
                CAPTURE(pv);
                CAPTURE(a);
                const FpElement A(amp, p), base(a, p);
                const Spectrum response =
                    iir_frequency_response(IirFilter({{A, base}}), ctx);
                const Spectrum direct =
                    fdtft(SequenceSpec::exponential(A, base), ctx);
                CHECK(response == direct);
            }
        }
    }
}

TEST_CASE("a golden single-pole response value") {
    const PrimeModulus p(7);
    const PolarContext ctx = PolarContext::build(p);
    const Spectrum X = iir_frequency_response(
        IirFilter({{FpElement(1, p), FpElement(3, p)}}), ctx);
    CHECK(X.at(0) == GaussianInteger(3, 0, p));
    CHECK(!X.any_divergent());
}

TEST_CASE("multi-pole responses sum terms and mark poles divergent") {
    const PrimeModulus p(7);
    const PolarContext ctx = PolarContext::build(p);

    const Spectrum both = iir_frequency_response(
        IirFilter({{FpElement(1, p), FpElement(1, p)},
                   {FpElement(2, p), FpElement(3, p)}}),
        ctx);
    const Spectrum lone = iir_frequency_response(
        IirFilter({{FpElement(2, p), FpElement(3, p)}}), ctx);
    const Spectrum step = fdtft(SequenceSpec::unit_step(p), ctx);
    for (std::int64_t theta = 0; theta < ctx.phase_order(); ++theta) {
        if (theta == 0) {
            CHECK(both.is_divergent(theta));
            continue;
        }
        CHECK(both.at(theta) == lone.at(theta) + step.at(theta));
    }

    const Spectrum cancel = iir_frequency_response(
        IirFilter({{FpElement(2, p), FpElement(3, p)},
                   {FpElement(5, p), FpElement(3, p)}}),
        ctx);
    CHECK(!cancel.any_divergent());
    for (std::int64_t theta = 0; theta < ctx.phase_order(); ++theta) {
        CHECK(cancel.at(theta).is_zero());
    }

    const Spectrum empty = iir_frequency_response(IirFilter({}), ctx);
    CHECK(!empty.any_divergent());
    for (std::int64_t theta = 0; theta < ctx.phase_order(); ++theta) {
        CHECK(empty.at(theta).is_zero());
    }

    CHECK_THROWS_AS(
        iir_frequency_response(
            IirFilter({{FpElement(1, PrimeModulus(3)), FpElement(1, PrimeModulus(3))}}),
            ctx),
        ModulusMismatch);
}

}
