// Copyright (C) 2026 the galois-dsp authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "gdsp/errors.hpp"
#include "gdsp/ffft.hpp"

using namespace gdsp;

namespace {

FfftVector lift(const FfftPlan& plan, const std::vector<std::int64_t>& vals) {
    FfftVector out;
    out.reserve(vals.size());
    for (std::int64_t v : vals) {
        out.push_back(plan.field().from_prime_field(
            FpElement(v, plan.field().prime())));
    }
    return out;
}

FfftVector random_input(const FfftPlan& plan, std::mt19937& rng) {
    std::uniform_int_distribution<std::int64_t> coef(
        0, plan.field().prime().value() - 1);
    std::vector<std::int64_t> vals(static_cast<std::size_t>(plan.length()));
    for (auto& v : vals) v = coef(rng);
    return lift(plan, vals);
}

// Direct transform evaluation through ExtElement::pow, bypassing the plan's
// power table.
FfftVector dft_by_pow(const FfftVector& f, const FfftPlan& plan) {
    const std::int64_t n = plan.length();
    FfftVector out;
    for (std::int64_t k = 0; k < n; ++k) {
        ExtElement acc = ExtElement::zero(plan.field().carrier());
        for (std::int64_t i = 0; i < n; ++i)
            acc += f[static_cast<std::size_t>(i)] * plan.zeta().pow((i * k) % n);
        out.push_back(acc);
    }
    return out;
}

}  // namespace

TEST_SUITE("ffft") {

TEST_CASE("plans accept exactly the divisors of the carrier group order") {
    const FfftPlan p8 = FfftPlan::make(PrimeModulus(7), 1, 1, 8);
    CHECK(p8.length() == 8);
    CHECK(ext_order(p8.zeta()) == 8);

    const FfftPlan p16 = FfftPlan::make(PrimeModulus(7), 1, 1, 16);
    CHECK(p16.length() == 16);
    CHECK(ext_order(p16.zeta()) == 16);

    CHECK_THROWS_AS(FfftPlan::make(PrimeModulus(7), 1, 1, 5), InvalidLength);
    CHECK_THROWS_AS(FfftPlan::make(PrimeModulus(7), 1, 1, 7), InvalidLength);
    CHECK_THROWS_AS(FfftPlan::make(PrimeModulus(7), 1, 1, 0), InvalidLength);
    CHECK_THROWS_AS(FfftPlan::make(PrimeModulus(7), 1, 1, -8), InvalidLength);

    const FfftPlan p4 = FfftPlan::make(PrimeModulus(3), 1, 1, 4);
    CHECK(p4.zeta() == p4.field().j_element());

    const ExtElement one = ExtElement::one(p8.field().carrier());
    CHECK(p8.zeta_pow(0) == one);
    CHECK(p8.zeta_pow(8) == one);
    CHECK(p8.zeta_pow(-1) == p8.zeta_pow(7));
    CHECK(p8.zeta_pow(3) == p8.zeta().pow(3));
}

TEST_CASE("explicit kernels set the length from their order") {
    const ComplexExt gl = ComplexExt::build(PrimeModulus(7), 1, 1);
    const FfftPlan plan = FfftPlan::with_kernel(gl, gl.j_element());
    CHECK(plan.length() == 4);

    const ComplexExt gl3 = ComplexExt::build(PrimeModulus(3), 1, 1);
    CHECK_THROWS_AS(FfftPlan::with_kernel(gl, gl3.j_element()), FieldMismatch);
    CHECK_THROWS_AS(
        FfftPlan::with_kernel(gl, ExtElement::zero(gl.carrier())),
        ZeroArgument);
}

TEST_CASE("the impulse transforms to the all-ones vector") {
    for (auto [p, n] : {std::pair<std::int64_t, std::int64_t>{7, 8}, {3, 4}}) {
        const FfftPlan plan = FfftPlan::make(PrimeModulus(p), 1, 1, n);
        std::vector<std::int64_t> vals(static_cast<std::size_t>(n), 0);
        vals[0] = 1;
        const FfftVector F = ffft(lift(plan, vals), plan);
        const ExtElement one = ExtElement::one(plan.field().carrier());
        for (const auto& e : F) CHECK(e == one);
    }
}

TEST_CASE("a shifted impulse over GL(3) yields the four fourth roots") {
    const FfftPlan plan = FfftPlan::make(PrimeModulus(3), 1, 1, 4);
    const ExtElement one = ExtElement::one(plan.field().carrier());
    const ExtElement j = plan.field().j_element();
    const FfftVector F = ffft(lift(plan, {0, 1, 0, 0}), plan);
    REQUIRE(F.size() == 4);
    CHECK(F[0] == one);
    CHECK(F[1] == j);
    CHECK(F[2] == -one);
    CHECK(F[3] == -j);
}

TEST_CASE("zero maps to zero and constants to a single bin") {
    const FfftPlan plan = FfftPlan::make(PrimeModulus(7), 1, 1, 8);
    const ExtElement zero = ExtElement::zero(plan.field().carrier());

    const FfftVector Z = ffft(lift(plan, {0, 0, 0, 0, 0, 0, 0, 0}), plan);
    for (const auto& e : Z) CHECK(e == zero);

    const FfftVector C = ffft(lift(plan, {3, 3, 3, 3, 3, 3, 3, 3}), plan);
    const PrimeModulus p = plan.field().prime();
    CHECK(C[0] == plan.field().from_prime_field(FpElement(8, p) * FpElement(3, p)));
    for (std::size_t k = 1; k < C.size(); ++k) CHECK(C[k] == zero);
}

TEST_CASE("the transform matches direct power evaluation and is linear") {
    std::mt19937 rng(97);
    for (auto [p, n] : {std::pair<std::int64_t, std::int64_t>{7, 8}, {7, 6}, {3, 8}}) {
        const FfftPlan plan = FfftPlan::make(PrimeModulus(p), 1, 1, n);
        for (int trial = 0; trial < 20; ++trial) {
            const FfftVector f = random_input(plan, rng);
            const FfftVector g = random_input(plan, rng);
            const FfftVector F = ffft(f, plan);
            CHECK(F == dft_by_pow(f, plan));

            const ExtElement c = plan.field().from_prime_field(
                FpElement(2, plan.field().prime()));
            FfftVector mix;
            for (std::size_t i = 0; i < f.size(); ++i)
                mix.push_back(f[i] + c * g[i]);
            const FfftVector G = ffft(g, plan);
            const FfftVector M = ffft(mix, plan);
            for (std::size_t i = 0; i < f.size(); ++i)
                CHECK(M[i] == F[i] + c * G[i]);
        }
    }
}

TEST_CASE("inverse transform undoes the forward transform") {
    std::mt19937 rng(4242);
    for (auto [p, n] : {std::pair<std::int64_t, std::int64_t>{7, 8}, {7, 4},
                        {7, 16}, {7, 48}, {7, 1}, {3, 2}, {3, 4}, {3, 8}}) {
        const FfftPlan plan = FfftPlan::make(PrimeModulus(p), 1, 1, n);
        const int trials = n == 8 ? 100 : 10;
        for (int trial = 0; trial < trials; ++trial) {
            const FfftVector f = random_input(plan, rng);
            CHECK(iffft(ffft(f, plan), plan) == f);
        }
    }
}

TEST_CASE("new lengths give conjugate-symmetric spectra of real input") {
    std::mt19937 rng(55);
    for (auto [p, n] : {std::pair<std::int64_t, std::int64_t>{7, 8}, {3, 4}}) {
        const FfftPlan plan = FfftPlan::make(PrimeModulus(p), 1, 1, n);
        const FfftVector F = ffft(random_input(plan, rng), plan);
        for (std::int64_t k = 0; k < n; ++k) {
            CHECK(F[static_cast<std::size_t>((n - k) % n)] ==
                  F[static_cast<std::size_t>(k)].pow(p));
        }
    }
}

TEST_CASE("cyclic convolution has an identity and matches the golden case") {
    const FfftPlan plan3 = FfftPlan::make(PrimeModulus(7), 1, 1, 3);
    const FfftVector rotated = cyclic_convolution(
        lift(plan3, {1, 2, 3}), lift(plan3, {0, 1, 0}), plan3);
    CHECK(rotated == lift(plan3, {3, 1, 2}));

    std::mt19937 rng(7);
    const FfftPlan plan8 = FfftPlan::make(PrimeModulus(7), 1, 1, 8);
    const FfftVector f = random_input(plan8, rng);
    FfftVector delta = lift(plan8, {1, 0, 0, 0, 0, 0, 0, 0});
    CHECK(cyclic_convolution(f, delta, plan8) == f);
    CHECK(cyclic_convolution(delta, f, plan8) == f);
}

TEST_CASE("the transform turns convolution into pointwise products") {
    std::mt19937 rng(31415);
    for (std::int64_t n : {4, 8, 16}) {
        const FfftPlan plan = FfftPlan::make(PrimeModulus(7), 1, 1, n);
        for (int trial = 0; trial < 25; ++trial) {
            const FfftVector f = random_input(plan, rng);
            const FfftVector g = random_input(plan, rng);
            const FfftVector lhs = ffft(cyclic_convolution(f, g, plan), plan, true);
            const FfftVector rhs = pointwise_mul(ffft(f, plan), ffft(g, plan));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("input validation distinguishes alphabet, length and field errors") {
    const FfftPlan plan = FfftPlan::make(PrimeModulus(7), 1, 1, 4);
    FfftVector f = lift(plan, {1, 2, 3, 4});

    FfftVector bad = f;
    bad[2] = plan.field().j_element();
    CHECK_THROWS_AS(ffft(bad, plan), BadInput);
    const FfftVector relaxed = ffft(bad, plan, true);
    CHECK(relaxed == dft_by_pow(bad, plan));
    CHECK(iffft(relaxed, plan) == bad);

    CHECK_THROWS_AS(ffft(lift(plan, {1, 2, 3}), plan), LengthMismatch);
    CHECK_THROWS_AS(pointwise_mul(f, lift(plan, {1, 2, 3})), LengthMismatch);

    const FfftPlan other = FfftPlan::make(PrimeModulus(3), 1, 1, 4);
    CHECK_THROWS_AS(ffft(lift(other, {1, 0, 1, 0}), plan), FieldMismatch);
    CHECK_THROWS_AS(
        cyclic_convolution(f, lift(other, {1, 0, 1, 0}), plan), FieldMismatch);
}

TEST_CASE("the real-kernel special case agrees with the complex kernel") {
    std::mt19937 rng(600);
    const ComplexExt gl = ComplexExt::build(PrimeModulus(7), 1, 1);
    const ExtElement a = gl.element_of_order(6);
    CHECK(gl.is_real(a));
    const FfftPlan plan = FfftPlan::with_kernel(gl, a);
    REQUIRE(plan.length() == 6);

    for (int trial = 0; trial < 30; ++trial) {
        const FfftVector f = random_input(plan, rng);
        const FfftVector direct = pollard_special_case(f, a, gl);
        CHECK(direct == ffft(f, plan));
        for (const auto& e : direct) CHECK(gl.is_real(e));
    }
}

TEST_CASE("the order-two real kernel is the butterfly") {
    const ComplexExt gl = ComplexExt::build(PrimeModulus(7), 1, 1);
    const ExtElement minus_one = -ExtElement::one(gl.carrier());
    REQUIRE(ext_order(minus_one) == 2);
    const auto c = [&](std::int64_t v) {
        return gl.from_prime_field(FpElement(v, PrimeModulus(7)));
    };
    const FfftVector F = pollard_special_case({c(5), c(3)}, minus_one, gl);
    REQUIRE(F.size() == 2);
    CHECK(F[0] == c(5 + 3));
    CHECK(F[1] == c(5 - 3));
}

TEST_CASE("the real-kernel special case validates its inputs") {
    const ComplexExt gl = ComplexExt::build(PrimeModulus(7), 1, 1);
    const ExtElement a = gl.element_of_order(6);
    const auto c = [&](std::int64_t v) {
        return gl.from_prime_field(FpElement(v, PrimeModulus(7)));
    };

    CHECK_THROWS_AS(pollard_special_case({c(1), c(2), c(3)}, a, gl),
                    OrderMismatch);
    CHECK_THROWS_AS(pollard_special_case({}, a, gl), OrderMismatch);
    CHECK_THROWS_AS(
        pollard_special_case({c(1), c(2), c(3), c(4)}, gl.j_element(), gl),
        BadInput);

    FfftVector bad(6, c(1));
    bad[4] = gl.generator();
    CHECK(!gl.in_input_alphabet(gl.generator()));
    CHECK_THROWS_AS(pollard_special_case(bad, a, gl), BadInput);

    const ComplexExt gl3 = ComplexExt::build(PrimeModulus(3), 1, 1);
    CHECK_THROWS_AS(
        pollard_special_case({c(1), c(2)}, -ExtElement::one(gl3.carrier()), gl),
        FieldMismatch);
}

TEST_CASE("the length catalogue classifies divisors of the group order") {
    const auto table7 = length_catalogue(PrimeModulus(7), 1, 1);
    const std::vector<std::pair<std::int64_t, LengthClass>> want7 = {
        {1, LengthClass::Classic},  {2, LengthClass::Classic},
        {3, LengthClass::Classic},  {4, LengthClass::New},
        {6, LengthClass::Classic},  {8, LengthClass::New},
        {12, LengthClass::Mixed},   {16, LengthClass::Mixed},
        {24, LengthClass::Mixed},   {48, LengthClass::Mixed},
    };
    REQUIRE(table7.size() == want7.size());
    for (std::size_t i = 0; i < want7.size(); ++i) {
        CAPTURE(i);
        CHECK(table7[i].n == want7[i].first);
        CHECK(table7[i].cls == want7[i].second);
    }

    const auto table3 = length_catalogue(PrimeModulus(3), 1, 1);
    REQUIRE(table3.size() == 4);
    CHECK(table3[0].n == 1);
    CHECK(table3[0].cls == LengthClass::Classic);
    CHECK(table3[1].n == 2);
    CHECK(table3[1].cls == LengthClass::Classic);
    CHECK(table3[2].n == 4);
    CHECK(table3[2].cls == LengthClass::New);
    CHECK(table3[3].n == 8);
    CHECK(table3[3].cls == LengthClass::Mixed);

    const auto table9 = length_catalogue(PrimeModulus(3), 1, 2);
    auto find = [&](std::int64_t n) {
        for (const auto& e : table9)
            if (e.n == n) return e.cls;
        FAIL("length missing from catalogue");
        return LengthClass::Mixed;
    };
    CHECK(find(5) == LengthClass::New);
    CHECK(find(10) == LengthClass::New);
    CHECK(find(8) == LengthClass::Classic);
    CHECK(find(16) == LengthClass::Mixed);

    const auto squared = length_catalogue(PrimeModulus(3), 2, 1);
    REQUIRE(squared.size() == table9.size());
    for (std::size_t i = 0; i < squared.size(); ++i) {
        CHECK(squared[i].n == table9[i].n);
        CHECK(squared[i].cls == table9[i].cls);
    }

    CHECK(std::string(to_string(LengthClass::Classic)) == "classic");
    CHECK(std::string(to_string(LengthClass::New)) == "new");
    CHECK(std::string(to_string(LengthClass::Mixed)) == "mixed");
    CHECK_THROWS_AS(length_catalogue(PrimeModulus(3), 0, 1), BadInput);
}

}
