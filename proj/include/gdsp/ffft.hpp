// Copyright (C) 2026 the galois-dsp authors
// SPDX-License-Identifier: Apache-2.0
//
// Fourier transform with complex kernel over GL(q^m): F_k = sum_i f_i zeta^(ik)
// for zeta of order N in the carrier GF(q^{2m}). Admissible lengths are the
// divisors of q^{2m}-1, which adds the divisors of q^m+1 to the classic
// real-kernel lengths. Direct O(N^2) evaluation throughout.

#pragma once

#include <cstdint>
#include <vector>

#include "gdsp/extension_field.hpp"

namespace gdsp {

using FfftVector = std::vector<ExtElement>;

class FfftPlan {
public:
    // Builds GL(q^m) for q = p^r and picks zeta = g^((q^{2m}-1)/N).
    // Throws InvalidLength if N does not divide q^{2m}-1.
    static FfftPlan make(PrimeModulus p, std::int64_t r, std::int64_t m,
                         std::int64_t n);
    // Adopts an explicit kernel; the length is ext_order(zeta).
    static FfftPlan with_kernel(ComplexExt field, ExtElement zeta);

    const ComplexExt& field() const noexcept { return field_; }
    const ExtElement& zeta() const noexcept { return zeta_; }
    std::int64_t length() const noexcept { return n_; }
    const ExtElement& zeta_pow(std::int64_t k) const;  // k taken mod N

private:
    FfftPlan(ComplexExt field, ExtElement zeta, std::int64_t n);

    ComplexExt field_;
    ExtElement zeta_;
    std::int64_t n_;
    std::vector<ExtElement> powers_;
};

// Inputs must lie in GF(q) unless relaxed_alphabet is set; outputs live in
// the carrier.
FfftVector ffft(const FfftVector& f, const FfftPlan& plan,
                bool relaxed_alphabet = false);

// f_i = inv(N mod p) sum_k F_k zeta^(-ik). N is coprime to p because
// N | q^{2m}-1.
FfftVector iffft(const FfftVector& F, const FfftPlan& plan);

// (f * g)_n = sum_i f_i g_{(n-i) mod N}, computed directly; the transform
// identity ffft(f * g) = pointwise_mul(ffft(f), ffft(g)) is the tested
// contract, not used here.
FfftVector cyclic_convolution(const FfftVector& f, const FfftVector& g,
                              const FfftPlan& plan);

FfftVector pointwise_mul(const FfftVector& F, const FfftVector& G);

// Classic real-kernel transform F_k = sum_i f_i a^(ik), evaluated by its own
// loop. a must lie in the real subfield GF(q^m) and have order equal to the
// vector length; matches ffft with zeta = a + 0j.
FfftVector pollard_special_case(const FfftVector& f, const ExtElement& a,
                                const ComplexExt& field);

enum class LengthClass { Classic, New, Mixed };
const char* to_string(LengthClass c);

struct LengthEntry {
    std::int64_t n;
    LengthClass cls;
};

// All divisors of q^{2m}-1: classic if the divisor divides q^m-1, new if it
// divides q^m+1 only, mixed otherwise.
std::vector<LengthEntry> length_catalogue(PrimeModulus p, std::int64_t r,
                                          std::int64_t m);

}  // namespace gdsp
