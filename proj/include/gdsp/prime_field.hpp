// Copyright (C) 2026 the galois-dsp authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>

#include "gdsp/errors.hpp"

namespace gdsp {

/// An odd prime modulus p >= 3, validated at construction.
///
/// The complex layer GL(p) additionally needs p == 3 (mod 4), so that -1 is a
/// quadratic non-residue; supports_complex() reports whether this modulus
/// qualifies. Plain GF(p) arithmetic works for every odd prime.
class PrimeModulus {
  public:
    explicit PrimeModulus(std::int64_t p);

    std::int64_t value() const noexcept { return p_; }
    bool supports_complex() const noexcept { return p_ % 4 == 3; }

    /// Throws UnsupportedModulus unless p == 3 (mod 4).
    void require_complex() const;

    friend bool operator==(PrimeModulus, PrimeModulus) = default;

  private:
    std::int64_t p_;
};

/// Canonical residue in GF(p). Value is always kept in [0, p-1]; mixing
/// elements of different moduli throws ModulusMismatch.
class FpElement {
  public:
    FpElement(std::int64_t value, PrimeModulus modulus);

    static FpElement zero(PrimeModulus m) { return {0, m}; }
    static FpElement one(PrimeModulus m) { return {1, m}; }

    std::int64_t value() const noexcept { return value_; }
    PrimeModulus modulus() const noexcept { return modulus_; }
    bool is_zero() const noexcept { return value_ == 0; }

    FpElement operator+(FpElement rhs) const;
    FpElement operator-(FpElement rhs) const;
    FpElement operator*(FpElement rhs) const;
    FpElement operator-() const;

    FpElement& operator+=(FpElement rhs) { return *this = *this + rhs; }
    FpElement& operator-=(FpElement rhs) { return *this = *this - rhs; }
    FpElement& operator*=(FpElement rhs) { return *this = *this * rhs; }

    /// Multiplicative inverse; throws ZeroInverse on zero.
    FpElement inv() const;

    /// x^e by square-and-multiply; negative exponents route through inv().
    FpElement pow(std::int64_t e) const;

    friend bool operator==(FpElement, FpElement) = default;

  private:
    std::int64_t value_;
    PrimeModulus modulus_;
};

std::ostream& operator<<(std::ostream& os, FpElement x);

/// Euler's criterion: x^((p-1)/2) == 1. Zero is neither residue nor
/// non-residue and throws ZeroArgument.
bool is_quadratic_residue(FpElement x);

/// Signed modulus |a|: a itself when a is a quadratic residue, -a otherwise.
/// |0| = 0. The result is always a quadratic residue or zero.
FpElement modulus_signed(FpElement x);

/// Square root of a quadratic residue via the p == 3 (mod 4) shortcut
/// x^((p+1)/4). Of the two roots +-s, returns the canonical one
/// modulus_signed(s), so the operation is single-valued. sqrt_qr(0) = 0.
/// Throws NotAResidue when x is a non-residue.
FpElement sqrt_qr(FpElement x);

/// Least k >= 1 with x^k == 1; divides p-1. Throws ZeroArgument on zero.
std::int64_t multiplicative_order(FpElement x);

}  // namespace gdsp
