// Copyright (C) 2026 the galois-dsp authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "gdsp/prime_field.hpp"

namespace gdsp {

/// Gaussian integer a + jb over GF(p) with j^2 = -1, for p == 3 (mod 4).
/// These form a field of p^2 elements; arithmetic follows the usual complex
/// rules with components reduced mod p.
class GaussianInteger {
  public:
    GaussianInteger(FpElement re, FpElement im);
    GaussianInteger(std::int64_t re, std::int64_t im, PrimeModulus m);

    static GaussianInteger zero(PrimeModulus m) { return {0, 0, m}; }
    static GaussianInteger one(PrimeModulus m) { return {1, 0, m}; }

    /// Embeds a real element as x + 0j.
    static GaussianInteger from_real(FpElement x);

    FpElement re() const noexcept { return re_; }
    FpElement im() const noexcept { return im_; }
    PrimeModulus prime() const noexcept { return re_.modulus(); }
    bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const noexcept { return im_.is_zero(); }

    GaussianInteger operator+(const GaussianInteger& rhs) const;
    GaussianInteger operator-(const GaussianInteger& rhs) const;
    GaussianInteger operator*(const GaussianInteger& rhs) const;
    GaussianInteger operator-() const;

    GaussianInteger& operator+=(const GaussianInteger& r) { return *this = *this + r; }
    GaussianInteger& operator-=(const GaussianInteger& r) { return *this = *this - r; }
    GaussianInteger& operator*=(const GaussianInteger& r) { return *this = *this * r; }

    /// Multiplicative inverse conj(x) / (a^2 + b^2); throws ZeroInverse.
    GaussianInteger inv() const;

    /// x^e; negative exponents route through inv().
    GaussianInteger pow(std::int64_t e) const;

    friend bool operator==(const GaussianInteger&, const GaussianInteger&) = default;

  private:
    FpElement re_;
    FpElement im_;
};

std::ostream& operator<<(std::ostream& os, const GaussianInteger& x);

/// Complex conjugate (a, b) -> (a, -b). Coincides with x^p.
GaussianInteger conjugate(const GaussianInteger& x);

/// a^2 + b^2. For nonzero x this is the real part of x^(p+1).
FpElement quadratic_norm(const GaussianInteger& x);

/// The complex modulus |a + jb|: signed modulus of the canonical square root
/// of the signed modulus of a^2 + b^2. Always a quadratic residue or zero.
FpElement complex_modulus(const GaussianInteger& x);

/// Least k >= 1 with x^k == 1; divides p^2 - 1. Throws ZeroArgument on zero.
std::int64_t multiplicative_order(const GaussianInteger& x);

/// Fixed generators for the polar representation x = r * epsilon^theta.
///
/// The multiplicative group of the complex field is cyclic of order p^2 - 1 =
/// ((p-1)/2) * 2(p+1) with the two factors coprime, so it splits into a
/// radial subgroup of order (p-1)/2 (the quadratic residues of p, realized
/// inside GF(p)) and a phase subgroup of order 2(p+1) generated by epsilon.
/// The generator search is deterministic, so a context is reproducible from p
/// alone.
class PolarContext {
  public:
    static PolarContext build(PrimeModulus p);

    PrimeModulus prime() const noexcept { return p_; }
    const GaussianInteger& generator() const noexcept { return generator_; }
    const GaussianInteger& epsilon() const noexcept { return epsilon_; }
    FpElement radial_generator() const noexcept { return g_r_; }

    /// N_theta = 2(p+1), the order of epsilon.
    std::int64_t phase_order() const noexcept;
    /// N_r = (p-1)/2, the order of the radial generator.
    std::int64_t radial_order() const noexcept;

    /// epsilon^k for any integer k (negative exponents wrap).
    const GaussianInteger& epsilon_pow(std::int64_t k) const;

  private:
    PolarContext(PrimeModulus p, GaussianInteger gen, GaussianInteger eps,
                 FpElement g_r);

    PrimeModulus p_;
    GaussianInteger generator_;
    GaussianInteger epsilon_;
    FpElement g_r_;
    std::vector<GaussianInteger> eps_powers_;
};

/// Polar coordinates of a nonzero element: x = r * epsilon^theta with r a
/// quadratic residue and theta in [0, 2(p+1)). Only meaningful together with
/// the PolarContext that produced it.
struct PolarForm {
    FpElement r;
    std::int64_t theta;
};

/// Unique polar decomposition; r always equals complex_modulus(x).
/// Throws ZeroArgument for zero (no polar form).
PolarForm to_polar(const GaussianInteger& x, const PolarContext& ctx);

/// Exact inverse of to_polar.
GaussianInteger from_polar(const PolarForm& pf, const PolarContext& ctx);

}  // namespace gdsp
