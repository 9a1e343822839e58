// Copyright (C) 2026 the galois-dsp authors
// SPDX-License-Identifier: Apache-2.0
//
// GF(p^k) arithmetic on polynomials mod a monic irreducible, and the
// complex alphabet GL(q^m) realized as the single field GF(p^{2rm}) with a
// distinguished square root of -1. Construction is deterministic: moduli
// come from a lexicographic search and generators from an element-index
// scan, so equal parameters always produce identical fields.

#pragma once

#include <cstdint>
#include <vector>

#include "gdsp/errors.hpp"
#include "gdsp/prime_field.hpp"

namespace gdsp {

// Irreducibility over GF(p) by the Frobenius criterion: x^(p^k) = x mod f
// and gcd(x^(p^(k/l)) - x, f) = 1 for every prime l dividing k.
// poly is a coefficient list, constant term first.
bool poly_is_irreducible(const std::vector<std::int64_t>& poly, PrimeModulus p);

class ExtField {
public:
    // Lexicographically first monic irreducible of degree k: candidates
    // x^k + c_{k-1}x^{k-1} + ... + c_0 are tried in increasing order of the
    // index c_0 + c_1 p + ... + c_{k-1} p^{k-1}.
    static ExtField make(PrimeModulus p, std::int64_t k);
    // Uses the given monic modulus after checking irreducibility.
    static ExtField with_modulus(PrimeModulus p, std::vector<std::int64_t> poly);

    PrimeModulus prime() const noexcept { return p_; }
    std::int64_t degree() const noexcept { return k_; }
    std::int64_t size() const noexcept { return size_; }  // p^k
    const std::vector<std::int64_t>& modulus_poly() const noexcept { return poly_; }

    friend bool operator==(const ExtField& a, const ExtField& b) {
        return a.p_.value() == b.p_.value() && a.k_ == b.k_ && a.poly_ == b.poly_;
    }
    friend bool operator!=(const ExtField& a, const ExtField& b) { return !(a == b); }

private:
    ExtField(PrimeModulus p, std::int64_t k, std::vector<std::int64_t> poly);

    PrimeModulus p_;
    std::int64_t k_;
    std::int64_t size_;
    std::vector<std::int64_t> poly_;  // degree k, constant first, monic
};

class ExtElement {
public:
    static ExtElement zero(const ExtField& f);
    static ExtElement one(const ExtField& f);
    // The class of x; needs degree >= 2.
    static ExtElement x(const ExtField& f);
    // Coefficients are reduced mod p; size must not exceed the degree.
    static ExtElement from_coeffs(const ExtField& f, std::vector<std::int64_t> coeffs);
    // The element whose index in the constant-first base-p digit order is t.
    static ExtElement from_index(const ExtField& f, std::int64_t t);

    const ExtField& field() const noexcept { return field_; }
    const std::vector<FpElement>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept;

    ExtElement operator+(const ExtElement& rhs) const;
    ExtElement operator-(const ExtElement& rhs) const;
    ExtElement operator*(const ExtElement& rhs) const;
    ExtElement operator-() const;
    ExtElement& operator+=(const ExtElement& r) { return *this = *this + r; }

    ExtElement inv() const;
    ExtElement pow(std::int64_t e) const;

    friend bool operator==(const ExtElement& a, const ExtElement& b) {
        return a.field_ == b.field_ && value_eq(a, b);
    }
    friend bool operator!=(const ExtElement& a, const ExtElement& b) { return !(a == b); }

private:
    ExtElement(ExtField f, std::vector<FpElement> c);
    static bool value_eq(const ExtElement& a, const ExtElement& b);
    void require_same_field(const ExtElement& rhs) const;

    ExtField field_;
    std::vector<FpElement> coeffs_;  // exactly degree() entries
};

// Least n >= 1 with x^n = 1; divides p^k - 1.
std::int64_t ext_order(const ExtElement& x);

// GL(q^m) with q = p^r, carried by GF(p^{2rm}). The distinguished j is
// g^((Q-1)/4) for the deterministic generator g of the carrier, so j^2 = -1.
class ComplexExt {
public:
    static ComplexExt build(PrimeModulus p, std::int64_t r, std::int64_t m);

    PrimeModulus prime() const noexcept { return carrier_.prime(); }
    std::int64_t r() const noexcept { return r_; }
    std::int64_t m() const noexcept { return m_; }
    std::int64_t q() const noexcept { return q_; }
    const ExtField& base() const noexcept { return base_; }          // GF(q^m)
    const ExtField& carrier() const noexcept { return carrier_; }    // GF(q^{2m})
    const ExtElement& j_element() const noexcept { return j_; }
    const ExtElement& generator() const noexcept { return gen_; }

    // Membership via Frobenius fixed points.
    bool in_input_alphabet(const ExtElement& x) const;  // x ∈ GF(q)
    bool is_real(const ExtElement& x) const;            // x ∈ GF(q^m)

    // GF(p) constants as carrier elements.
    ExtElement from_prime_field(FpElement a) const;

    // g^((Q-1)/N) where Q is the carrier size; throws InvalidLength
    // unless N divides Q-1.
    ExtElement element_of_order(std::int64_t n) const;

private:
    ComplexExt(ExtField base, ExtField carrier, ExtElement gen, ExtElement j,
               std::int64_t r, std::int64_t m, std::int64_t q);

    ExtField base_;
    ExtField carrier_;
    ExtElement gen_;
    ExtElement j_;
    std::int64_t r_;
    std::int64_t m_;
    std::int64_t q_;  // p^r
};

}  // namespace gdsp
