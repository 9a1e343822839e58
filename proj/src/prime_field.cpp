// Copyright (C) 2026 the galois-dsp authors
// SPDX-License-Identifier: Apache-2.0

#include "gdsp/prime_field.hpp"

#include <ostream>
#include <string>

#include "gdsp/number_theory.hpp"

namespace gdsp {

PrimeModulus::PrimeModulus(std::int64_t p) : p_(p) {
    if (p < 3 || p % 2 == 0 || !nt::is_prime(p)) {
        throw InvalidModulus("modulus must be an odd prime >= 3, got " +
                             std::to_string(p));
    }
}

void PrimeModulus::require_complex() const {
    if (!supports_complex()) {
        throw UnsupportedModulus(
            "p = " + std::to_string(p_) +
            " is 1 (mod 4); -1 is a residue and GL(p) is not a field");
    }
}

namespace {

void check_same_modulus(PrimeModulus a, PrimeModulus b) {
    if (!(a == b)) {
        throw ModulusMismatch("cannot combine GF(" + std::to_string(a.value()) +
                              ") with GF(" + std::to_string(b.value()) + ")");
    }
}

}  // namespace

FpElement::FpElement(std::int64_t value, PrimeModulus modulus)
    : value_(((value % modulus.value()) + modulus.value()) % modulus.value()),
      modulus_(modulus) {}

FpElement FpElement::operator+(FpElement rhs) const {
    check_same_modulus(modulus_, rhs.modulus_);
    return {value_ + rhs.value_, modulus_};
}

FpElement FpElement::operator-(FpElement rhs) const {
    check_same_modulus(modulus_, rhs.modulus_);
    return {value_ - rhs.value_, modulus_};
}

FpElement FpElement::operator*(FpElement rhs) const {
    check_same_modulus(modulus_, rhs.modulus_);
    return {nt::mul_mod(value_, rhs.value_, modulus_.value()), modulus_};
}

FpElement FpElement::operator-() const { return {-value_, modulus_}; }

FpElement FpElement::inv() const {
    if (is_zero()) throw ZeroInverse();
    // Fermat: x^(p-2) is the inverse in GF(p).
    return pow(modulus_.value() - 2);
}

FpElement FpElement::pow(std::int64_t e) const {
    if (e < 0) return inv().pow(-e);
    return {nt::pow_mod(value_, e, modulus_.value()), modulus_};
}

std::ostream& operator<<(std::ostream& os, FpElement x) {
    return os << x.value() << " (mod " << x.modulus().value() << ")";
}

bool is_quadratic_residue(FpElement x) {
    if (x.is_zero()) throw ZeroArgument("0 is neither residue nor non-residue");
    const std::int64_t p = x.modulus().value();
    return x.pow((p - 1) / 2).value() == 1;
}

FpElement modulus_signed(FpElement x) {
    if (x.is_zero()) return x;
    return is_quadratic_residue(x) ? x : -x;
}

FpElement sqrt_qr(FpElement x) {
    if (x.is_zero()) return x;
    x.modulus().require_complex();
    if (!is_quadratic_residue(x)) {
        throw NotAResidue(std::to_string(x.value()) + " is not a residue mod " +
                          std::to_string(x.modulus().value()));
    }
    const std::int64_t p = x.modulus().value();
    FpElement root = x.pow((p + 1) / 4);
    // The two roots are negatives of each other; exactly one survives the
    // signed modulus, which makes the choice canonical.
    return modulus_signed(root);
}

std::int64_t multiplicative_order(FpElement x) {
    if (x.is_zero()) throw ZeroArgument("order of zero is undefined");
    const std::int64_t group = x.modulus().value() - 1;
    std::int64_t order = group;
    for (std::int64_t q : nt::prime_factors(group)) {
        while (order % q == 0 && x.pow(order / q).value() == 1) order /= q;
    }
    return order;
}

}  // namespace gdsp
