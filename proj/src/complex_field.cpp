// Copyright (C) 2026 the galois-dsp authors
// SPDX-License-Identifier: Apache-2.0

#include "gdsp/complex_field.hpp"

#include <ostream>
#include <string>

#include "gdsp/number_theory.hpp"

namespace gdsp {

GaussianInteger::GaussianInteger(FpElement re, FpElement im) : re_(re), im_(im) {
    if (!(re.modulus() == im.modulus())) {
        throw ModulusMismatch("real and imaginary parts use different moduli");
    }
    re.modulus().require_complex();
}

GaussianInteger::GaussianInteger(std::int64_t re, std::int64_t im, PrimeModulus m)
    : GaussianInteger(FpElement(re, m), FpElement(im, m)) {}

GaussianInteger GaussianInteger::from_real(FpElement x) {
    return {x, FpElement::zero(x.modulus())};
}

GaussianInteger GaussianInteger::operator+(const GaussianInteger& rhs) const {
    return {re_ + rhs.re_, im_ + rhs.im_};
}

GaussianInteger GaussianInteger::operator-(const GaussianInteger& rhs) const {
    return {re_ - rhs.re_, im_ - rhs.im_};
}

GaussianInteger GaussianInteger::operator*(const GaussianInteger& rhs) const {
    // (a1 a2 - b1 b2) + j (a1 b2 + a2 b1)
    return {re_ * rhs.re_ - im_ * rhs.im_, re_ * rhs.im_ + rhs.re_ * im_};
}

GaussianInteger GaussianInteger::operator-() const { return {-re_, -im_}; }

GaussianInteger GaussianInteger::inv() const {
    if (is_zero()) throw ZeroInverse();
    // a^2 + b^2 is nonzero for nonzero x: a^2 = -b^2 would make -1 a residue.
    FpElement norm_inv = quadratic_norm(*this).inv();
    GaussianInteger c = conjugate(*this);
    return {c.re() * norm_inv, c.im() * norm_inv};
}

GaussianInteger GaussianInteger::pow(std::int64_t e) const {
    if (e < 0) return inv().pow(-e);
    GaussianInteger result = one(prime());
    GaussianInteger base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

std::ostream& operator<<(std::ostream& os, const GaussianInteger& x) {
    return os << x.re().value() << "+" << x.im().value() << "j (mod "
              << x.prime().value() << ")";
}

GaussianInteger conjugate(const GaussianInteger& x) {
    return {x.re(), -x.im()};
}

FpElement quadratic_norm(const GaussianInteger& x) {
    return x.re() * x.re() + x.im() * x.im();
}

FpElement complex_modulus(const GaussianInteger& x) {
    return modulus_signed(sqrt_qr(modulus_signed(quadratic_norm(x))));
}

std::int64_t multiplicative_order(const GaussianInteger& x) {
    if (x.is_zero()) throw ZeroArgument("order of zero is undefined");
    const std::int64_t p = x.prime().value();
    const std::int64_t group = p * p - 1;
    std::int64_t order = group;
    for (std::int64_t q : nt::prime_factors(group)) {
        while (order % q == 0 &&
               x.pow(order / q) == GaussianInteger::one(x.prime())) {
            order /= q;
        }
    }
    return order;
}

PolarContext::PolarContext(PrimeModulus p, GaussianInteger gen,
                           GaussianInteger eps, FpElement g_r)
    : p_(p), generator_(gen), epsilon_(eps), g_r_(g_r) {
    eps_powers_.reserve(static_cast<std::size_t>(phase_order()));
    GaussianInteger acc = GaussianInteger::one(p);
    for (std::int64_t k = 0; k < phase_order(); ++k) {
        eps_powers_.push_back(acc);
        acc *= epsilon_;
    }
}

std::int64_t PolarContext::phase_order() const noexcept {
    return 2 * (p_.value() + 1);
}

std::int64_t PolarContext::radial_order() const noexcept {
    return (p_.value() - 1) / 2;
}

const GaussianInteger& PolarContext::epsilon_pow(std::int64_t k) const {
    const std::int64_t n = phase_order();
    return eps_powers_[static_cast<std::size_t>(((k % n) + n) % n)];
}

PolarContext PolarContext::build(PrimeModulus p) {
    p.require_complex();
    const std::int64_t group = p.value() * p.value() - 1;
    const auto factors = nt::prime_factors(group);

    // Deterministic generator: first (a, b) in lexicographic order whose
    // order is the full group order.
    for (std::int64_t a = 0; a < p.value(); ++a) {
        for (std::int64_t b = 0; b < p.value(); ++b) {
            if (a == 0 && b == 0) continue;
            GaussianInteger g(a, b, p);
            bool primitive = true;
            for (std::int64_t q : factors) {
                if (g.pow(group / q) == GaussianInteger::one(p)) {
                    primitive = false;
                    break;
                }
            }
            if (!primitive) continue;

            GaussianInteger eps = g.pow((p.value() - 1) / 2);
            GaussianInteger radial = g.pow(2 * (p.value() + 1));
            if (!radial.is_real()) {
                throw Error("internal", "radial generator is not real");
            }
            PolarContext ctx(p, g, eps, radial.re());
            if (multiplicative_order(eps) != ctx.phase_order() ||
                multiplicative_order(radial.re()) != ctx.radial_order()) {
                throw Error("internal", "subgroup generator has wrong order");
            }
            return ctx;
        }
    }
    throw Error("internal", "no generator found (group is cyclic; unreachable)");
}

PolarForm to_polar(const GaussianInteger& x, const PolarContext& ctx) {
    if (x.is_zero()) throw ZeroArgument("zero has no polar form");
    FpElement r = complex_modulus(x);
    // theta by direct scan: x * r^-1 lands in the phase subgroup.
    GaussianInteger phase = x * GaussianInteger::from_real(r.inv());
    for (std::int64_t theta = 0; theta < ctx.phase_order(); ++theta) {
        if (ctx.epsilon_pow(theta) == phase) return {r, theta};
    }
    throw Error("internal", "polar decomposition failed (unreachable)");
}

GaussianInteger from_polar(const PolarForm& pf, const PolarContext& ctx) {
    return GaussianInteger::from_real(pf.r) * ctx.epsilon_pow(pf.theta);
}

}  // namespace gdsp
