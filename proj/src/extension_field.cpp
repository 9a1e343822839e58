// Copyright (C) 2026 the galois-dsp authors
// SPDX-License-Identifier: Apache-2.0

#include "gdsp/extension_field.hpp"

#include <stdexcept>
#include <utility>

#include "gdsp/number_theory.hpp"

namespace gdsp {

namespace {

using Poly = std::vector<std::int64_t>;  // constant term first

std::int64_t checked_pow(std::int64_t b, std::int64_t e) {
    std::int64_t out = 1;
    for (std::int64_t i = 0; i < e; ++i) {
        if (out > (std::int64_t{1} << 62) / b)
            throw BadInput("field size does not fit in 64 bits");
        out *= b;
    }
    return out;
}

std::int64_t canon(std::int64_t v, std::int64_t p) { return ((v % p) + p) % p; }

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::int64_t degree_of(const Poly& a) { return static_cast<std::int64_t>(a.size()) - 1; }

Poly poly_mul(const Poly& a, const Poly& b, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    trim(out);
    return out;
}

// Remainder of a by b; b need not be monic.
Poly poly_mod(Poly a, const Poly& b, std::int64_t p) {
    trim(a);
    const std::int64_t db = degree_of(b);
    const std::int64_t lead_inv = nt::pow_mod(b.back(), p - 2, p);
    while (degree_of(a) >= db) {
        const std::int64_t da = degree_of(a);
        const std::int64_t c = (a.back() * lead_inv) % p;
        for (std::int64_t i = 0; i <= db; ++i) {
            auto& t = a[static_cast<std::size_t>(da - db + i)];
            t = canon(t - c * b[static_cast<std::size_t>(i)], p);
        }
        trim(a);
    }
    return a;
}

Poly poly_gcd(Poly a, Poly b, std::int64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Poly poly_pow_mod(Poly base, std::int64_t e, const Poly& f, std::int64_t p) {
    Poly out{1};
    base = poly_mod(std::move(base), f, p);
    while (e > 0) {
        if (e & 1) out = poly_mod(poly_mul(out, base, p), f, p);
        base = poly_mod(poly_mul(base, base, p), f, p);
        e >>= 1;
    }
    return out;
}

Poly poly_sub(Poly a, const Poly& b, std::int64_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = canon(a[i] - b[i], p);
    trim(a);
    return a;
}

}  // namespace

bool poly_is_irreducible(const std::vector<std::int64_t>& poly, PrimeModulus pm) {
    const std::int64_t p = pm.value();
    Poly f;
    f.reserve(poly.size());
    for (std::int64_t c : poly) f.push_back(canon(c, p));
    trim(f);
    const std::int64_t k = degree_of(f);
    if (k < 1) return false;
    if (k == 1) return true;

    const Poly x{0, 1};
    const std::int64_t pk = checked_pow(p, k);
    if (poly_sub(poly_pow_mod(x, pk, f, p), poly_mod(x, f, p), p) != Poly{})
        return false;
    for (std::int64_t ell : nt::prime_factors(k)) {
        const std::int64_t pd = checked_pow(p, k / ell);
        const Poly h = poly_sub(poly_pow_mod(x, pd, f, p), poly_mod(x, f, p), p);
        if (degree_of(poly_gcd(h, f, p)) > 0) return false;
    }
    return true;
}

ExtField::ExtField(PrimeModulus p, std::int64_t k, std::vector<std::int64_t> poly)
    : p_(p), k_(k), size_(checked_pow(p.value(), k)), poly_(std::move(poly)) {}

ExtField ExtField::make(PrimeModulus p, std::int64_t k) {
    if (k < 1) throw BadInput("extension degree must be >= 1");
    const std::int64_t size = checked_pow(p.value(), k);
    for (std::int64_t t = 0; t < size; ++t) {
        std::vector<std::int64_t> poly(static_cast<std::size_t>(k) + 1, 0);
        std::int64_t rem = t;
        for (std::int64_t i = 0; i < k; ++i) {
            poly[static_cast<std::size_t>(i)] = rem % p.value();
            rem /= p.value();
        }
        poly[static_cast<std::size_t>(k)] = 1;
        if (poly_is_irreducible(poly, p)) return ExtField(p, k, std::move(poly));
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable
}

ExtField ExtField::with_modulus(PrimeModulus p, std::vector<std::int64_t> poly) {
    for (auto& c : poly) c = canon(c, p.value());
    trim(poly);
    const std::int64_t k = degree_of(poly);
    if (k < 1) throw InvalidModulus("modulus polynomial must have degree >= 1");
    if (poly.back() != 1) throw InvalidModulus("modulus polynomial must be monic");
    if (!poly_is_irreducible(poly, p))
        throw InvalidModulus("modulus polynomial is reducible");
    return ExtField(p, k, std::move(poly));
}

ExtElement::ExtElement(ExtField f, std::vector<FpElement> c)
    : field_(std::move(f)), coeffs_(std::move(c)) {}

ExtElement ExtElement::zero(const ExtField& f) {
    return {f, std::vector<FpElement>(static_cast<std::size_t>(f.degree()),
                                      FpElement::zero(f.prime()))};
}

ExtElement ExtElement::one(const ExtField& f) {
    auto c = std::vector<FpElement>(static_cast<std::size_t>(f.degree()),
                                    FpElement::zero(f.prime()));
    c[0] = FpElement::one(f.prime());
    return {f, std::move(c)};
}

ExtElement ExtElement::x(const ExtField& f) {
    if (f.degree() < 2) throw BadInput("x requires degree >= 2");
    auto c = std::vector<FpElement>(static_cast<std::size_t>(f.degree()),
                                    FpElement::zero(f.prime()));
    c[1] = FpElement::one(f.prime());
    return {f, std::move(c)};
}

ExtElement ExtElement::from_coeffs(const ExtField& f,
                                   std::vector<std::int64_t> coeffs) {
    if (static_cast<std::int64_t>(coeffs.size()) > f.degree())
        throw BadInput("coefficient list longer than extension degree");
    auto c = std::vector<FpElement>(static_cast<std::size_t>(f.degree()),
                                    FpElement::zero(f.prime()));
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        c[i] = FpElement(coeffs[i], f.prime());
    return {f, std::move(c)};
}

ExtElement ExtElement::from_index(const ExtField& f, std::int64_t t) {
    if (t < 0 || t >= f.size()) throw BadInput("element index out of range");
    auto c = std::vector<FpElement>(static_cast<std::size_t>(f.degree()),
                                    FpElement::zero(f.prime()));
    for (std::size_t i = 0; t != 0; ++i) {
        c[i] = FpElement(t % f.prime().value(), f.prime());
        t /= f.prime().value();
    }
    return {f, std::move(c)};
}

bool ExtElement::is_zero() const noexcept {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

bool ExtElement::value_eq(const ExtElement& a, const ExtElement& b) {
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        if (a.coeffs_[i].value() != b.coeffs_[i].value()) return false;
    return true;
}

void ExtElement::require_same_field(const ExtElement& rhs) const {
    if (!(field_ == rhs.field_))
        throw FieldMismatch("operands belong to different extension fields");
}

ExtElement ExtElement::operator+(const ExtElement& rhs) const {
    require_same_field(rhs);
    auto c = coeffs_;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += rhs.coeffs_[i];
    return {field_, std::move(c)};
}

ExtElement ExtElement::operator-(const ExtElement& rhs) const {
    require_same_field(rhs);
    auto c = coeffs_;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= rhs.coeffs_[i];
    return {field_, std::move(c)};
}

ExtElement ExtElement::operator-() const {
    auto c = coeffs_;
    for (auto& v : c) v = -v;
    return {field_, std::move(c)};
}

ExtElement ExtElement::operator*(const ExtElement& rhs) const {
    require_same_field(rhs);
    const std::int64_t p = field_.prime().value();
    const auto k = static_cast<std::size_t>(field_.degree());
    std::vector<std::int64_t> buf(2 * k - 1, 0);
    for (std::size_t i = 0; i < k; ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < k; ++j)
            buf[i + j] = (buf[i + j] + coeffs_[i].value() * rhs.coeffs_[j].value()) % p;
    }
    const auto& mod = field_.modulus_poly();
    for (std::size_t d = buf.size(); d-- > k;) {
        const std::int64_t c = buf[d];
        if (c == 0) continue;
        buf[d] = 0;
        for (std::size_t i = 0; i < k; ++i) {
            auto& t = buf[d - k + i];
            t = canon(t - c * mod[i], p);
        }
    }
    auto c = std::vector<FpElement>(k, FpElement::zero(field_.prime()));
    for (std::size_t i = 0; i < k; ++i) c[i] = FpElement(buf[i], field_.prime());
    return {field_, std::move(c)};
}

ExtElement ExtElement::inv() const {
    if (is_zero()) throw ZeroInverse("zero has no inverse");
    return pow(field_.size() - 2);
}

ExtElement ExtElement::pow(std::int64_t e) const {
    if (e < 0) return inv().pow(-e);
    ExtElement out = one(field_);
    ExtElement base = *this;
    while (e > 0) {
        if (e & 1) out = out * base;
        base = base * base;
        e >>= 1;
    }
    return out;
}

std::int64_t ext_order(const ExtElement& x) {
    if (x.is_zero()) throw ZeroArgument("zero has no multiplicative order");
    std::int64_t n = x.field().size() - 1;
    const ExtElement one = ExtElement::one(x.field());
    for (std::int64_t f : nt::prime_factors(n)) {
        while (n % f == 0 && x.pow(n / f) == one) n /= f;
    }
    return n;
}

ComplexExt::ComplexExt(ExtField base, ExtField carrier, ExtElement gen, ExtElement j,
                       std::int64_t r, std::int64_t m, std::int64_t q)
    : base_(std::move(base)),
      carrier_(std::move(carrier)),
      gen_(std::move(gen)),
      j_(std::move(j)),
      r_(r),
      m_(m),
      q_(q) {}

ComplexExt ComplexExt::build(PrimeModulus p, std::int64_t r, std::int64_t m) {
    if (r < 1 || m < 1) throw BadInput("r and m must be >= 1");
    const std::int64_t q = checked_pow(p.value(), r);
    ExtField base = ExtField::make(p, r * m);
    ExtField carrier = ExtField::make(p, 2 * r * m);
    const std::int64_t group = carrier.size() - 1;
    const auto factors = nt::prime_factors(group);
    const ExtElement unit = ExtElement::one(carrier);

    ExtElement gen = unit;
    bool found = false;
    for (std::int64_t t = 1; t < carrier.size() && !found; ++t) {
        ExtElement cand = ExtElement::from_index(carrier, t);
        found = true;
        for (std::int64_t f : factors) {
            if (cand.pow(group / f) == unit) {
                found = false;
                break;
            }
        }
        if (found) gen = std::move(cand);
    }
    if (!found) throw std::logic_error("no generator found");  // unreachable

    // The carrier degree 2rm is even, so its group order is divisible by 4
    // and g^((Q-1)/4) squares to the unique element of order 2.
    ExtElement j = gen.pow(group / 4);
    if (!(j * j == -unit)) throw std::logic_error("j^2 != -1");
    return ComplexExt(std::move(base), std::move(carrier), std::move(gen),
                      std::move(j), r, m, q);
}

bool ComplexExt::in_input_alphabet(const ExtElement& x) const {
    return x.pow(q_) == x;
}

bool ComplexExt::is_real(const ExtElement& x) const {
    return x.pow(base_.size()) == x;
}

ExtElement ComplexExt::from_prime_field(FpElement a) const {
    if (a.modulus().value() != carrier_.prime().value())
        throw ModulusMismatch("element and field use different primes");
    return ExtElement::from_coeffs(carrier_, {a.value()});
}

ExtElement ComplexExt::element_of_order(std::int64_t n) const {
    const std::int64_t group = carrier_.size() - 1;
    if (n < 1 || group % n != 0)
        throw InvalidLength("order must divide the carrier group size");
    return gen_.pow(group / n);
}

}  // namespace gdsp
