// Copyright (C) 2026 the galois-dsp authors
// SPDX-License-Identifier: Apache-2.0

#include "gdsp/ffft.hpp"

#include <numeric>
#include <stdexcept>

#include "gdsp/number_theory.hpp"

namespace gdsp {

namespace {

void require_plan_vector(const FfftVector& v, const FfftPlan& plan) {
    if (static_cast<std::int64_t>(v.size()) != plan.length())
        throw LengthMismatch("vector length differs from plan length");
    for (const auto& e : v)
        if (!(e.field() == plan.field().carrier()))
            throw FieldMismatch("vector component outside the plan carrier");
}

}  // namespace

FfftPlan::FfftPlan(ComplexExt field, ExtElement zeta, std::int64_t n)
    : field_(std::move(field)), zeta_(std::move(zeta)), n_(n) {
    if (n_ % field_.prime().value() == 0)
        throw std::logic_error("transform length divisible by p");  // unreachable
    powers_.reserve(static_cast<std::size_t>(n_));
    ExtElement pw = ExtElement::one(field_.carrier());
    for (std::int64_t k = 0; k < n_; ++k) {
        powers_.push_back(pw);
        pw = pw * zeta_;
    }
}

FfftPlan FfftPlan::make(PrimeModulus p, std::int64_t r, std::int64_t m,
                        std::int64_t n) {
    if (n < 1) throw InvalidLength("transform length must be >= 1");
    ComplexExt field = ComplexExt::build(p, r, m);
    ExtElement zeta = field.element_of_order(n);
    return FfftPlan(std::move(field), std::move(zeta), n);
}

FfftPlan FfftPlan::with_kernel(ComplexExt field, ExtElement zeta) {
    if (!(zeta.field() == field.carrier()))
        throw FieldMismatch("kernel outside the carrier field");
    const std::int64_t n = ext_order(zeta);
    return FfftPlan(std::move(field), std::move(zeta), n);
}

const ExtElement& FfftPlan::zeta_pow(std::int64_t k) const {
    return powers_[static_cast<std::size_t>(((k % n_) + n_) % n_)];
}

FfftVector ffft(const FfftVector& f, const FfftPlan& plan,
                bool relaxed_alphabet) {
    require_plan_vector(f, plan);
    if (!relaxed_alphabet) {
        for (const auto& e : f)
            if (!plan.field().in_input_alphabet(e))
                throw BadInput("input component outside GF(q)");
    }
    const std::int64_t n = plan.length();
    FfftVector out;
    out.reserve(f.size());
    for (std::int64_t k = 0; k < n; ++k) {
        ExtElement acc = ExtElement::zero(plan.field().carrier());
        for (std::int64_t i = 0; i < n; ++i)
            acc += f[static_cast<std::size_t>(i)] * plan.zeta_pow(i * k);
        out.push_back(std::move(acc));
    }
    return out;
}

FfftVector iffft(const FfftVector& F, const FfftPlan& plan) {
    require_plan_vector(F, plan);
    const std::int64_t n = plan.length();
    const PrimeModulus p = plan.field().prime();
    const ExtElement scale =
        plan.field().from_prime_field(FpElement(n % p.value(), p).inv());
    FfftVector out;
    out.reserve(F.size());
    for (std::int64_t i = 0; i < n; ++i) {
        ExtElement acc = ExtElement::zero(plan.field().carrier());
        for (std::int64_t k = 0; k < n; ++k)
            acc += F[static_cast<std::size_t>(k)] * plan.zeta_pow(-i * k);
        out.push_back(acc * scale);
    }
    return out;
}

FfftVector cyclic_convolution(const FfftVector& f, const FfftVector& g,
                              const FfftPlan& plan) {
    require_plan_vector(f, plan);
    require_plan_vector(g, plan);
    const std::int64_t n = plan.length();
    FfftVector out;
    out.reserve(f.size());
    for (std::int64_t k = 0; k < n; ++k) {
        ExtElement acc = ExtElement::zero(plan.field().carrier());
        for (std::int64_t i = 0; i < n; ++i)
            acc += f[static_cast<std::size_t>(i)] *
                   g[static_cast<std::size_t>(((k - i) % n + n) % n)];
        out.push_back(std::move(acc));
    }
    return out;
}

FfftVector pointwise_mul(const FfftVector& F, const FfftVector& G) {
    if (F.size() != G.size())
        throw LengthMismatch("pointwise product of different lengths");
    FfftVector out;
    out.reserve(F.size());
    for (std::size_t i = 0; i < F.size(); ++i) out.push_back(F[i] * G[i]);
    return out;
}

FfftVector pollard_special_case(const FfftVector& f, const ExtElement& a,
                                const ComplexExt& field) {
    if (!(a.field() == field.carrier()))
        throw FieldMismatch("kernel outside the carrier field");
    if (!field.is_real(a))
        throw BadInput("real-kernel transform needs a kernel in GF(q^m)");
    const auto n = static_cast<std::int64_t>(f.size());
    if (n == 0 || ext_order(a) != n)
        throw OrderMismatch("kernel order differs from vector length");
    for (const auto& e : f) {
        if (!(e.field() == field.carrier()))
            throw FieldMismatch("vector component outside the carrier");
        if (!field.in_input_alphabet(e))
            throw BadInput("input component outside GF(q)");
    }
    FfftVector out;
    out.reserve(f.size());
    for (std::int64_t k = 0; k < n; ++k) {
        ExtElement acc = ExtElement::zero(field.carrier());
        for (std::int64_t i = 0; i < n; ++i)
            acc += f[static_cast<std::size_t>(i)] * a.pow((i * k) % n);
        out.push_back(std::move(acc));
    }
    return out;
}

const char* to_string(LengthClass c) {
    switch (c) {
        case LengthClass::Classic:
            return "classic";
        case LengthClass::New:
            return "new";
        case LengthClass::Mixed:
            return "mixed";
    }
    return "unknown";
}

std::vector<LengthEntry> length_catalogue(PrimeModulus p, std::int64_t r,
                                          std::int64_t m) {
    if (r < 1 || m < 1) throw BadInput("r and m must be >= 1");
    std::int64_t qm = 1;
    for (std::int64_t i = 0; i < r * m; ++i) {
        if (qm > (std::int64_t{1} << 31))
            throw BadInput("field size does not fit in 64 bits");
        qm *= p.value();
    }
    std::vector<LengthEntry> out;
    for (std::int64_t d : nt::divisors(qm * qm - 1)) {
        LengthClass cls = LengthClass::Mixed;
        if ((qm - 1) % d == 0)
            cls = LengthClass::Classic;
        else if ((qm + 1) % d == 0)
            cls = LengthClass::New;
        out.push_back({d, cls});
    }
    return out;
}

}  // namespace gdsp
