// Copyright (C) 2026 the galois-dsp authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace gdsp {

/// Base class for all domain errors. Each error carries a stable machine
/// readable code (used verbatim by the CLI's error JSON) next to the
/// human readable message.
class Error : public std::runtime_error {
  public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

  private:
    std::string code_;
};

struct ModulusMismatch : Error {
    explicit ModulusMismatch(const std::string& msg)
        : Error("modulus-mismatch", msg) {}
};

struct FieldMismatch : Error {
    explicit FieldMismatch(const std::string& msg)
        : Error("field-mismatch", msg) {}
};

struct ZeroInverse : Error {
    explicit ZeroInverse(const std::string& msg = "inverse of zero")
        : Error("zero-inverse", msg) {}
};

struct ZeroArgument : Error {
    explicit ZeroArgument(const std::string& msg = "argument must be nonzero")
        : Error("zero-argument", msg) {}
};

struct NotAResidue : Error {
    explicit NotAResidue(const std::string& msg)
        : Error("not-a-residue", msg) {}
};

struct InvalidModulus : Error {
    explicit InvalidModulus(const std::string& msg)
        : Error("invalid-modulus", msg) {}
};

struct UnsupportedModulus : Error {
    explicit UnsupportedModulus(const std::string& msg)
        : Error("unsupported-modulus", msg) {}
};

struct InvalidLength : Error {
    explicit InvalidLength(const std::string& msg)
        : Error("invalid-length", msg) {}
};

struct LengthMismatch : Error {
    explicit LengthMismatch(const std::string& msg)
        : Error("length-mismatch", msg) {}
};

struct OrderMismatch : Error {
    explicit OrderMismatch(const std::string& msg)
        : Error("order-mismatch", msg) {}
};

struct UnsupportedSequence : Error {
    explicit UnsupportedSequence(const std::string& msg)
        : Error("unsupported-sequence", msg) {}
};

struct DivergentSpectrum : Error {
    explicit DivergentSpectrum(const std::string& msg)
        : Error("divergent-spectrum", msg) {}
};

struct NonRealResult : Error {
    explicit NonRealResult(const std::string& msg)
        : Error("non-real-result", msg) {}
};

struct PlanTooShort : Error {
    explicit PlanTooShort(const std::string& msg)
        : Error("plan-too-short", msg) {}
};

struct BadInput : Error {
    explicit BadInput(const std::string& msg)
        : Error("bad-input", msg) {}
};

}  // namespace gdsp
