// Copyright (C) 2026 the galois-dsp authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

namespace gdsp::nt {

/// (a * b) mod m with a 128-bit intermediate, valid for any m < 2^63.
inline std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) {
    return static_cast<std::int64_t>(
        static_cast<unsigned __int128>(a) * static_cast<unsigned __int128>(b) %
        static_cast<unsigned __int128>(m));
}

/// a^e mod m by square-and-multiply, e >= 0.
std::int64_t pow_mod(std::int64_t a, std::int64_t e, std::int64_t m);

/// Deterministic trial-division primality test.
bool is_prime(std::int64_t n);

/// Distinct prime factors in increasing order.
std::vector<std::int64_t> prime_factors(std::int64_t n);

/// All divisors of n in increasing order.
std::vector<std::int64_t> divisors(std::int64_t n);

}  // namespace gdsp::nt
