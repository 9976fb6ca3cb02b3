// zmod.hpp -- integer utilities and residue arithmetic mod p^s.
//
// Residues are stored canonically in [0, modulus). Products are taken
// through 128-bit intermediates so that moduli up to 2^31 never overflow.

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "grqft/errors.hpp"

namespace grqft {

/// A residue tagged with its modulus. Used at API boundaries (trace
/// values, matrix entries); hot loops work on raw uint64_t instead.
struct Zmod {
    std::uint64_t value = 0;
    std::uint64_t modulus = 0;

    friend bool operator==(const Zmod&, const Zmod&) = default;
};

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (std::uint64_t d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

/// base^exp, or nullopt on uint64 overflow.
inline std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t r = 1;
    while (exp > 0) {
        if (exp & 1) {
            __uint128_t wide = static_cast<__uint128_t>(r) * base;
            if (wide > UINT64_MAX) return std::nullopt;
            r = static_cast<std::uint64_t>(wide);
        }
        exp >>= 1;
        if (exp > 0) {
            __uint128_t wide = static_cast<__uint128_t>(base) * base;
            if (wide > UINT64_MAX) return std::nullopt;
            base = static_cast<std::uint64_t>(wide);
        }
    }
    return r;
}

inline std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t mod) {
    std::uint64_t r = a + b; // a, b < mod <= 2^31: never overflows
    return r >= mod ? r - mod : r;
}

inline std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t mod) {
    return a >= b ? a - b : a + mod - b;
}

inline std::uint64_t negmod(std::uint64_t a, std::uint64_t mod) {
    return a == 0 ? 0 : mod - a;
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t mod) {
    return static_cast<std::uint64_t>(static_cast<__uint128_t>(a) * b % mod);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    if (mod == 1) return 0;
    std::uint64_t r = 1;
    base %= mod;
    while (exp > 0) {
        if (exp & 1) r = mulmod(r, base, mod);
        base = mulmod(base, base, mod);
        exp >>= 1;
    }
    return r;
}

/// Multiplicative inverse of a mod m via extended Euclid, or nullopt
/// when gcd(a, m) != 1.
inline std::optional<std::uint64_t> inv_mod(std::uint64_t a, std::uint64_t m) {
    a %= m;
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(m), new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) return std::nullopt;
    if (t < 0) t += static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(t);
}

/// Largest j with p^j | x, for x != 0.
inline std::uint64_t p_valuation(std::uint64_t x, std::uint64_t p) {
    std::uint64_t j = 0;
    while (x % p == 0) {
        x /= p;
        ++j;
    }
    return j;
}

/// Prime factorization by trial division, ascending primes.
/// Each entry is {prime, exponent}.
inline std::vector<std::pair<std::uint64_t, std::uint64_t>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    for (std::uint64_t d = 2; d * d <= n; d == 2 ? d = 3 : d += 2) {
        if (n % d == 0) {
            std::uint64_t e = 0;
            while (n % d == 0) {
                n /= d;
                ++e;
            }
            out.emplace_back(d, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

/// All divisors of n, ascending.
inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d != n / d) out.push_back(n / d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace grqft
