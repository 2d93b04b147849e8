#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace windmill {

/// Arbitrary-precision natural number. All library-level quantities
/// (inputs, coordinates, step counts, caps) are Nats; operations in this
/// project never produce negative values because every subtraction is
/// guarded by a comparison.
using Nat = mpz_class;

inline bool is_even(const Nat& n) { return mpz_even_p(n.get_mpz_t()) != 0; }
inline bool is_odd(const Nat& n) { return mpz_odd_p(n.get_mpz_t()) != 0; }

/// Floor of the square root.
inline Nat isqrt(const Nat& n) {
    Nat r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool is_square(const Nat& n) {
    return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline bool fits_u64(const Nat& n) {
    return n.fits_ulong_p();  // unsigned long is 64-bit on this platform
}

inline std::uint64_t to_u64(const Nat& n) { return n.get_ui(); }

inline std::string to_string(const Nat& n) { return n.get_str(10); }

/// Strict decimal parser: digits only. Rejects empty strings, signs
/// (including leading '+'), underscores, whitespace, and any other
/// non-digit character.
inline std::optional<Nat> parse_nat(std::string_view text) {
    if (text.empty()) return std::nullopt;
    for (char c : text) {
        if (c < '0' || c > '9') return std::nullopt;
    }
    return Nat(std::string(text), 10);
}

}  // namespace windmill
