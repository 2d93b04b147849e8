#include "windmill/solver.hpp"

#include <array>
#include <cstdint>

#include "windmill/errors.hpp"

namespace windmill {

namespace {

void require_applicable(const Nat& n) {
    if (n % 4 != 1) {
        throw InapplicableInput("input " + to_string(n) + " is not 1 (mod 4)");
    }
    if (is_square(n)) {
        throw InapplicableInput("input " + to_string(n) + " is a perfect square");
    }
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

// Deterministic for all 64-bit inputs with this witness set.
bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    unsigned r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned i = 1; i < r; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

}  // namespace

OrbitExit orbit_exit(const Nat& n) {
    require_applicable(n);
    Triple t{1, 1, n / 4};
    if (t.y == t.z) return {t, 0, ExitKind::FlipFixed};
    Nat cap = n * n * n;
    for (Nat steps = 1; steps <= cap; ++steps) {
        t = zagier_flip(t);
        if (t.y == t.z) return {std::move(t), steps, ExitKind::FlipFixed};
        if (t.x == t.y) return {std::move(t), steps, ExitKind::ZagierFixed};
    }
    throw CapExhausted("orbit_exit: no fixed point within " + to_string(cap) + " iterations of " +
                       to_string(n));
}

Triple two_sq(const Nat& n) {
    OrbitExit exit = orbit_exit(n);
    if (exit.kind != ExitKind::FlipFixed) {
        throw NoFlipFixedPoint("two_sq: orbit of " + to_string(n) +
                               " reached a second zagier fixed point (factor " +
                               to_string(exit.triple.x) + ") before any flip fixed point");
    }
    return exit.triple;
}

std::pair<Nat, Nat> two_squares(const Nat& n) {
    Triple t = two_sq(n);
    return {t.x, t.y + t.z};
}

SolveOutcome solve(const Nat& n) {
    if (n % 4 != 1) return Inapplicable{InapplicableReason::NotOneMod4};
    if (is_square(n)) return Inapplicable{InapplicableReason::PerfectSquare};
    OrbitExit exit = orbit_exit(n);
    if (exit.kind == ExitKind::FlipFixed) {
        return Decomposed{{exit.triple.x, 2 * exit.triple.y}, exit.steps};
    }
    return CompositeFactor{exit.triple.x, exit.steps};
}

std::optional<std::pair<Nat, Nat>> brute_force_decompose(const Nat& n) {
    for (Nat u = 1; u * u < n; u += 2) {
        Nat r = n - u * u;
        if (is_square(r)) {
            Nat v = isqrt(r);
            if (is_even(v)) return std::make_pair(std::move(u), std::move(v));
        }
    }
    return std::nullopt;
}

std::vector<std::pair<Nat, Nat>> all_representations(const Nat& n) {
    std::vector<std::pair<Nat, Nat>> out;
    for (Nat a = 0; 2 * a * a <= n; ++a) {
        Nat r = n - a * a;
        if (is_square(r)) out.emplace_back(a, isqrt(r));
    }
    return out;
}

bool is_prime(const Nat& n) {
    if (fits_u64(n)) return is_prime_u64(to_u64(n));
    return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

bool verify_decomposition(const Nat& n, const Nat& u, const Nat& v) {
    return is_odd(u) && is_even(v) && u * u + v * v == n;
}

}  // namespace windmill
