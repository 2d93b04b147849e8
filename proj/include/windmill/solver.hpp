#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "windmill/nat.hpp"
#include "windmill/triple.hpp"

namespace windmill {

/// A two-squares decomposition n = u^2 + v^2 with u odd and v even.
struct Decomposition {
    Nat u;
    Nat v;

    bool operator==(const Decomposition&) const = default;
};

struct Decomposed {
    Decomposition value;
    Nat steps;
};

/// The iteration surfaced a nontrivial divisor instead of a
/// decomposition: 1 < factor < n and factor divides n.
struct CompositeFactor {
    Nat factor;
    Nat steps;
};

enum class InapplicableReason { NotOneMod4, PerfectSquare };

struct Inapplicable {
    InapplicableReason reason;
};

using SolveOutcome = std::variant<Decomposed, CompositeFactor, Inapplicable>;

enum class ExitKind { FlipFixed, ZagierFixed };

/// Result of running the core iteration to its first fixed point.
struct OrbitExit {
    Triple triple;
    Nat steps;
    ExitKind kind;
};

/// Iterate zagier∘flip from (1, 1, n div 4) until the first iterate with
/// y = z (flip-fixed, tested from step 0) or x = y (zagier-fixed, tested
/// from step 1; the start itself is always zagier-fixed). Iteration is
/// capped at n^3, a bound on the triple-set size.
///
/// Throws InapplicableInput unless n = 1 (mod 4) and n is not a perfect
/// square; CapExhausted if no fixed point appears within the cap (which
/// cannot happen for valid input).
OrbitExit orbit_exit(const Nat& n);

/// The first iterate of zagier∘flip from (1, 1, n div 4) with y = z.
/// Preconditions as orbit_exit; additionally throws NoFlipFixedPoint if
/// the iteration reaches a second zagier fixed point first (possible for
/// composite n, never for prime n).
Triple two_sq(const Nat& n);

/// The decomposition (u, v) = (x, y + z) read off the flip-fixed triple
/// found by two_sq; n = u^2 + v^2 with u odd, v even.
std::pair<Nat, Nat> two_squares(const Nat& n);

/// Full validation pipeline. Rejects n with n mod 4 != 1 or perfect
/// squares as Inapplicable; otherwise runs the iteration and reports
/// either the decomposition (with step count) or an opportunistic
/// composite factor x from a second zagier fixed point (x, x, z), which
/// divides n = x(x + 4z). Accepts composite n = 1 (mod 4); the
/// decomposition guarantee only holds for primes.
SolveOutcome solve(const Nat& n);

/// Subtract successive odd squares u^2 < n and test whether the
/// remainder is a square of an even number; returns the pair (u, v) for
/// the smallest such odd u, or nothing when no representation exists.
std::optional<std::pair<Nat, Nat>> brute_force_decompose(const Nat& n);

/// Every pair (a, b) with a <= b and n = a^2 + b^2, ascending in a.
std::vector<std::pair<Nat, Nat>> all_representations(const Nat& n);

/// Exact for n < 2^64 (deterministic strong-pseudoprime test over a
/// fixed witness set); probabilistic for larger n (strong-pseudoprime
/// plus Lucas rounds, no counterexample known).
bool is_prime(const Nat& n);

/// True iff u is odd, v is even, and n = u^2 + v^2.
bool verify_decomposition(const Nat& n, const Nat& u, const Nat& v);

}  // namespace windmill
