#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "windmill/errors.hpp"
#include "windmill/nat.hpp"

namespace windmill {

/// Ordered, duplicate-free collection of elements. Callers maintain the
/// no-duplicates invariant; element equality is structural.
template <typename T>
using FiniteDomain = std::vector<T>;

template <typename T>
bool domain_contains(const FiniteDomain<T>& domain, const T& value) {
    return std::find(domain.begin(), domain.end(), value) != domain.end();
}

/// f maps every element of the domain back into the domain and f(f(x)) = x.
template <typename T, typename F>
bool is_involution(F&& f, const FiniteDomain<T>& domain) {
    for (const T& x : domain) {
        T fx = f(x);
        if (!domain_contains(domain, fx)) return false;
        if (!(f(fx) == x)) return false;
    }
    return true;
}

/// Elements of the domain with f(x) = x, in domain order.
template <typename T, typename F>
FiniteDomain<T> fixes(F&& f, const FiniteDomain<T>& domain) {
    FiniteDomain<T> out;
    for (const T& x : domain) {
        if (f(x) == x) out.push_back(x);
    }
    return out;
}

/// Elements of the domain moved by f, in domain order. Even cardinality
/// whenever f is an involution (moved elements pair with their images).
template <typename T, typename F>
FiniteDomain<T> pairs(F&& f, const FiniteDomain<T>& domain) {
    FiniteDomain<T> out;
    for (const T& x : domain) {
        if (!(f(x) == x)) out.push_back(x);
    }
    return out;
}

/// phi applied k times; k = 0 returns x unchanged.
template <typename T, typename Phi>
T iterate(Phi&& phi, T x, const Nat& k) {
    for (Nat i = 0; i < k; ++i) x = phi(x);
    return x;
}

/// Least p with 0 < p <= cap and phi^p(start) = start. The cap must bound
/// the orbit length (e.g. the domain size); exhausting it means phi does
/// not cycle back, so the input was not a permutation orbit.
template <typename T, typename Phi>
Nat period(Phi&& phi, const T& start, const Nat& cap) {
    T x = start;
    for (Nat p = 1; p <= cap; ++p) {
        x = phi(x);
        if (x == start) return p;
    }
    throw CapExhausted("period: no wrap-around within " + to_string(cap) + " steps");
}

/// The full orbit of start under phi: iterates[i] = phi^i(start), one
/// entry per index in [0, period).
template <typename T>
struct OrbitTrace {
    std::vector<T> iterates;
    Nat period;

    const T& start() const { return iterates.front(); }
};

template <typename T, typename Phi>
OrbitTrace<T> orbit_trace(Phi&& phi, const T& start, const Nat& cap) {
    OrbitTrace<T> trace{{start}, 0};
    T x = start;
    for (Nat p = 1; p <= cap; ++p) {
        x = phi(x);
        if (x == start) {
            trace.period = p;
            return trace;
        }
        trace.iterates.push_back(x);
    }
    throw CapExhausted("orbit_trace: no wrap-around within " + to_string(cap) + " steps");
}

enum class FixedKind { FFixed, GFixed };

/// Where the orbit of an f-fixed start lands halfway around: after
/// p div 2 steps of f∘g the iterate is f-fixed when p is even (and then
/// differs from the start) and g-fixed when p is odd (equal to the start
/// exactly when p = 1).
template <typename T>
struct HalfwayReport {
    Nat period;
    T halfway;
    FixedKind kind;
    bool distinct_from_start;
};

template <typename T, typename F, typename G>
HalfwayReport<T> halfway_fixed_point(F&& f, G&& g, const FiniteDomain<T>& domain,
                                     const T& start) {
    if (!is_involution(f, domain) || !is_involution(g, domain)) {
        throw NotInvolution("halfway_fixed_point: f and g must both be involutions on the domain");
    }
    if (!domain_contains(domain, start) || !(f(start) == start)) {
        throw NotFFixed("halfway_fixed_point: start must be an f-fixed element of the domain");
    }
    auto phi = [&](const T& t) { return f(g(t)); };
    Nat p = period(phi, start, Nat(domain.size()));
    T halfway = iterate(phi, start, p / 2);
    bool distinct = !(halfway == start);
    FixedKind kind = is_even(p) ? FixedKind::FFixed : FixedKind::GFixed;
    return {p, std::move(halfway), kind, distinct};
}

/// First iterate body^k(x), k <= cap, failing the guard. The guard is
/// tested before each application, so a start that already fails the
/// guard is returned unchanged.
template <typename T, typename Guard, typename Body>
T while_until(Guard&& guard, Body&& body, T x, const Nat& cap) {
    for (Nat k = 0; k <= cap; ++k) {
        if (!guard(x)) return x;
        if (k < cap) x = body(x);
    }
    throw CapExhausted("while_until: guard held for every iterate within " + to_string(cap) +
                       " steps");
}

/// Involution on {0..size-1} given by a lookup table.
struct TableMapping {
    std::vector<std::uint64_t> table;

    std::uint64_t operator()(std::uint64_t v) const { return table.at(v); }
};

struct RandomInvolution {
    FiniteDomain<std::uint64_t> domain;
    TableMapping mapping;
};

/// Deterministic-from-seed involution on {0..size-1} with exactly
/// fixed_count fixed points: a seeded shuffle selects the fixed subset
/// and pairs the remaining elements as a perfect matching. Throws
/// ParityError unless size - fixed_count is even and non-negative.
RandomInvolution random_involution(std::uint64_t size, std::uint64_t fixed_count,
                                   std::uint64_t seed);

}  // namespace windmill
