#include "windmill/mills.hpp"

#include <vector>

#include "windmill/errors.hpp"

namespace windmill {

namespace {

/// Divisors of q in ascending order, by trial division up to isqrt(q).
std::vector<Nat> divisors_ascending(const Nat& q) {
    std::vector<Nat> small;
    std::vector<Nat> large;
    for (Nat d = 1; d * d <= q; ++d) {
        if (q % d == 0) {
            small.push_back(d);
            Nat other = q / d;
            if (other != d) large.push_back(other);
        }
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it) {
        small.push_back(*it);
    }
    return small;
}

}  // namespace

MillsEnumeration mills_enumerate(const Nat& n) {
    if (is_square(n)) {
        throw SquareInput("mills_enumerate: " + to_string(n) +
                          " is a perfect square, so its triple set is infinite");
    }
    MillsEnumeration result{n, {}};
    // x^2 = n (mod 4) forces x = n (mod 2); no x qualifies when
    // n = 2 or 3 (mod 4), leaving the set empty.
    Nat residue = n % 4;
    Nat x;
    if (residue == 0) {
        x = 0;
    } else if (residue == 1) {
        x = 1;
    } else {
        return result;
    }
    for (; x * x < n; x += 2) {
        Nat q = (n - x * x) / 4;
        if (q < 1) continue;
        for (const Nat& d : divisors_ascending(q)) {
            result.triples.push_back({x, d, q / d});
        }
    }
    return result;
}

}  // namespace windmill
