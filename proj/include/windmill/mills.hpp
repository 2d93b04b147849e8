#pragma once

#include <vector>

#include "windmill/nat.hpp"
#include "windmill/triple.hpp"

namespace windmill {

/// The complete, duplicate-free set of triples (x, y, z) with
/// n = x^2 + 4yz, in ascending (x, y) order.
struct MillsEnumeration {
    Nat n;
    std::vector<Triple> triples;
};

/// Enumerate every triple representing n. Scans x with x^2 = n (mod 4)
/// up to isqrt(n); for each x with q = (n - x^2) / 4 >= 1, emits
/// (x, d, q/d) for every divisor d of q in ascending order.
///
/// Throws SquareInput when n is a perfect square (the set would be
/// infinite: (isqrt(n), y, 0) represents n for every y).
MillsEnumeration mills_enumerate(const Nat& n);

}  // namespace windmill
