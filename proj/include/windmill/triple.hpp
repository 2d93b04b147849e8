#pragma once

#include <ostream>
#include <string>
#include <tuple>

#include "windmill/nat.hpp"

namespace windmill {

/// A windmill triple (x, y, z) representing x^2 + 4yz: an x-by-x central
/// square with four congruent y-by-z rectangular arms. No intrinsic
/// invariants; a triple is "proper" when all components are nonzero.
struct Triple {
    Nat x;
    Nat y;
    Nat z;

    bool operator==(const Triple& other) const = default;

    friend bool operator<(const Triple& a, const Triple& b) {
        if (a.x != b.x) return a.x < b.x;
        if (a.y != b.y) return a.y < b.y;
        return a.z < b.z;
    }
};

inline bool is_proper(const Triple& t) {
    return t.x != 0 && t.y != 0 && t.z != 0;
}

/// The quantity the triple represents: x^2 + 4yz.
Nat windmill_value(const Triple& t);

/// Swap the arm dimensions: (x, y, z) -> (x, z, y). A self-inverse map;
/// its fixed points (x, y, y) witness n = x^2 + (2y)^2.
Triple flip(const Triple& t);

/// The three-branch piecewise-linear map on triples:
///   x + z < y : (x + 2z, z,         y - z - x)
///   x < 2y    : (2y - x, y,         x + z - y)
///   otherwise : (x - 2y, x + z - y, y)
/// Total on all triples; self-inverse when x != 0 and z != 0. Every
/// branch condition guarantees its subtractions stay non-negative.
Triple zagier(const Triple& t);

/// zagier(flip(t)): one step of the decomposition iteration.
Triple zagier_flip(const Triple& t);

/// Side of the maximal central square fitting the windmill's silhouette:
///   x + z < y : x + 2z
///   x < y     : 2y - x
///   otherwise : x
/// Invariant under zagier.
Nat mind(const Triple& t);

/// Which of the five regions of the (x, y, z) parameter space a triple
/// falls in. zagier swaps Case1 with Case5 and Case2 with Case4, and maps
/// Case3 (x = y) to itself, on proper triples.
enum class ZagierCase { Case1, Case2, Case3, Case4, Case5 };

/// Decision order: Case1 if x < y and x + z < y; Case2 if x < y (and
/// x + z >= y); Case3 if x = y; Case4 if y < x and x < 2y; Case5
/// otherwise. Boundaries: x + z = y is Case2, x = 2y is Case5.
ZagierCase classify_case(const Triple& t);

std::string to_string(const Triple& t);
std::ostream& operator<<(std::ostream& os, const Triple& t);

const char* to_string(ZagierCase c);

}  // namespace windmill
