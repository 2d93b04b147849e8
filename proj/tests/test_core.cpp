#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "windmill/errors.hpp"
#include "windmill/mills.hpp"
#include "windmill/nat.hpp"
#include "windmill/triple.hpp"

using windmill::Nat;
using windmill::Triple;

namespace {

// Independent oracle: scan every x and every y directly, with no parity
// shortcut and no divisor-pair enumeration.
std::vector<Triple> mills_brute(const Nat& n) {
    std::vector<Triple> out;
    for (Nat x = 0; x * x < n; ++x) {
        Nat r = n - x * x;
        if (r % 4 != 0) continue;
        Nat q = r / 4;
        if (q < 1) continue;
        for (Nat y = 1; y <= q; ++y) {
            if (q % y == 0) out.push_back({x, y, q / y});
        }
    }
    return out;
}

std::set<Triple> as_set(std::vector<Triple> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("windmill value") {
    CHECK(windmill::windmill_value({1, 1, 7}) == 29);
    CHECK(windmill::windmill_value({5, 1, 1}) == 29);
    CHECK(windmill::windmill_value({0, 0, 0}) == 0);
    CHECK(windmill::windmill_value({3, 8, 1}) == 41);
}

TEST_CASE("flip examples") {
    CHECK(windmill::flip({1, 1, 7}) == Triple{1, 7, 1});
    CHECK(windmill::flip({5, 1, 1}) == Triple{5, 1, 1});
    CHECK(windmill::flip({3, 1, 5}) == Triple{3, 5, 1});
}

TEST_CASE("zagier examples") {
    CHECK(windmill::zagier({1, 7, 1}) == Triple{3, 1, 5});
    CHECK(windmill::zagier({1, 1, 7}) == Triple{1, 1, 7});
    CHECK(windmill::zagier({5, 1, 1}) == Triple{3, 5, 1});
}

TEST_CASE("zagier_flip examples") {
    CHECK(windmill::zagier_flip({1, 1, 7}) == Triple{3, 1, 5});
    CHECK(windmill::zagier_flip({5, 1, 1}) == Triple{3, 5, 1});
    CHECK(windmill::zagier_flip({1, 7, 1}) == Triple{1, 1, 7});
}

TEST_CASE("mind examples") {
    CHECK(windmill::mind({1, 7, 1}) == 3);
    CHECK(windmill::mind({1, 1, 7}) == 1);
    CHECK(windmill::mind({3, 5, 1}) == 5);
    CHECK(windmill::mind({3, 8, 1}) == 5);
    CHECK(windmill::mind({3, 1, 5}) == 3);
}

TEST_CASE("grid: involutions, value preservation, mind and |y-z| invariance") {
    for (unsigned x = 1; x <= 50; ++x) {
        for (unsigned y = 0; y <= 50; ++y) {
            for (unsigned z = 1; z <= 50; ++z) {
                Triple t{x, y, z};
                Triple zt = windmill::zagier(t);
                Triple ft = windmill::flip(t);
                REQUIRE(windmill::zagier(zt) == t);
                REQUIRE(windmill::flip(ft) == t);
                REQUIRE(windmill::windmill_value(zt) == windmill::windmill_value(t));
                REQUIRE(windmill::windmill_value(ft) == windmill::windmill_value(t));
                REQUIRE(windmill::mind(zt) == windmill::mind(t));
                REQUIRE(abs(Nat(ft.y - ft.z)) == abs(Nat(t.y - t.z)));
                REQUIRE((zt == t) == (t.x == t.y));
            }
        }
    }
}

TEST_CASE("zagier fixed point characterization holds with z = 0") {
    for (unsigned x = 1; x <= 30; ++x) {
        for (unsigned y = 0; y <= 30; ++y) {
            Triple t{x, y, 0};
            REQUIRE((windmill::zagier(t) == t) == (t.x == t.y));
        }
    }
}

TEST_CASE("classify examples and boundaries") {
    using windmill::ZagierCase;
    CHECK(windmill::classify_case({1, 1, 7}) == ZagierCase::Case3);
    CHECK(windmill::classify_case({1, 7, 1}) == ZagierCase::Case1);
    CHECK(windmill::classify_case({5, 1, 1}) == ZagierCase::Case5);
    CHECK(windmill::classify_case({2, 1, 5}) == ZagierCase::Case5);  // x = 2y boundary
    CHECK(windmill::classify_case({1, 3, 2}) == ZagierCase::Case2);  // x + z = y boundary
    CHECK(windmill::classify_case({3, 5, 1}) == ZagierCase::Case1);
    CHECK(windmill::classify_case({3, 4, 2}) == ZagierCase::Case2);
    CHECK(windmill::classify_case({3, 2, 9}) == ZagierCase::Case4);
}

TEST_CASE("zagier pairs the five regions 1-5, 2-4, 3-3 on proper triples") {
    using windmill::ZagierCase;
    auto partner = [](ZagierCase c) {
        switch (c) {
            case ZagierCase::Case1: return ZagierCase::Case5;
            case ZagierCase::Case2: return ZagierCase::Case4;
            case ZagierCase::Case3: return ZagierCase::Case3;
            case ZagierCase::Case4: return ZagierCase::Case2;
            case ZagierCase::Case5: return ZagierCase::Case1;
        }
        return ZagierCase::Case3;
    };
    for (unsigned x = 1; x <= 40; ++x) {
        for (unsigned y = 1; y <= 40; ++y) {
            for (unsigned z = 1; z <= 40; ++z) {
                Triple t{x, y, z};
                REQUIRE(windmill::classify_case(windmill::zagier(t)) ==
                        partner(windmill::classify_case(t)));
            }
        }
    }
}

TEST_CASE("perfect square recognition") {
    CHECK(windmill::is_square(Nat(0)));
    CHECK(windmill::is_square(Nat(1)));
    CHECK(windmill::is_square(Nat(25)));
    CHECK_FALSE(windmill::is_square(Nat(2)));
    CHECK_FALSE(windmill::is_square(Nat(29)));
    CHECK_FALSE(windmill::is_square(Nat("12345678949")));
}

TEST_CASE("triple enumeration: frozen sets") {
    auto m29 = windmill::mills_enumerate(Nat(29));
    CHECK(m29.triples == std::vector<Triple>{{1, 1, 7}, {1, 7, 1}, {3, 1, 5}, {3, 5, 1}, {5, 1, 1}});
    auto m5 = windmill::mills_enumerate(Nat(5));
    CHECK(m5.triples == std::vector<Triple>{{1, 1, 1}});
    auto m21 = windmill::mills_enumerate(Nat(21));
    CHECK(m21.triples == std::vector<Triple>{{1, 1, 5}, {1, 5, 1}, {3, 1, 3}, {3, 3, 1}});
    auto m8 = windmill::mills_enumerate(Nat(8));
    CHECK(m8.triples == std::vector<Triple>{{0, 1, 2}, {0, 2, 1}, {2, 1, 1}});
    CHECK(windmill::mills_enumerate(Nat(3)).triples.empty());
    CHECK(windmill::mills_enumerate(Nat(2)).triples.empty());
}

TEST_CASE("triple enumeration rejects perfect squares") {
    CHECK_THROWS_AS(windmill::mills_enumerate(Nat(25)), windmill::SquareInput);
    CHECK_THROWS_AS(windmill::mills_enumerate(Nat(1)), windmill::SquareInput);
    CHECK_THROWS_AS(windmill::mills_enumerate(Nat(0)), windmill::SquareInput);
    CHECK_THROWS_AS(windmill::mills_enumerate(Nat(1936)), windmill::SquareInput);
}

TEST_CASE("triple enumeration matches the brute-force oracle up to 2000") {
    for (unsigned n = 2; n <= 2000; ++n) {
        Nat nn(n);
        if (windmill::is_square(nn)) continue;
        auto enumerated = windmill::mills_enumerate(nn);
        REQUIRE(as_set(enumerated.triples) == as_set(mills_brute(nn)));
        REQUIRE(std::is_sorted(enumerated.triples.begin(), enumerated.triples.end()));
        for (const Triple& t : enumerated.triples) {
            REQUIRE(windmill::windmill_value(t) == nn);
            if (n % 4 != 0) REQUIRE(windmill::is_proper(t));
            REQUIRE(t.y >= 1);
            REQUIRE(t.z >= 1);
        }
    }
}
