#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <utility>
#include <variant>
#include <vector>

#include "windmill/errors.hpp"
#include "windmill/involution.hpp"
#include "windmill/mills.hpp"
#include "windmill/solver.hpp"

using windmill::Nat;
using windmill::Triple;

namespace {

windmill::Decomposed expect_decomposed(const Nat& n) {
    auto out = windmill::solve(n);
    REQUIRE(std::holds_alternative<windmill::Decomposed>(out));
    return std::get<windmill::Decomposed>(out);
}

windmill::CompositeFactor expect_factor(const Nat& n) {
    auto out = windmill::solve(n);
    REQUIRE(std::holds_alternative<windmill::CompositeFactor>(out));
    return std::get<windmill::CompositeFactor>(out);
}

windmill::InapplicableReason expect_inapplicable(const Nat& n) {
    auto out = windmill::solve(n);
    REQUIRE(std::holds_alternative<windmill::Inapplicable>(out));
    return std::get<windmill::Inapplicable>(out).reason;
}

}  // namespace

TEST_CASE("orbit exits") {
    auto e29 = windmill::orbit_exit(Nat(29));
    CHECK(e29.triple == Triple{5, 1, 1});
    CHECK(e29.steps == 2);
    CHECK(e29.kind == windmill::ExitKind::FlipFixed);

    auto e5 = windmill::orbit_exit(Nat(5));
    CHECK(e5.triple == Triple{1, 1, 1});
    CHECK(e5.steps == 0);
    CHECK(e5.kind == windmill::ExitKind::FlipFixed);

    auto e21 = windmill::orbit_exit(Nat(21));
    CHECK(e21.triple == Triple{3, 3, 1});
    CHECK(e21.steps == 2);
    CHECK(e21.kind == windmill::ExitKind::ZagierFixed);

    CHECK_THROWS_AS(windmill::orbit_exit(Nat(7)), windmill::InapplicableInput);
    CHECK_THROWS_AS(windmill::orbit_exit(Nat(25)), windmill::InapplicableInput);
}

TEST_CASE("two_sq and two_squares") {
    CHECK(windmill::two_sq(Nat(29)) == Triple{5, 1, 1});
    CHECK(windmill::two_squares(Nat(29)) == std::pair<Nat, Nat>{5, 2});
    CHECK(windmill::two_squares(Nat(5)) == std::pair<Nat, Nat>{1, 2});
    CHECK(windmill::two_squares(Nat(97)) == std::pair<Nat, Nat>{9, 4});
    CHECK_THROWS_AS(windmill::two_sq(Nat(21)), windmill::NoFlipFixedPoint);
    CHECK_THROWS_AS(windmill::two_squares(Nat(33)), windmill::NoFlipFixedPoint);
}

TEST_CASE("solve: frozen outcomes") {
    auto d29 = expect_decomposed(Nat(29));
    CHECK(d29.value == windmill::Decomposition{5, 2});
    CHECK(d29.steps == 2);

    auto d5 = expect_decomposed(Nat(5));
    CHECK(d5.value == windmill::Decomposition{1, 2});
    CHECK(d5.steps == 0);

    auto d65 = expect_decomposed(Nat(65));
    CHECK(d65.value == windmill::Decomposition{1, 8});
    CHECK(d65.steps == 4);

    auto d97 = expect_decomposed(Nat(97));
    CHECK(d97.value == windmill::Decomposition{9, 4});
    CHECK(d97.steps == 13);

    auto c21 = expect_factor(Nat(21));
    CHECK(c21.factor == 3);
    CHECK(c21.steps == 2);

    auto c33 = expect_factor(Nat(33));
    CHECK(c33.factor == 3);
    CHECK(c33.steps == 5);

    auto c45 = expect_factor(Nat(45));
    CHECK(c45.factor == 5);
    CHECK(c45.steps == 3);

    CHECK(expect_inapplicable(Nat(7)) == windmill::InapplicableReason::NotOneMod4);
    CHECK(expect_inapplicable(Nat(4)) == windmill::InapplicableReason::NotOneMod4);
    CHECK(expect_inapplicable(Nat(9)) == windmill::InapplicableReason::PerfectSquare);
    CHECK(expect_inapplicable(Nat(25)) == windmill::InapplicableReason::PerfectSquare);
    CHECK(expect_inapplicable(Nat(0)) == windmill::InapplicableReason::NotOneMod4);
    CHECK(expect_inapplicable(Nat(1)) == windmill::InapplicableReason::PerfectSquare);
}

TEST_CASE("solve: large primes") {
    auto a = expect_decomposed(Nat("1999999913"));
    CHECK(a.value == windmill::Decomposition{1093, 44708});
    CHECK(a.steps == 193635);

    auto b = expect_decomposed(Nat("12345678949"));
    CHECK(b.value == windmill::Decomposition{110415, 12418});
    CHECK(b.steps == 494006);
}

TEST_CASE("small prime table") {
    const std::vector<std::pair<unsigned, std::pair<unsigned, unsigned>>> table = {
        {5, {1, 2}},  {13, {3, 2}}, {17, {1, 4}}, {29, {5, 2}},
        {37, {1, 6}}, {41, {5, 4}}, {53, {7, 2}}, {61, {5, 6}},
    };
    for (const auto& [p, uv] : table) {
        auto d = expect_decomposed(Nat(p));
        CHECK(d.value.u == uv.first);
        CHECK(d.value.v == uv.second);
    }
}

TEST_CASE("brute force decomposition") {
    CHECK(windmill::brute_force_decompose(Nat(29)) == std::pair<Nat, Nat>{5, 2});
    CHECK(windmill::brute_force_decompose(Nat(13)) == std::pair<Nat, Nat>{3, 2});
    CHECK(windmill::brute_force_decompose(Nat(5)) == std::pair<Nat, Nat>{1, 2});
    CHECK_FALSE(windmill::brute_force_decompose(Nat(21)).has_value());
    CHECK_FALSE(windmill::brute_force_decompose(Nat(2)).has_value());
    CHECK_FALSE(windmill::brute_force_decompose(Nat(3)).has_value());
}

TEST_CASE("all representations as ordered pairs a <= b") {
    using P = std::pair<Nat, Nat>;
    CHECK(windmill::all_representations(Nat(25)) == std::vector<P>{{0, 5}, {3, 4}});
    CHECK(windmill::all_representations(Nat(97)) == std::vector<P>{{4, 9}});
    CHECK(windmill::all_representations(Nat(50)) == std::vector<P>{{1, 7}, {5, 5}});
    CHECK(windmill::all_representations(Nat(2)) == std::vector<P>{{1, 1}});
    CHECK(windmill::all_representations(Nat(0)) == std::vector<P>{{0, 0}});
    CHECK(windmill::all_representations(Nat(1)) == std::vector<P>{{0, 1}});
    CHECK(windmill::all_representations(Nat(3)).empty());
    CHECK(windmill::all_representations(Nat(7)).empty());
}

TEST_CASE("primality") {
    CHECK(windmill::is_prime(Nat(2)));
    CHECK(windmill::is_prime(Nat(3)));
    CHECK(windmill::is_prime(Nat(5)));
    CHECK_FALSE(windmill::is_prime(Nat(0)));
    CHECK_FALSE(windmill::is_prime(Nat(1)));
    CHECK_FALSE(windmill::is_prime(Nat(561)));          // Carmichael
    CHECK_FALSE(windmill::is_prime(Nat(3215031751)));   // strong pseudoprime to 2,3,5,7
    CHECK(windmill::is_prime(Nat("2305843009213693951")));  // 2^61 - 1
    CHECK(windmill::is_prime(Nat("170141183460469231731687303715884105727")));  // 2^127 - 1
    CHECK_FALSE(windmill::is_prime(Nat("340282366920938463463374607431768211457")));  // 2^128 + 1
}

TEST_CASE("decomposition verification") {
    CHECK(windmill::verify_decomposition(Nat(29), Nat(5), Nat(2)));
    CHECK_FALSE(windmill::verify_decomposition(Nat(29), Nat(2), Nat(5)));
    // Syntactic check only: composite 25 = 3^2 + 4^2 passes.
    CHECK(windmill::verify_decomposition(Nat(25), Nat(3), Nat(4)));
    CHECK_FALSE(windmill::verify_decomposition(Nat(27), Nat(3), Nat(4)));
    CHECK_FALSE(windmill::verify_decomposition(Nat(30), Nat(5), Nat(2)));
}

TEST_CASE("primes below 3000: solver agrees with brute force, steps halve the period") {
    for (unsigned n = 5; n < 3000; n += 4) {
        Nat p(n);
        if (!windmill::is_prime(p)) continue;
        auto d = expect_decomposed(p);
        REQUIRE(windmill::verify_decomposition(p, d.value.u, d.value.v));
        auto brute = windmill::brute_force_decompose(p);
        REQUIRE(brute.has_value());
        REQUIRE(brute->first == d.value.u);
        REQUIRE(brute->second == d.value.v);

        Nat period = windmill::period<Triple>(windmill::zagier_flip, {1, 1, p / 4}, p * p * p);
        REQUIRE(windmill::is_odd(period));
        REQUIRE(d.steps == period / 2);
    }
}

TEST_CASE("step count never exceeds the triple count for small applicable n") {
    for (unsigned n = 5; n < 500; n += 4) {
        Nat nn(n);
        if (windmill::is_square(nn)) continue;
        auto exit = windmill::orbit_exit(nn);
        REQUIRE(exit.steps <= Nat(windmill::mills_enumerate(nn).triples.size()));
    }
}

TEST_CASE("semiprime sample: every outcome is validated") {
    const std::vector<unsigned> primes = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 43, 47, 59, 67};
    for (unsigned a : primes) {
        for (unsigned b : primes) {
            unsigned n = a * b;
            if (n % 4 != 1) continue;
            Nat nn(n);
            if (windmill::is_square(nn)) continue;
            auto out = windmill::solve(nn);
            if (auto* d = std::get_if<windmill::Decomposed>(&out)) {
                REQUIRE(windmill::verify_decomposition(nn, d->value.u, d->value.v));
            } else {
                auto* c = std::get_if<windmill::CompositeFactor>(&out);
                REQUIRE(c != nullptr);
                REQUIRE(c->factor > 1);
                REQUIRE(c->factor < nn);
                REQUIRE(nn % c->factor == 0);
            }
        }
    }
}
