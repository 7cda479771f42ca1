#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ghz/classical.hpp"
#include "ghz/lp.hpp"

using namespace ghz;

TEST_CASE("lp values, certified") {
    auto r1 = exact_omega_lp({3, 2, 2});
    CHECK(r1.certified);
    CHECK(r1.value == Rational(3, 4));

    auto r2 = exact_omega_lp({2, 2, 2});
    CHECK(r2.certified);
    CHECK(r2.value == Rational(1));

    auto r3 = exact_omega_lp({3, 2, 4});
    CHECK(r3.certified);
    CHECK(r3.value == Rational(3, 4));
}

TEST_CASE("mixture is a probability vector on the reported support") {
    auto r = exact_omega_lp({3, 2, 2});
    REQUIRE(r.support.size() == r.mixture.size());
    Rational total(0);
    for (const auto& mass : r.mixture) {
        CHECK(mass >= 0);
        total += mass;
    }
    CHECK(total == Rational(1));
}

TEST_CASE("sandwich: omega <= omega_tilde, with equality here") {
    for (auto [n, d, m] : {std::tuple{2, 2, 2}, {3, 2, 2}, {2, 2, 3}, {3, 2, 3}, {2, 3, 2}}) {
        GameSpec spec{n, d, m};
        auto lp = exact_omega_lp(spec);
        auto bf = brute_force_omega_tilde(spec);
        CHECK(lp.certified);
        CHECK(lp.value <= bf.value);
    }
    // the paper's equality regime
    CHECK(exact_omega_lp({3, 2, 2}).value == brute_force_omega_tilde({3, 2, 2}).value);
    CHECK(exact_omega_lp({3, 2, 4}).value == brute_force_omega_tilde({3, 2, 4}).value);
}

TEST_CASE("work bound refusal") {
    CHECK_THROWS_AS(exact_omega_lp({6, 2, 4}, /*limit=*/1 << 16), WorkBoundExceededError);
}
