#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "brauerlab/hilbert.hpp"
#include "oracles.hpp"

using namespace brauerlab;

TEST_CASE("symbols at pinned places") {
    CHECK(hilbert_symbol({3, -1}, Place::finite(3)) == -1);
    CHECK(hilbert_symbol({7, -1}, Place::finite(7)) == -1);
    CHECK(hilbert_symbol({11, -1}, Place::finite(11)) == -1);
    CHECK(hilbert_symbol({-1, -1}, Place::real()) == -1);
    CHECK(hilbert_symbol({2, -1}, Place::finite(2)) == 1);  // (x,y,z) = (1,1,1)
    for (const Integer& b : {Integer(-5), Integer(7), Integer(30)}) {
        CHECK(hilbert_symbol({1, b}, Place::real()) == 1);
        CHECK(hilbert_symbol({1, b}, Place::finite(2)) == 1);
        CHECK(hilbert_symbol({1, b}, Place::finite(5)) == 1);
    }
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(QuaternionSymbol(0, 3), std::domain_error);
    CHECK_THROWS_AS(QuaternionSymbol(3, 0), std::domain_error);
    CHECK_THROWS_AS(Place::finite(6), std::invalid_argument);
    CHECK_THROWS_AS(Place::finite(1), std::invalid_argument);
}

TEST_CASE("invariant maps") {
    auto inv = quaternion_invariants({3, -1});
    REQUIRE(inv.size() == 3);
    CHECK(inv.at(Place::real()).is_zero());
    // support is {2, 3}: the map must have even support by the product formula
    CHECK(inv.at(Place::finite(2)) == InvariantClass::half());
    CHECK(inv.at(Place::finite(3)) == InvariantClass::half());

    for (const auto& [place, value] : quaternion_invariants({1, 1})) CHECK(value.is_zero());

    auto neg = quaternion_invariants({-1, -1});
    CHECK(neg.at(Place::real()) == InvariantClass::half());
    CHECK(neg.at(Place::finite(2)) == InvariantClass::half());
}

TEST_CASE("product formula on a small grid") {
    for (long a = -20; a <= 20; ++a)
        for (long b = -20; b <= 20; ++b) {
            if (a == 0 || b == 0) continue;
            CAPTURE(a);
            CAPTURE(b);
            CHECK(product_formula_check({a, b}));
        }
}

TEST_CASE("bilinearity, symmetry, square invariance") {
    std::vector<Place> places = {Place::real(), Place::finite(2), Place::finite(3),
                                 Place::finite(5), Place::finite(7)};
    std::vector<long> values = {-15, -8, -5, -3, -2, -1, 1, 2, 3, 5, 6, 10};
    for (const Place& v : places)
        for (long a : values)
            for (long b : values) {
                CHECK(hilbert_symbol({a, b}, v) == hilbert_symbol({b, a}, v));
                for (long c : {2L, 3L, 6L}) {
                    CHECK(hilbert_symbol({a * c * c, b}, v) == hilbert_symbol({a, b}, v));
                    CHECK(hilbert_symbol({Integer(a) * c, b}, v) ==
                          hilbert_symbol({a, b}, v) * hilbert_symbol({c, b}, v));
                }
            }
}

TEST_CASE("agreement with the lifting oracle, spot checks") {
    for (long p : {3L, 5L})
        for (long a = -10; a <= 10; ++a)
            for (long b = -10; b <= 10; ++b) {
                if (a == 0 || b == 0) continue;
                CAPTURE(p);
                CAPTURE(a);
                CAPTURE(b);
                CHECK(hilbert_symbol({a, b}, Place::finite(p)) ==
                      testing::oracle_hilbert_symbol(a, b, p));
            }
    CHECK(testing::oracle_hilbert_symbol(2, -1, 2) == 1);
    CHECK(testing::oracle_hilbert_symbol(-1, -1, 2) == -1);
    CHECK(testing::oracle_hilbert_symbol(3, -1, 2) == -1);
}

TEST_CASE("odd prime divisors") {
    auto ds = odd_prime_divisors(Integer(-180));
    REQUIRE(ds.size() == 2);
    CHECK(ds[0] == 3);
    CHECK(ds[1] == 5);
    CHECK(odd_prime_divisors(Integer(8)).empty());
    auto big = odd_prime_divisors(Integer("2147483647"));  // prime cofactor shortcut
    REQUIRE(big.size() == 1);
    CHECK(big[0] == Integer("2147483647"));
}

TEST_CASE("place ordering: real first, then primes ascending") {
    CHECK(Place::real() < Place::finite(2));
    CHECK(Place::finite(2) < Place::finite(3));
    CHECK_FALSE(Place::finite(3) < Place::finite(3));
}
