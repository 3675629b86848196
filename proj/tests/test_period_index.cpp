#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "brauerlab/period_index.hpp"

using namespace brauerlab;
using Pairs = std::vector<std::pair<long long, long long>>;

TEST_CASE("admissibility of pinned triples") {
    // elliptic curves: pe = ix, always
    for (long long n = 1; n <= 12; ++n) {
        CHECK(lichtenbaum_admissible({1, n, n}).admissible);
        CHECK_FALSE(lichtenbaum_admissible({1, n, 2 * n}).admissible);
    }
    CHECK(lichtenbaum_admissible({2, 1, 2}).admissible);
    CHECK(lichtenbaum_admissible({3, 2, 4}).admissible);

    auto r = lichtenbaum_admissible({5, 2, 4});
    CHECK_FALSE(r.admissible);
    // (g-1)/pe = 2 is even, and 4 does not divide pe + 1 - g = -2
    CHECK(r.violations.size() == 2);

    CHECK_FALSE(lichtenbaum_admissible({3, 1, 2}).admissible);
    CHECK_THROWS_AS(lichtenbaum_admissible({0, 1, 1}), std::domain_error);
    CHECK_THROWS_AS(lichtenbaum_admissible({2, 0, 1}), std::domain_error);
}

TEST_CASE("enumeration") {
    CHECK(enumerate_admissible(2) == Pairs{{1, 1}, {1, 2}});
    CHECK(enumerate_admissible(3) == Pairs{{1, 1}, {2, 2}, {2, 4}});
    CHECK(enumerate_admissible(1, 3) == Pairs{{1, 1}, {2, 2}, {3, 3}});
    CHECK_THROWS_AS(enumerate_admissible(1), std::domain_error);
    CHECK_THROWS_AS(enumerate_admissible(0), std::domain_error);

    for (long long g = 2; g <= 60; ++g)
        for (auto [pe, ix] : enumerate_admissible(g)) {
            CHECK(ix % pe == 0);        // pe | ix
            CHECK((g - 1) % pe == 0);   // pe | g-1
        }
}

TEST_CASE("hurwitz genus") {
    CHECK(hurwitz_genus(2, 2) == 3);
    for (long long d = 1; d <= 10; ++d) CHECK(hurwitz_genus(1, d) == 1);
    CHECK(hurwitz_genus(4, 3) == 10);
    // even covers of g >= 2 produce odd genus
    for (long long g = 2; g <= 20; ++g)
        for (long long d = 2; d <= 20; d += 2) CHECK(hurwitz_genus(g, d) % 2 == 1);
    CHECK_THROWS_AS(hurwitz_genus(0, 2), std::domain_error);
}

TEST_CASE("step-1 equivalence oracle") {
    CHECK(step1_equivalence_holds({3, 2, 2}));
    CHECK(step1_equivalence_holds({3, 2, 4}));
    CHECK_THROWS_AS(step1_equivalence_holds({5, 2, 4}), std::invalid_argument);

    for (long long g = 2; g <= 200; ++g)
        for (auto [pe, ix] : enumerate_admissible(g)) CHECK(step1_equivalence_holds({g, pe, ix}));
}

TEST_CASE("section consequences") {
    SUBCASE("odd p concludes equality") {
        auto report = section_consequences({3, 2, true, false});
        REQUIRE(report.conclusions.size() == 3);
        CHECK(report.conclusions[0].statement == "pe(X) is a power of 3");
        CHECK(report.conclusions[1].statement == "ix(X) is a power of 3");
        CHECK(report.conclusions[2].statement == "pe(X) = ix(X)");
        CHECK(report.conclusions[2].rule == "odd-p-period-index-equality");
        REQUIRE(report.surviving_triples.has_value());
        CHECK(*report.surviving_triples == std::vector<PITriple>{{2, 1, 1}});
    }
    SUBCASE("p = 2 without an even cover only bounds the orders") {
        auto report = section_consequences({2, 2, true, false});
        REQUIRE(report.conclusions.size() == 2);
        CHECK(report.conclusions[0].rule == "section-period-p-power");
        CHECK(report.conclusions[1].rule == "section-index-p-power");
    }
    SUBCASE("p = 2 with an even split cover adds the equality") {
        auto report = section_consequences({2, 2, true, true});
        REQUIRE(report.conclusions.size() == 3);
        CHECK(report.conclusions[2].rule == "even-cover-period-index-equality");
    }
    SUBCASE("no section, no conclusions") {
        CHECK(section_consequences({5, 3, false, false}).conclusions.empty());
    }
    CHECK_THROWS_AS(section_consequences({3, 0, true, false}), std::domain_error);
    CHECK_THROWS_AS(section_consequences({4, 2, true, false}), std::invalid_argument);
}

TEST_CASE("admissible triples surviving a section") {
    CHECK(admissible_with_section(2, 3) == Pairs{{1, 1}});
    CHECK(admissible_with_section(3, 2) == Pairs{{1, 1}, {2, 2}, {2, 4}});
    CHECK(admissible_with_section(3, 5) == Pairs{{1, 1}});
    CHECK_THROWS_AS(admissible_with_section(1, 3), std::domain_error);

    // always a subset of the plain enumeration
    for (long long g = 2; g <= 40; ++g)
        for (long long p : {2LL, 3LL, 5LL}) {
            auto filtered = admissible_with_section(g, p);
            auto everything = enumerate_admissible(g);
            for (auto pair : filtered)
                CHECK(std::find(everything.begin(), everything.end(), pair) != everything.end());
        }
}
