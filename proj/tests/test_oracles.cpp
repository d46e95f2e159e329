#include "doctest.h"
#include "helpers.hpp"

#include "sticky/oracles.hpp"
#include "sticky/tamari.hpp"
#include "sticky/triangulation.hpp"

#include <set>
#include <stdexcept>

using namespace sticky;

TEST_CASE("bridgeless maps with one and two edges") {
    const auto one = enumerate_bridgeless_maps(1);
    REQUIRE(one.size() == 1);
    CHECK(canonically_equal(one[0], testing::loop_map()));
    const auto two = enumerate_bridgeless_maps(2);
    CHECK(two.size() == 3);
    std::size_t with_double_edge = 0;
    for (const auto& m : two) {
        with_double_edge += canonically_equal(m, testing::double_edge()) ? 1 : 0;
    }
    CHECK(with_double_edge == 1);
    const auto zero = enumerate_bridgeless_maps(0);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].empty());
}

TEST_CASE("bridgeless map counts and independent re-checks") {
    const std::size_t expected[] = { 1, 1, 3, 13, 68 };
    for (std::size_t n = 0; n <= 4; ++n) {
        const auto maps = enumerate_bridgeless_maps(n);
        CHECK(maps.size() == expected[n]);
        std::set<std::pair<std::vector<Dart>, std::vector<Dart>>> forms;
        for (const auto& m : maps) {
            CHECK(m.edge_count() == n);
            CHECK(is_planar(m));
            CHECK(is_bridgeless(m));
            const auto c = canonicalize(m);
            forms.emplace(c.alpha_perm(), c.sigma_perm());
        }
        CHECK(forms.size() == maps.size());
    }
    CHECK_THROWS_AS(enumerate_bridgeless_maps(5), SizeCapExceeded);
}

TEST_CASE("closed-form count") {
    const std::uint64_t expected[] = { 0, 1, 3, 13, 68, 399, 2530, 16965, 118668, 857956, 6369883 };
    for (std::size_t n = 1; n <= 10; ++n) {
        CHECK(formula_count(n) == expected[n]);
    }
    CHECK_THROWS_AS(formula_count(0), std::domain_error);
    CHECK_THROWS_AS(formula_count(200), std::overflow_error);
}

TEST_CASE("formula agrees with every enumeration") {
    for (std::size_t n = 1; n <= 6; ++n) {
        CHECK(enumerate_sticky(n).size() == formula_count(n));
        CHECK(enumerate_intervals(n).size() == formula_count(n));
    }
}

TEST_CASE("triangulations through reconstruction") {
    const auto zero = enumerate_triangulations_via_Q(0);
    REQUIRE(zero.size() == 1);
    CHECK(canonically_equal(zero[0], testing::triangle()));
    const auto one = enumerate_triangulations_via_Q(1);
    REQUIRE(one.size() == 1);
    CHECK(canonically_equal(one[0], testing::tetrahedron()));
    CHECK(enumerate_triangulations_via_Q(3).size() == 13);
    const auto four = enumerate_triangulations_via_Q(4);
    CHECK(four.size() == 68);
    for (const auto& t : four) {
        CHECK(is_triangulation(t));
        CHECK(internal_vertex_count(t) == 4);
    }
    CHECK_THROWS_AS(enumerate_triangulations_via_Q(6), SizeCapExceeded);
}
