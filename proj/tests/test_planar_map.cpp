#include "doctest.h"
#include "helpers.hpp"

#include "sticky/planar_map.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

using namespace sticky;
using testing::bridge_map;
using testing::double_edge;
using testing::loop_map;

namespace {

// Every connected map with n edges, alpha pairing 2k with 2k+1, root 0.
void for_each_map(std::size_t n, const std::function<void(const RootedMap&)>& f) {
    std::vector<Dart> alpha(2 * n), sigma(2 * n);
    for (Dart h = 0; h < 2 * n; ++h) {
        alpha[h] = h ^ 1U;
    }
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        try {
            f(RootedMap(alpha, sigma, 0));
        } catch (const InvalidMap&) {
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
}

RootedMap relabel(const RootedMap& m, const std::vector<Dart>& pi) {
    std::vector<Dart> alpha(m.dart_count()), sigma(m.dart_count());
    for (Dart h = 0; h < m.dart_count(); ++h) {
        alpha[pi[h]] = pi[m.alpha(h)];
        sigma[pi[h]] = pi[m.sigma(h)];
    }
    return RootedMap(alpha, sigma, pi[m.root()]);
}

RootedMap one_vertex_two_loops(std::vector<Dart> rotation) {
    return map_from_rotations({ rotation }, { 1, 0, 3, 2 }, 0);
}

} // namespace

TEST_CASE("faces of the smallest maps") {
    CHECK(loop_map().faces().size() == 2);
    CHECK(bridge_map().faces().size() == 1);
    CHECK(testing::tetrahedron().faces().size() == 4);
    CHECK(double_edge().faces().size() == 2);
    for (const auto& f : testing::tetrahedron().faces()) {
        CHECK(f.size() == 3);
    }
    CHECK(RootedMap().face_count() == 1);
    CHECK(RootedMap().vertex_count() == 1);
}

TEST_CASE("planarity by Euler characteristic") {
    CHECK(is_planar(loop_map()));
    CHECK(is_planar(bridge_map()));
    CHECK(is_planar(RootedMap()));
    CHECK_FALSE(is_planar(one_vertex_two_loops({ 0, 2, 1, 3 })));
    CHECK(one_vertex_two_loops({ 0, 2, 1, 3 }).euler_characteristic() == 0);
}

TEST_CASE("K5 is not planar under any rotation system") {
    // edge k = {i, j} with i < j has dart 2k at i and 2k+1 at j
    std::vector<std::vector<Dart>> at(5);
    std::vector<Dart> alpha;
    for (Dart i = 0; i < 5; ++i) {
        for (Dart j = i + 1; j < 5; ++j) {
            const Dart h = static_cast<Dart>(alpha.size());
            at[i].push_back(h);
            at[j].push_back(h + 1);
            alpha.push_back(h + 1);
            alpha.push_back(h);
        }
    }
    std::size_t tried = 0;
    bool any_planar = false;
    // fix the first dart of each rotation; permute the other three
    std::function<void(std::size_t, std::vector<std::vector<Dart>>&)> rec =
        [&](std::size_t v, std::vector<std::vector<Dart>>& rot) {
            if (v == 5) {
                ++tried;
                any_planar = any_planar || is_planar(map_from_rotations(rot, alpha, 0));
                return;
            }
            std::sort(rot[v].begin() + 1, rot[v].end());
            do {
                rec(v + 1, rot);
            } while (std::next_permutation(rot[v].begin() + 1, rot[v].end()));
        };
    auto rot = at;
    rec(0, rot);
    CHECK(tried == 7776);
    CHECK_FALSE(any_planar);
}

TEST_CASE("bridges and loops") {
    CHECK(bridges(bridge_map()) == std::vector<EdgeId> { 0 });
    CHECK(loops(bridge_map()).empty());
    CHECK(bridges(loop_map()).empty());
    CHECK(loops(loop_map()) == std::vector<EdgeId> { 0 });
    CHECK(bridges(double_edge()).empty());
    CHECK(loops(double_edge()).empty());
    CHECK(is_bridgeless(double_edge()));
    CHECK_FALSE(is_bridgeless(bridge_map()));
}

TEST_CASE("duals of one- and two-edge maps") {
    CHECK(canonically_equal(dual(loop_map()), bridge_map()));
    CHECK(canonically_equal(dual(bridge_map()), loop_map()));
    CHECK(canonically_equal(dual(double_edge()), double_edge()));
    CHECK(dual(RootedMap()) == RootedMap());
}

TEST_CASE("canonical forms") {
    const auto m = testing::tetrahedron();
    CHECK(canonicalize(canonicalize(m)) == canonicalize(m));
    CHECK(canonicalize(m).root() == 0);

    const RootedMap swapped({ 1, 0 }, { 1, 0 }, 1);
    CHECK(canonicalize(swapped) == canonicalize(loop_map()));

    const auto sequential = one_vertex_two_loops({ 0, 1, 2, 3 });
    const auto nested = one_vertex_two_loops({ 0, 2, 3, 1 });
    CHECK(is_planar(sequential));
    CHECK(is_planar(nested));
    CHECK_FALSE(canonically_equal(sequential, nested));

    // every rerooting of the tetrahedron is isomorphic, unlike the two loops
    for (Dart h = 0; h < m.dart_count(); ++h) {
        CHECK(canonically_equal(m, RootedMap(m.alpha_perm(), m.sigma_perm(), h)));
    }
    const RootedMap rerooted(sequential.alpha_perm(), sequential.sigma_perm(), 1);
    CHECK_FALSE(canonically_equal(sequential, rerooted));
}

TEST_CASE("canonical form ignores dart names") {
    const auto m = testing::tetrahedron();
    std::vector<Dart> pi(m.dart_count());
    std::iota(pi.begin(), pi.end(), 0);
    for (int shift = 1; shift < 12; ++shift) {
        std::rotate(pi.begin(), pi.begin() + 1, pi.end());
        std::reverse(pi.begin() + shift % 5, pi.end());
        CHECK(canonically_equal(relabel(m, pi), m));
    }
}

TEST_CASE("invalid permutations are rejected") {
    CHECK_THROWS_AS(RootedMap({ 0, 1 }, { 0, 1 }, 0), InvalidMap);
    CHECK_THROWS_AS(RootedMap({ 1, 0 }, { 0, 0 }, 0), InvalidMap);
    CHECK_THROWS_AS(RootedMap({ 1, 0, 2 }, { 0, 1, 2 }, 0), InvalidMap);
    CHECK_THROWS_AS(RootedMap({ 1, 0 }, { 0, 1 }, 2), InvalidMap);
    CHECK_THROWS_AS(RootedMap({ 1, 0 }, { 0 }, 0), InvalidMap);
    // two separate loops
    CHECK_THROWS_AS(RootedMap({ 1, 0, 3, 2 }, { 1, 0, 3, 2 }, 0), InvalidMap);
    CHECK_THROWS_AS(map_from_rotations({ { 0, 0 } }, { 1, 0 }, 0), InvalidMap);
    CHECK_THROWS_AS(map_from_rotations({ { 0 } }, { 1, 0 }, 0), InvalidMap);
    CHECK_THROWS_AS(RootedMap().root(), InvalidMap);
}

TEST_CASE("vertices are numbered by first dart") {
    const auto m = double_edge();
    CHECK(m.vertex_count() == 2);
    CHECK(m.vertex(0) == 0);
    CHECK(m.vertex(1) == 1);
    CHECK(m.vertex(2) == 0);
    CHECK(m.vertices() == std::vector<std::vector<Dart>> { { 0, 2 }, { 1, 3 } });
    CHECK(m.phi(0) == m.alpha(m.sigma(0)));
    CHECK(m.sigma_inv(m.sigma(3)) == 3);
}

TEST_CASE("duality over all maps with up to 4 edges") {
    std::size_t planar = 0;
    for (std::size_t n = 1; n <= 4; ++n) {
        for_each_map(n, [&](const RootedMap& m) {
            CHECK(m.euler_characteristic() <= 2);
            CHECK(m.euler_characteristic() % 2 == 0);
            const auto d = dual(m);
            CHECK(dual(d) == m);
            CHECK(d.vertex_count() == m.face_count());
            CHECK(d.face_count() == m.vertex_count());
            if (is_planar(m)) {
                ++planar;
                CHECK(is_planar(d));
                CHECK(loops(d).size() == bridges(m).size());
                CHECK(bridges(d).size() == loops(m).size());
            }
        });
    }
    CHECK(planar > 0);
}

TEST_CASE("rooted planar maps counted by canonical form") {
    // rooted planar maps with n edges: 2, 9, 54
    const std::size_t expected[] = { 0, 2, 9, 54 };
    for (std::size_t n = 1; n <= 3; ++n) {
        std::set<std::pair<std::vector<Dart>, std::vector<Dart>>> forms;
        for_each_map(n, [&](const RootedMap& m) {
            if (is_planar(m)) {
                const auto c = canonicalize(m);
                forms.emplace(c.alpha_perm(), c.sigma_perm());
            }
        });
        CHECK(forms.size() == expected[n]);
    }
}
