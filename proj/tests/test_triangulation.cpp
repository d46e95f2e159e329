#include "doctest.h"
#include "helpers.hpp"

#include "sticky/map_bijections.hpp"
#include "sticky/triangulation.hpp"

using namespace sticky;
using testing::tetrahedron;
using testing::triangle;

TEST_CASE("recognising triangulations") {
    CHECK(is_triangulation(tetrahedron()));
    CHECK(is_triangulation(triangle()));
    CHECK_FALSE(is_triangulation(testing::loop_map()));
    CHECK_FALSE(is_triangulation(testing::bridge_map()));
    CHECK_FALSE(is_triangulation(testing::double_edge()));
    CHECK_FALSE(is_triangulation(RootedMap()));
    // two triangles glued along all three edges: triangular faces but not simple
    const auto theta = map_from_rotations({ { 0, 2, 4 }, { 1, 5, 3 } }, { 1, 0, 3, 2, 5, 4 }, 0);
    CHECK(is_planar(theta));
    CHECK_FALSE(is_triangulation(theta));
}

TEST_CASE("internal vertices") {
    CHECK(internal_vertex_count(tetrahedron()) == 1);
    CHECK(internal_vertex_count(triangle()) == 0);
    CHECK_THROWS_AS(internal_vertex_count(testing::loop_map()), NotTriangulation);
}

TEST_CASE("core of the tetrahedron is one edge") {
    const CoreMap c = core(tetrahedron());
    CHECK(c.map.edge_count() == 1);
    CHECK(c.map.vertex_count() == 2);
    CHECK(c.apex != c.base);
    CHECK(c.left_boundary == std::vector<std::size_t> { c.apex, c.base });
    CHECK(c.right_boundary == std::vector<std::size_t> { c.apex, c.base });
    CHECK(c.canonical() == CoreMap::from_rooted(testing::bridge_map(), 1).canonical());
}

TEST_CASE("core of the triangle is one vertex") {
    const CoreMap c = core(triangle());
    CHECK(c.map.empty());
    CHECK(c.apex == 0);
    CHECK(c.base == 0);
    CHECK(c.left_boundary == std::vector<std::size_t> { 0 });
    CHECK_THROWS_AS(core(testing::loop_map()), NotTriangulation);
}

TEST_CASE("closing small cores") {
    CHECK(canonically_equal(close_core(CoreMap::from_rooted(testing::bridge_map(), 1)), tetrahedron()));
    CHECK(canonically_equal(close_core(CoreMap::from_rooted(RootedMap(), 0)), triangle()));
}

TEST_CASE("invalid cores") {
    CHECK_THROWS_AS(CoreMap::from_rooted(testing::bridge_map(), 0), InvalidCore);
    CHECK_THROWS_AS(CoreMap::from_rooted(testing::bridge_map(), 7), InvalidCore);
    CHECK_THROWS_AS(CoreMap::from_rooted(RootedMap(), 1), InvalidCore);

    CoreMap c = CoreMap::from_rooted(testing::bridge_map(), 1);
    c.left_boundary = { c.apex };
    CHECK_THROWS_AS(close_core(c), InvalidCore);
}

TEST_CASE("outer corners walk the root face") {
    CHECK(outer_corners(RootedMap()).empty());
    CHECK(outer_corners(testing::bridge_map()).size() == 2);
    const auto c = sticky_to_core(testing::path(1, 0));
    CHECK(outer_corners(c.map).size() == c.left_boundary.size() + c.right_boundary.size() - 2);
}

TEST_CASE("core and closure are inverse on the image of Q") {
    for (std::size_t n = 0; n <= 5; ++n) {
        for_each_sticky(n, [&](const StickyTree& s) {
            const RootedMap t = sticky_to_triangulation(s);
            const CoreMap c = core(t);
            CHECK(c.map.vertex_count() == n + 1);
            CHECK(c.left_boundary.front() == c.apex);
            CHECK(c.left_boundary.back() == c.base);
            CHECK(c.right_boundary.front() == c.apex);
            CHECK(c.right_boundary.back() == c.base);
            CHECK(c.canonical() == sticky_to_core(s).canonical());
            CHECK(c.canonical() == c.canonical().canonical());
            CHECK(canonically_equal(close_core(c), t));
            CHECK(canonically_equal(close_core(c.canonical()), t));
        });
    }
}
