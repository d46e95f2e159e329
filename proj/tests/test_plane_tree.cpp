#include "doctest.h"
#include "helpers.hpp"

#include "sticky/dyck_path.hpp"
#include "sticky/plane_tree.hpp"

#include <set>

using namespace sticky;
using testing::tree;

TEST_CASE("depth of root, path and star nodes") {
    CHECK(PlaneTree().depth(0) == 0);
    const auto p = tree({ std::nullopt, 0, 1 });
    CHECK(p.depth(0) == 0);
    CHECK(p.depth(2) == 2);
    const auto star = tree({ std::nullopt, 0, 0, 0 });
    for (NodeId v = 1; v <= 3; ++v) {
        CHECK(star.depth(v) == 1);
    }
    CHECK_THROWS_AS(star.depth(4), std::out_of_range);
}

TEST_CASE("contour words of small trees") {
    CHECK(contour_word(PlaneTree()).to_string().empty());
    CHECK(contour_word(tree({ std::nullopt, 0, 1 })).to_string() == "uudd");
    CHECK(contour_word(tree({ std::nullopt, 0, 0 })).to_string() == "udud");
    CHECK(contour_word(tree({ std::nullopt, 0, 1, 0 })).to_string() == "uuddud");
}

TEST_CASE("trees from contour words") {
    CHECK(tree_from_contour(DyckPath::parse("uudd")) == tree({ std::nullopt, 0, 1 }));
    CHECK(tree_from_contour(DyckPath::parse("udud")) == tree({ std::nullopt, 0, 0 }));
    const auto t = tree_from_contour(DyckPath::parse("uuddud"));
    CHECK(t == tree({ std::nullopt, 0, 1, 0 }));
    CHECK(t.children(0).size() == 2);
    CHECK(t.children(1).size() == 1);
    CHECK(t.is_leaf(3));
}

TEST_CASE("contour round trips for up to 8 edges") {
    const std::size_t catalan[] = { 1, 1, 2, 5, 14, 42, 132, 429, 1430 };
    for (std::size_t n = 0; n <= 8; ++n) {
        const auto words = enumerate_dyck_paths(n);
        CHECK(words.size() == catalan[n]);
        std::set<DyckPath> distinct(words.begin(), words.end());
        CHECK(distinct.size() == words.size());
        for (const auto& w : words) {
            const auto t = tree_from_contour(w);
            REQUIRE(t.edge_count() == n);
            CHECK(contour_word(t) == w);
            CHECK(tree_from_contour(contour_word(t)) == t);
        }
    }
}

TEST_CASE("Dyck words are validated") {
    CHECK_THROWS_AS(DyckPath::parse("du"), InvalidDyckPath);
    CHECK_THROWS_AS(DyckPath::parse("uud"), InvalidDyckPath);
    CHECK_THROWS_AS(DyckPath::parse("uxdd"), InvalidDyckPath);
    CHECK(DyckPath::parse("UUDD").to_string() == "uudd");
    const auto w = DyckPath::parse("uududd");
    CHECK(w.order() == 3);
    CHECK(w.initial_rise() == 2);
    CHECK(w.final_descent() == 2);
}

TEST_CASE("parent arrays must be in prefix order") {
    CHECK_THROWS_AS(tree({}), InvalidTree);
    CHECK_THROWS_AS(tree({ 0 }), InvalidTree);
    CHECK_THROWS_AS(tree({ std::nullopt, std::nullopt }), InvalidTree);
    // node 3 hangs off node 1 after node 2 closed it
    CHECK_THROWS_AS(tree({ std::nullopt, 0, 0, 1 }), InvalidTree);
    CHECK_THROWS_AS(tree({ std::nullopt, 5 }), InvalidTree);
}

TEST_CASE("children lists renumber into prefix order") {
    // root 2 with children 0 then 1; 1 has child 3
    const auto [t, renumber] = PlaneTree::from_children(2, { {}, { 3 }, { 0, 1 }, {} });
    CHECK(t == tree({ std::nullopt, 0, 0, 2 }));
    CHECK(renumber == std::vector<NodeId> { 1, 2, 0, 3 });
    CHECK_THROWS_AS(PlaneTree::from_children(0, { { 1 }, {}, {} }), InvalidTree);
}

TEST_CASE("subtree bounds, ancestors and mirror") {
    const auto t = tree({ std::nullopt, 0, 1, 1, 0 });
    CHECK(t.subtree_end(1) == 4);
    CHECK(t.subtree_end(4) == 5);
    CHECK(t.is_ancestor_or_self(1, 3));
    CHECK_FALSE(t.is_ancestor_or_self(1, 4));
    CHECK(t.ancestor_at_depth(3, 1) == 1);
    CHECK(t.ancestor_at_depth(3, 0) == 0);
    CHECK_THROWS_AS(t.ancestor_at_depth(1, 2), std::out_of_range);
    CHECK(t.subtree(1) == tree({ std::nullopt, 0, 0 }));

    const auto [m, renumber] = t.mirrored();
    CHECK(contour_word(m).to_string() == "uduududd");
    CHECK(renumber[4] == 1);
    CHECK(m.mirrored().first == t);
}
