#include "doctest.h"
#include "helpers.hpp"

#include "sticky/sticky_tree.hpp"

#include <functional>
#include <set>

using namespace sticky;
using testing::path;
using testing::sticky_of;
using testing::tree;

namespace {

// Conditions 1-3 read off literally, quantifying over every node.
bool sticky_by_definition(const PlaneTree& t, const std::vector<Label>& l) {
    for (NodeId v = 0; v < t.size(); ++v) {
        if (l[v] > t.depth(v)) {
            return false;
        }
    }
    for (NodeId u = 1; u < t.size(); ++u) {
        const std::size_t d = t.depth(u);
        bool certified = false;
        for (NodeId w = u; w < t.subtree_end(u); ++w) {
            certified = certified || l[w] < d;
        }
        if (!certified) {
            return false;
        }
        for (NodeId v = u; v < t.subtree_end(u); ++v) {
            if (l[v] != d) {
                continue;
            }
            for (NodeId w = u; w < v; ++w) {
                if (l[w] < d) {
                    return false;
                }
            }
        }
    }
    return true;
}

void for_each_labeling(const PlaneTree& t, const std::function<void(const std::vector<Label>&)>& f) {
    std::vector<Label> l(t.size(), 0);
    std::function<void(NodeId)> rec = [&](NodeId v) {
        if (v == t.size()) {
            f(l);
            return;
        }
        for (Label d = 0; d <= t.depth(v); ++d) {
            l[v] = d;
            rec(v + 1);
        }
    };
    rec(1);
}

StickyViolation violation_of(std::vector<std::optional<NodeId>> parents, std::vector<Label> labels) {
    const auto t = tree(std::move(parents));
    const auto v = StickyTree::check(t, labels);
    REQUIRE(v.has_value());
    CHECK_THROWS_AS(StickyTree::validate(t, labels), InvalidStickyTree);
    return *v;
}

} // namespace

TEST_CASE("validation of small labelings") {
    CHECK_NOTHROW(StickyTree::validate(PlaneTree(), { 0 }));

    const auto c2 = violation_of({ std::nullopt, 0 }, { 0, 1 });
    CHECK(c2.condition == StickyCondition::Certificate);
    CHECK(c2.node == 1);

    const auto c3 = violation_of({ std::nullopt, 0, 1 }, { 0, 0, 1 });
    CHECK(c3.condition == StickyCondition::PrefixGuard);
    CHECK(c3.node == 1);
    CHECK(c3.witness == std::optional<NodeId>(2));
    CHECK(c3.offender == std::optional<NodeId>(1));

    const auto c1 = violation_of({ std::nullopt, 0 }, { 0, 2 });
    CHECK(c1.condition == StickyCondition::LabelRange);
    CHECK(c1.node == 1);
    CHECK(violation_of({ std::nullopt }, { 1 }).node == 0);

    CHECK_THROWS_AS(StickyTree::validate(tree({ std::nullopt, 0 }), { 0 }), InvalidTree);
}

TEST_CASE("validator agrees with the conditions read literally") {
    for (std::size_t n = 0; n <= 5; ++n) {
        std::size_t valid = 0;
        for (const auto& t : enumerate_plane_trees(n)) {
            for_each_labeling(t, [&](const std::vector<Label>& l) {
                const bool expected = sticky_by_definition(t, l);
                CHECK(!StickyTree::check(t, l).has_value() == expected);
                valid += expected ? 1 : 0;
            });
        }
        CHECK(valid == enumerate_sticky(n).size());
    }
}

TEST_CASE("classification of nodes") {
    const auto s = testing::single_edge();
    CHECK(s.classify(0) == NodeKind::Root);
    CHECK(s.classify(1) == NodeKind::Derived);
    const auto p = path(1, 0);
    CHECK(p.classify(1) == NodeKind::Primary);
    CHECK(p.classify(2) == NodeKind::Derived);
    CHECK(p.primary_count() == 1);
    CHECK(StickyTree().classify(0) == NodeKind::Root);
}

TEST_CASE("certificates and their counts") {
    const auto p10 = path(1, 0);
    CHECK(p10.certificate(1) == 2);
    CHECK(p10.certificate(2) == 2);
    CHECK(p10.certificate_counts() == std::vector<std::size_t> { 0, 0, 2 });
    const auto p00 = path(0, 0);
    CHECK(p00.certificate(1) == 1);
    CHECK(p00.certificate_counts() == std::vector<std::size_t> { 0, 1, 1 });
    CHECK(testing::cherry().certificate_counts() == std::vector<std::size_t> { 0, 1, 1 });
    CHECK_THROWS_AS(p10.certificate(0), std::invalid_argument);
}

TEST_CASE("labels recovered from certificate counts") {
    const auto shape = tree({ std::nullopt, 0, 1 });
    CHECK(recover_labels(shape, { 0, 0, 2 }) == path(1, 0));
    CHECK(recover_labels(shape, { 0, 1, 1 }) == path(0, 0));
    CHECK_THROWS_AS(recover_labels(shape, { 0, 2, 0 }), InconsistentCounts);
    CHECK_THROWS_AS(recover_labels(shape, { 0, 1 }), InvalidTree);
}

TEST_CASE("enumeration of the smallest sizes") {
    const auto one = enumerate_sticky(1);
    REQUIRE(one.size() == 1);
    CHECK(one[0] == testing::single_edge());

    const auto two = enumerate_sticky(2);
    const std::vector<StickyTree> expected { path(0, 0), path(1, 0), testing::cherry() };
    CHECK(two.size() == 3);
    for (const auto& s : expected) {
        CHECK(std::find(two.begin(), two.end(), s) != two.end());
    }
    CHECK(enumerate_sticky(0).size() == 1);
}

TEST_CASE("counts for n up to 6") {
    const std::size_t expected[] = { 1, 1, 3, 13, 68, 399, 2530 };
    for (std::size_t n = 0; n <= 6; ++n) {
        std::size_t count = 0;
        for_each_sticky(n, [&](const StickyTree&) { ++count; });
        CHECK(count == expected[n]);
    }
}

TEST_CASE("depth-d ancestor of a label-d node is primary") {
    for (std::size_t n = 1; n <= 6; ++n) {
        for_each_sticky(n, [&](const StickyTree& s) {
            for (NodeId v = 1; v < s.shape().size(); ++v) {
                const Label d = s.label(v);
                if (d > 0) {
                    CHECK(s.is_primary(s.shape().ancestor_at_depth(v, d)));
                }
            }
        });
    }
}

TEST_CASE("certificate structure over all trees up to 6 edges") {
    for (std::size_t n = 1; n <= 6; ++n) {
        for_each_sticky(n, [&](const StickyTree& s) {
            const auto c = s.certificate_counts();
            std::size_t total = 0;
            for (NodeId v = 1; v < s.shape().size(); ++v) {
                const NodeId w = s.certificate(v);
                CHECK(s.shape().is_ancestor_or_self(v, w));
                CHECK((w == v) == !s.is_primary(v));
                CHECK((c[v] == 0) == s.is_primary(v));
                total += c[v];
            }
            CHECK(total == n);
            CHECK(recover_labels(s.shape(), c) == s);
        });
    }
}

TEST_CASE("counts outside the image are rejected") {
    // every count vector summing to n on every shape of 3 edges
    std::size_t accepted = 0;
    for (const auto& t : enumerate_plane_trees(3)) {
        for (std::size_t a = 0; a <= 3; ++a) {
            for (std::size_t b = 0; a + b <= 3; ++b) {
                std::vector<std::size_t> c { 0, a, b, 3 - a - b };
                try {
                    const auto s = recover_labels(t, c);
                    CHECK(s.certificate_counts() == c);
                    ++accepted;
                } catch (const InconsistentCounts&) {
                }
            }
        }
    }
    CHECK(accepted == 13);
}

TEST_CASE("branch lengths") {
    const auto s = sticky_of({ std::nullopt, 0, 1, 0 }, { 0, 1, 0, 0 });
    CHECK(s.leftmost_branch_length() == 2);
    CHECK(s.rightmost_branch_length() == 1);
    CHECK(StickyTree().leftmost_branch_length() == 0);
}
