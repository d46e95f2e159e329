#pragma once

#include "sticky/dyck_path.hpp"
#include "sticky/errors.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace sticky {

/// Node identity is the prefix-order index; the root is always node 0.
using NodeId = std::size_t;

class InvalidTree : public Error {
public:
    using Error::Error;
};

/// An ordered rooted tree whose nodes are stored in prefix order (root first,
/// then the subtrees of its children from left to right). Children order is
/// recovered from index order. Immutable once built.
class PlaneTree {
public:
    /// The single-node tree.
    PlaneTree();

    /// Builds from a parent array in prefix order; entry 0 must be empty and
    /// every other entry must name a node on the current rightmost path.
    static PlaneTree from_parents(std::span<const std::optional<NodeId>> parents);

    /// Builds from per-node child lists in an arbitrary numbering, renumbering
    /// nodes into prefix order. Returns the tree and the old-to-new map.
    static std::pair<PlaneTree, std::vector<NodeId>>
    from_children(NodeId root, const std::vector<std::vector<NodeId>>& children);

    std::size_t size() const { return parent_.size(); }
    std::size_t edge_count() const { return parent_.size() - 1; }

    std::optional<NodeId> parent(NodeId v) const;
    std::span<const NodeId> children(NodeId v) const;
    bool is_leaf(NodeId v) const { return children(v).empty(); }

    /// Root has depth 0. Throws std::out_of_range for an unknown id.
    std::size_t depth(NodeId v) const;

    /// One past the last prefix index of the subtree rooted at v.
    NodeId subtree_end(NodeId v) const;

    /// True when a is an ancestor of b or a == b.
    bool is_ancestor_or_self(NodeId a, NodeId b) const {
        return a <= b && b < subtree_end(a);
    }

    /// Ancestor of v at the given depth (v itself when depth(v) == d).
    NodeId ancestor_at_depth(NodeId v, std::size_t d) const;

    std::vector<std::optional<NodeId>> parents() const;

    /// Same tree with every child list reversed, and the old-to-new map.
    std::pair<PlaneTree, std::vector<NodeId>> mirrored() const;

    /// Subtree rooted at v, renumbered from 0.
    PlaneTree subtree(NodeId v) const;

    friend bool operator==(const PlaneTree& a, const PlaneTree& b) {
        return a.parent_ == b.parent_;
    }

private:
    void check(NodeId v) const;

    std::vector<std::optional<NodeId>> parent_;
    std::vector<std::vector<NodeId>> children_;
    std::vector<std::size_t> depth_;
    std::vector<NodeId> end_;
};

/// Up step at the first visit of every non-root node, down step at its final
/// leave, following the counter-clockwise contour.
DyckPath contour_word(const PlaneTree& tree);

/// Inverse of contour_word.
PlaneTree tree_from_contour(const DyckPath& word);

/// All plane trees with n edges, ordered as their contour words.
std::vector<PlaneTree> enumerate_plane_trees(std::size_t n);

} // namespace sticky
