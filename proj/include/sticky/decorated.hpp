#pragma once

#include "sticky/plane_tree.hpp"
#include "sticky/sticky_tree.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sticky {

/// Leaves are the non-root nodes without children; the root is never labeled.
enum class DecoratedCondition {
    LeafSet = 0,     ///< labels missing on a leaf or present elsewhere
    LabelRange = 1,  ///< -1 <= label <= depth(parent) - 1
    Certificate = 2, ///< internal u of depth d > 0 has a leaf below with label < d - 1
    PrefixGuard = 3, ///< leaves before a label-d leaf in R_u carry labels >= d
};

struct DecoratedViolation {
    DecoratedCondition condition;
    NodeId node;
    std::optional<NodeId> witness;
    std::optional<NodeId> offender;

    std::string message() const;
};

class InvalidDecoratedTree : public Error {
public:
    explicit InvalidDecoratedTree(DecoratedViolation v);
    const DecoratedViolation& violation() const { return violation_; }

private:
    DecoratedViolation violation_;
};

class NotInRS : public Error {
public:
    using Error::Error;
};

class NotSynchronizedTree : public Error {
public:
    using Error::Error;
};

using LeafLabels = std::map<NodeId, long>;

class DecoratedTree {
public:
    static DecoratedTree validate(PlaneTree shape, LeafLabels labels);
    static std::optional<DecoratedViolation> check(const PlaneTree& shape, const LeafLabels& labels);

    const PlaneTree& shape() const { return shape_; }
    const LeafLabels& leaf_labels() const { return labels_; }
    long label(NodeId leaf) const { return labels_.at(leaf); }
    bool is_leaf(NodeId v) const { return v != 0 && shape_.is_leaf(v); }

    /// First leaf in prefix order below u with label < depth(u) - 1. Throws
    /// std::invalid_argument unless u is internal of positive depth.
    NodeId certificate(NodeId u) const;

    /// For every leaf, the number of internal nodes it certifies (0 elsewhere).
    std::vector<std::size_t> certificate_counts() const;

    friend bool operator==(const DecoratedTree&, const DecoratedTree&) = default;

private:
    DecoratedTree(PlaneTree shape, LeafLabels labels)
        : shape_(std::move(shape))
        , labels_(std::move(labels)) { }

    PlaneTree shape_;
    LeafLabels labels_;
};

/// n+1 internal nodes, n+1 leaves, and every internal node has a leaf as its
/// first child.
bool in_RS(const DecoratedTree& tree);

/// Deletes the leaves and moves their labels, plus one, onto their parents.
/// Throws NotInRS.
StickyTree contract(const DecoratedTree& tree);

/// Inverse of contract: a leaf is added as the first child of every node.
DecoratedTree expand(const StickyTree& tree);

/// All internal nodes primary.
bool is_synchronized_sticky(const StickyTree& tree);

/// Drops the internal labels and lowers leaf labels by one. Throws
/// NotSynchronizedTree.
DecoratedTree sync_sticky_to_decorated(const StickyTree& tree);

/// Inverse of sync_sticky_to_decorated on its image: internal nodes get their
/// depth, leaves their label plus one. Throws NotSynchronizedTree when the
/// result is not a sticky tree.
StickyTree sync_decorated_to_sticky(const DecoratedTree& tree);

} // namespace sticky
