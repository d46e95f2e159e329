#pragma once

#include "sticky/errors.hpp"
#include "sticky/plane_tree.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace sticky {

using Label = std::size_t;

/// Which of the three labeling conditions a tree breaks.
enum class StickyCondition {
    LabelRange = 1,      ///< 0 <= label(u) <= depth(u)
    Certificate = 2,     ///< some subtree node of u has label < depth(u)
    PrefixGuard = 3,     ///< nodes before a label-d node in S_u all have label >= d
};

struct StickyViolation {
    StickyCondition condition;
    NodeId node;                    ///< the node u the condition is stated for
    std::optional<NodeId> witness;  ///< for PrefixGuard: the node v with label depth(u)
    std::optional<NodeId> offender; ///< for PrefixGuard: an earlier node with smaller label

    std::string message() const;
};

class InvalidStickyTree : public Error {
public:
    explicit InvalidStickyTree(StickyViolation v);
    const StickyViolation& violation() const { return violation_; }

private:
    StickyViolation violation_;
};

/// The counts passed to recover_labels are not the certificate counts of any
/// sticky tree with that shape.
class InconsistentCounts : public Error {
public:
    InconsistentCounts(const std::string& what, NodeId node)
        : Error(what + " (node " + std::to_string(node) + ")")
        , node_(node) { }
    NodeId node() const { return node_; }

private:
    NodeId node_;
};

enum class NodeKind { Root, Primary, Derived };

/// A plane tree with node labels satisfying the three sticky conditions.
class StickyTree {
public:
    /// The single-node tree with label 0.
    StickyTree();

    /// Throws InvalidStickyTree naming the broken condition and witnesses.
    static StickyTree validate(PlaneTree shape, std::vector<Label> labels);

    /// Non-throwing variant of validate.
    static std::optional<StickyViolation> check(const PlaneTree& shape,
                                                const std::vector<Label>& labels);

    const PlaneTree& shape() const { return shape_; }
    const std::vector<Label>& labels() const { return labels_; }
    Label label(NodeId v) const { return labels_.at(v); }
    std::size_t edge_count() const { return shape_.edge_count(); }

    NodeKind classify(NodeId v) const;
    bool is_primary(NodeId v) const { return classify(v) == NodeKind::Primary; }
    std::size_t primary_count() const;

    /// First node in prefix order within the subtree of v whose label is
    /// smaller than depth(v). Throws std::invalid_argument for the root.
    NodeId certificate(NodeId v) const;

    /// c(v) = number of nodes whose certificate is v; c(root) = 0.
    std::vector<std::size_t> certificate_counts() const;

    /// Number of edges on the path that always takes the first (resp. last) child.
    std::size_t leftmost_branch_length() const;
    std::size_t rightmost_branch_length() const;

    friend bool operator==(const StickyTree&, const StickyTree&) = default;

private:
    StickyTree(PlaneTree shape, std::vector<Label> labels)
        : shape_(std::move(shape))
        , labels_(std::move(labels)) { }

    PlaneTree shape_;
    std::vector<Label> labels_;
};

/// The unique sticky tree with this shape whose certificate counts equal
/// `counts` (entry 0, the root, is ignored). Throws InconsistentCounts when
/// no such tree exists.
StickyTree recover_labels(const PlaneTree& shape, const std::vector<std::size_t>& counts);

/// Calls `visit` on every sticky tree with n edges, exactly once each.
void for_each_sticky(std::size_t n, const std::function<void(const StickyTree&)>& visit);

std::vector<StickyTree> enumerate_sticky(std::size_t n);

} // namespace sticky
