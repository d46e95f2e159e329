#pragma once

#include "sticky/dyck_path.hpp"
#include "sticky/plane_tree.hpp"
#include "sticky/sticky_tree.hpp"

#include <cstdint>
#include <vector>

namespace sticky {

enum class FlowViolation {
    Shape = 0,        ///< inputs do not match the forest
    InputBelow = 1,   ///< some input is below -1
    NegativeRate = 2, ///< some subtree sum is negative
    OpenRoot = 3,     ///< some root has a nonzero outgoing rate
};

class InvalidFlow : public Error {
public:
    InvalidFlow(FlowViolation kind, std::size_t tree, NodeId node, const std::string& what)
        : Error(what)
        , kind_(kind)
        , tree_(tree)
        , node_(node) { }
    FlowViolation kind() const { return kind_; }
    std::size_t tree() const { return tree_; }
    NodeId node() const { return node_; }

private:
    FlowViolation kind_;
    std::size_t tree_;
    NodeId node_;
};

/// An ordered forest with one integer input per node, in prefix order per tree.
struct ForestFlow {
    std::vector<PlaneTree> forest;
    std::vector<std::vector<long>> inputs;

    std::size_t node_count() const;

    friend bool operator==(const ForestFlow&, const ForestFlow&) = default;
};

/// Subtree sums of the inputs (the outgoing rate of every node).
std::vector<long> outgoing_rates(const PlaneTree& tree, const std::vector<long>& inputs);

/// Throws InvalidFlow unless every input is >= -1, every rate >= 0 and every
/// root rate is 0.
ForestFlow validate_closed_flow(std::vector<PlaneTree> forest, std::vector<std::vector<long>> inputs);

/// Forest of the root's subtrees with input c(v) - 1.
ForestFlow sticky_to_flow(const StickyTree& tree);
StickyTree flow_to_sticky(const ForestFlow& flow);

/// The plane tree of the contour word with its root removed.
std::vector<PlaneTree> forest_of_dyck(const DyckPath& path);

/// Exhaustive count of closed flows. Throws SizeCapExceeded above 12 nodes.
std::uint64_t count_closed_flows(const std::vector<PlaneTree>& forest);
constexpr std::size_t kFlowCountCap = 12;

/// Reverses the order of the trees and of every child list.
ForestFlow mirror_flow(const ForestFlow& flow);

} // namespace sticky
