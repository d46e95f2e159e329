#include "sticky/plane_tree.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace sticky {

PlaneTree::PlaneTree()
    : parent_ { std::nullopt }
    , children_(1)
    , depth_ { 0 }
    , end_ { 1 } { }

PlaneTree PlaneTree::from_parents(std::span<const std::optional<NodeId>> parents) {
    if (parents.empty()) {
        throw InvalidTree("tree must have a root");
    }
    if (parents[0].has_value()) {
        throw InvalidTree("node 0 must be the root");
    }
    PlaneTree t;
    t.parent_.assign(parents.begin(), parents.end());
    t.children_.assign(parents.size(), {});
    t.depth_.assign(parents.size(), 0);
    t.end_.assign(parents.size(), 0);

    std::vector<NodeId> path { 0 };
    for (NodeId v = 1; v < parents.size(); ++v) {
        if (!parents[v]) {
            throw InvalidTree("node " + std::to_string(v) + " has no parent");
        }
        const NodeId p = *parents[v];
        while (!path.empty() && path.back() != p) {
            t.end_[path.back()] = v;
            path.pop_back();
        }
        if (path.empty()) {
            throw InvalidTree("node " + std::to_string(v) + " breaks prefix order (parent "
                              + std::to_string(p) + ")");
        }
        t.children_[p].push_back(v);
        t.depth_[v] = t.depth_[p] + 1;
        path.push_back(v);
    }
    for (NodeId v : path) {
        t.end_[v] = parents.size();
    }
    return t;
}

std::pair<PlaneTree, std::vector<NodeId>>
PlaneTree::from_children(NodeId root, const std::vector<std::vector<NodeId>>& children) {
    std::vector<NodeId> renumber(children.size(), children.size());
    std::vector<std::optional<NodeId>> parents;
    parents.reserve(children.size());

    // Iterative prefix walk.
    std::vector<std::pair<NodeId, std::optional<NodeId>>> stack { { root, std::nullopt } };
    while (!stack.empty()) {
        auto [v, p] = stack.back();
        stack.pop_back();
        if (renumber[v] != children.size()) {
            throw InvalidTree("child lists do not form a tree");
        }
        renumber[v] = parents.size();
        parents.push_back(p ? std::optional<NodeId>(renumber[*p]) : std::nullopt);
        const auto& cs = children[v];
        for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
            stack.emplace_back(*it, v);
        }
    }
    if (parents.size() != children.size()) {
        throw InvalidTree("child lists leave nodes unreachable from the root");
    }
    return { from_parents(parents), std::move(renumber) };
}

void PlaneTree::check(NodeId v) const {
    if (v >= parent_.size()) {
        throw std::out_of_range("unknown node id " + std::to_string(v));
    }
}

std::optional<NodeId> PlaneTree::parent(NodeId v) const {
    check(v);
    return parent_[v];
}

std::span<const NodeId> PlaneTree::children(NodeId v) const {
    check(v);
    return children_[v];
}

std::size_t PlaneTree::depth(NodeId v) const {
    check(v);
    return depth_[v];
}

NodeId PlaneTree::subtree_end(NodeId v) const {
    check(v);
    return end_[v];
}

NodeId PlaneTree::ancestor_at_depth(NodeId v, std::size_t d) const {
    check(v);
    if (d > depth_[v]) {
        throw std::out_of_range("ancestor depth exceeds node depth");
    }
    while (depth_[v] > d) {
        v = *parent_[v];
    }
    return v;
}

std::vector<std::optional<NodeId>> PlaneTree::parents() const {
    return parent_;
}

std::pair<PlaneTree, std::vector<NodeId>> PlaneTree::mirrored() const {
    auto reversed = children_;
    for (auto& cs : reversed) {
        std::reverse(cs.begin(), cs.end());
    }
    return from_children(0, reversed);
}

PlaneTree PlaneTree::subtree(NodeId v) const {
    check(v);
    std::vector<std::optional<NodeId>> parents;
    parents.reserve(end_[v] - v);
    parents.push_back(std::nullopt);
    for (NodeId w = v + 1; w < end_[v]; ++w) {
        parents.push_back(*parent_[w] - v);
    }
    return from_parents(parents);
}

DyckPath contour_word(const PlaneTree& tree) {
    std::vector<bool> steps;
    steps.reserve(2 * tree.edge_count());
    // In prefix order, node v's up step is emitted on arrival; the down steps
    // of every node whose subtree closes before v are emitted first.
    std::vector<NodeId> open;
    for (NodeId v = 1; v < tree.size(); ++v) {
        while (!open.empty() && tree.subtree_end(open.back()) <= v) {
            steps.push_back(false);
            open.pop_back();
        }
        steps.push_back(true);
        open.push_back(v);
    }
    steps.insert(steps.end(), open.size(), false);
    return DyckPath(std::move(steps));
}

PlaneTree tree_from_contour(const DyckPath& word) {
    std::vector<std::optional<NodeId>> parents { std::nullopt };
    std::vector<NodeId> path { 0 };
    for (bool up : word.steps()) {
        if (up) {
            parents.push_back(path.back());
            path.push_back(parents.size() - 1);
        } else {
            path.pop_back();
        }
    }
    return PlaneTree::from_parents(parents);
}

std::vector<PlaneTree> enumerate_plane_trees(std::size_t n) {
    std::vector<PlaneTree> out;
    for (const auto& w : enumerate_dyck_paths(n)) {
        out.push_back(tree_from_contour(w));
    }
    return out;
}

} // namespace sticky
