#include "sticky/sticky_tree.hpp"

#include <stdexcept>

namespace sticky {

std::string StickyViolation::message() const {
    std::string msg = "condition " + std::to_string(static_cast<int>(condition)) + " violated at node "
        + std::to_string(node);
    switch (condition) {
    case StickyCondition::LabelRange:
        msg += ": label exceeds depth";
        break;
    case StickyCondition::Certificate:
        msg += ": no node in its subtree has a label below its depth";
        break;
    case StickyCondition::PrefixGuard:
        msg += ": node " + std::to_string(witness.value_or(0)) + " carries its depth as label but node "
            + std::to_string(offender.value_or(0)) + " comes earlier with a smaller label";
        break;
    }
    return msg;
}

InvalidStickyTree::InvalidStickyTree(StickyViolation v)
    : Error(v.message())
    , violation_(v) { }

StickyTree::StickyTree()
    : labels_ { 0 } { }

std::optional<StickyViolation> StickyTree::check(const PlaneTree& shape,
                                                 const std::vector<Label>& labels) {
    if (labels.size() != shape.size()) {
        throw InvalidTree("expected " + std::to_string(shape.size()) + " labels, got "
                          + std::to_string(labels.size()));
    }
    for (NodeId v = 0; v < shape.size(); ++v) {
        if (labels[v] > shape.depth(v)) {
            return StickyViolation { StickyCondition::LabelRange, v, std::nullopt, std::nullopt };
        }
    }

    // path[k] is the ancestor at depth k of the current node; certified[k]
    // records whether a label smaller than k was already seen below it.
    std::vector<NodeId> path;
    std::vector<bool> certified;
    auto close_until = [&](NodeId v) -> std::optional<StickyViolation> {
        while (!path.empty() && shape.subtree_end(path.back()) <= v) {
            if (path.size() > 1 && !certified.back()) {
                return StickyViolation { StickyCondition::Certificate, path.back(), std::nullopt,
                                         std::nullopt };
            }
            path.pop_back();
            certified.pop_back();
        }
        return std::nullopt;
    };

    for (NodeId v = 0; v < shape.size(); ++v) {
        if (auto bad = close_until(v)) {
            return bad;
        }
        path.push_back(v);
        certified.push_back(false);
        const Label d = labels[v];
        if (d > 0 && certified[d]) {
            const NodeId u = path[d];
            NodeId offender = u;
            while (labels[offender] >= d) {
                ++offender;
            }
            return StickyViolation { StickyCondition::PrefixGuard, u, v, offender };
        }
        for (std::size_t k = d + 1; k < path.size(); ++k) {
            certified[k] = true;
        }
    }
    return close_until(shape.size());
}

StickyTree StickyTree::validate(PlaneTree shape, std::vector<Label> labels) {
    if (auto bad = check(shape, labels)) {
        throw InvalidStickyTree(*bad);
    }
    return StickyTree(std::move(shape), std::move(labels));
}

NodeKind StickyTree::classify(NodeId v) const {
    if (v == 0) {
        return NodeKind::Root;
    }
    return labels_.at(v) == shape_.depth(v) ? NodeKind::Primary : NodeKind::Derived;
}

std::size_t StickyTree::primary_count() const {
    std::size_t k = 0;
    for (NodeId v = 1; v < shape_.size(); ++v) {
        k += is_primary(v) ? 1 : 0;
    }
    return k;
}

NodeId StickyTree::certificate(NodeId v) const {
    if (v == 0) {
        throw std::invalid_argument("the root has no certificate");
    }
    const std::size_t d = shape_.depth(v);
    for (NodeId w = v; w < shape_.subtree_end(v); ++w) {
        if (labels_[w] < d) {
            return w;
        }
    }
    throw InternalError("sticky tree without certificate at node " + std::to_string(v));
}

std::vector<std::size_t> StickyTree::certificate_counts() const {
    std::vector<std::size_t> c(shape_.size(), 0);
    for (NodeId v = 1; v < shape_.size(); ++v) {
        ++c[certificate(v)];
    }
    return c;
}

std::size_t StickyTree::leftmost_branch_length() const {
    std::size_t len = 0;
    for (NodeId v = 0; !shape_.is_leaf(v); v = shape_.children(v).front()) {
        ++len;
    }
    return len;
}

std::size_t StickyTree::rightmost_branch_length() const {
    std::size_t len = 0;
    for (NodeId v = 0; !shape_.is_leaf(v); v = shape_.children(v).back()) {
        ++len;
    }
    return len;
}

StickyTree recover_labels(const PlaneTree& shape, const std::vector<std::size_t>& counts) {
    if (counts.size() != shape.size()) {
        throw InvalidTree("expected " + std::to_string(shape.size()) + " counts, got "
                          + std::to_string(counts.size()));
    }
    std::vector<Label> labels(shape.size(), 0);
    // Primary nodes still waiting for their certificate, deepest on top. The
    // stack is always a chain of ancestors of the node being processed.
    std::vector<NodeId> pending;
    for (NodeId v = 1; v < shape.size(); ++v) {
        if (!pending.empty() && !shape.is_ancestor_or_self(pending.back(), v)) {
            throw InconsistentCounts("primary node left its subtree uncertified", pending.back());
        }
        const std::size_t k = counts[v];
        if (k == 0) {
            labels[v] = shape.depth(v);
            pending.push_back(v);
            continue;
        }
        if (pending.size() < k - 1) {
            throw InconsistentCounts("count exceeds the number of pending primary ancestors", v);
        }
        pending.resize(pending.size() - (k - 1));
        labels[v] = pending.empty() ? 0 : shape.depth(pending.back());
    }
    if (!pending.empty()) {
        throw InconsistentCounts("primary node left uncertified", pending.back());
    }

    auto bad = StickyTree::check(shape, labels);
    if (bad) {
        throw InconsistentCounts("recovered labels are not sticky: " + bad->message(), bad->node);
    }
    StickyTree tree = StickyTree::validate(shape, std::move(labels));
    const auto back = tree.certificate_counts();
    for (NodeId v = 1; v < shape.size(); ++v) {
        if (back[v] != counts[v]) {
            throw InconsistentCounts("counts are not realised by any sticky tree", v);
        }
    }
    return tree;
}

namespace {

struct LabelSearch {
    const PlaneTree& shape;
    const std::function<void(const StickyTree&)>& visit;
    std::vector<Label> labels;

    void run(NodeId v, std::vector<NodeId> path, std::vector<bool> certified) {
        while (!path.empty() && shape.subtree_end(path.back()) <= v) {
            if (path.size() > 1 && !certified.back()) {
                return;
            }
            path.pop_back();
            certified.pop_back();
        }
        if (v == shape.size()) {
            visit(StickyTree::validate(shape, labels));
            return;
        }
        path.push_back(v);
        certified.push_back(false);
        const std::size_t depth = shape.depth(v);
        for (Label d = 0; d <= depth; ++d) {
            if (d > 0 && certified[d]) {
                continue;
            }
            labels[v] = d;
            auto next = certified;
            for (std::size_t k = d + 1; k < next.size(); ++k) {
                next[k] = true;
            }
            run(v + 1, path, std::move(next));
        }
    }
};

} // namespace

void for_each_sticky(std::size_t n, const std::function<void(const StickyTree&)>& visit) {
    for (const auto& shape : enumerate_plane_trees(n)) {
        LabelSearch search { shape, visit, std::vector<Label>(shape.size(), 0) };
        search.run(0, {}, {});
    }
}

std::vector<StickyTree> enumerate_sticky(std::size_t n) {
    std::vector<StickyTree> out;
    for_each_sticky(n, [&](const StickyTree& t) { out.push_back(t); });
    return out;
}

} // namespace sticky
