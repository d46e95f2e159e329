#include "sticky/decorated.hpp"

#include <functional>
#include <stdexcept>

namespace sticky {

std::string DecoratedViolation::message() const {
    std::string msg = "condition " + std::to_string(static_cast<int>(condition)) + "' violated at node "
        + std::to_string(node);
    switch (condition) {
    case DecoratedCondition::LeafSet:
        msg = "node " + std::to_string(node) + ": labels must sit exactly on the non-root leaves";
        break;
    case DecoratedCondition::LabelRange:
        msg += ": leaf label outside [-1, depth of parent - 1]";
        break;
    case DecoratedCondition::Certificate:
        msg += ": no leaf below has a label smaller than its depth minus one";
        break;
    case DecoratedCondition::PrefixGuard:
        msg += ": leaf " + std::to_string(witness.value_or(0)) + " carries the parent depth but leaf "
            + std::to_string(offender.value_or(0)) + " comes earlier with a smaller label";
        break;
    }
    return msg;
}

InvalidDecoratedTree::InvalidDecoratedTree(DecoratedViolation v)
    : Error(v.message())
    , violation_(v) { }

std::optional<DecoratedViolation> DecoratedTree::check(const PlaneTree& t, const LeafLabels& labels) {
    auto leaf = [&](NodeId v) { return v != 0 && t.is_leaf(v); };
    for (const auto& [v, l] : labels) {
        if (v >= t.size() || !leaf(v)) {
            return DecoratedViolation { DecoratedCondition::LeafSet, v, std::nullopt, std::nullopt };
        }
    }
    for (NodeId v = 0; v < t.size(); ++v) {
        if (leaf(v) && !labels.count(v)) {
            return DecoratedViolation { DecoratedCondition::LeafSet, v, std::nullopt, std::nullopt };
        }
    }
    for (const auto& [f, l] : labels) {
        const long d = static_cast<long>(t.depth(f)) - 1;
        if (l < -1 || l > d - 1) {
            return DecoratedViolation { DecoratedCondition::LabelRange, f, std::nullopt, std::nullopt };
        }
    }
    for (NodeId u = 1; u < t.size(); ++u) {
        if (t.is_leaf(u)) {
            continue;
        }
        const long d = static_cast<long>(t.depth(u));
        bool ok = false;
        for (NodeId f = u + 1; f < t.subtree_end(u) && !ok; ++f) {
            ok = leaf(f) && labels.at(f) < d - 1;
        }
        if (!ok) {
            return DecoratedViolation { DecoratedCondition::Certificate, u, std::nullopt, std::nullopt };
        }
    }
    for (NodeId u = 1; u < t.size(); ++u) {
        const long d = static_cast<long>(t.depth(u)) - 1;
        std::optional<NodeId> smallest;
        for (NodeId f = u; f < t.subtree_end(u); ++f) {
            if (!leaf(f)) {
                continue;
            }
            const long l = labels.at(f);
            if (l == d && smallest) {
                return DecoratedViolation { DecoratedCondition::PrefixGuard, u, f, smallest };
            }
            if (l < d && !smallest) {
                smallest = f;
            }
        }
    }
    return std::nullopt;
}

DecoratedTree DecoratedTree::validate(PlaneTree shape, LeafLabels labels) {
    if (auto bad = check(shape, labels)) {
        throw InvalidDecoratedTree(*bad);
    }
    return DecoratedTree(std::move(shape), std::move(labels));
}

NodeId DecoratedTree::certificate(NodeId u) const {
    if (u == 0 || u >= shape_.size() || shape_.is_leaf(u)) {
        throw std::invalid_argument("certificates are defined on internal non-root nodes");
    }
    const long d = static_cast<long>(shape_.depth(u));
    for (NodeId f = u + 1; f < shape_.subtree_end(u); ++f) {
        if (is_leaf(f) && labels_.at(f) < d - 1) {
            return f;
        }
    }
    throw InternalError("decorated tree without certificate at node " + std::to_string(u));
}

std::vector<std::size_t> DecoratedTree::certificate_counts() const {
    std::vector<std::size_t> c(shape_.size(), 0);
    for (NodeId u = 1; u < shape_.size(); ++u) {
        if (!shape_.is_leaf(u)) {
            ++c[certificate(u)];
        }
    }
    return c;
}

bool in_RS(const DecoratedTree& tree) {
    const PlaneTree& t = tree.shape();
    std::size_t internal = 0;
    for (NodeId v = 0; v < t.size(); ++v) {
        if (t.is_leaf(v)) {
            continue;
        }
        ++internal;
        if (!t.is_leaf(t.children(v).front())) {
            return false;
        }
    }
    return internal >= 1 && 2 * internal == t.size();
}

StickyTree contract(const DecoratedTree& tree) {
    if (!in_RS(tree)) {
        throw NotInRS("decorated tree is not in the contractible family");
    }
    const PlaneTree& t = tree.shape();
    std::vector<NodeId> renum(t.size(), 0);
    std::vector<std::optional<NodeId>> parents;
    std::vector<Label> labels;
    for (NodeId v = 0; v < t.size(); ++v) {
        if (t.is_leaf(v)) {
            continue;
        }
        renum[v] = parents.size();
        parents.push_back(v == 0 ? std::nullopt : std::optional<NodeId>(renum[*t.parent(v)]));
        labels.push_back(static_cast<Label>(tree.label(t.children(v).front()) + 1));
    }
    PlaneTree shape = PlaneTree::from_parents(parents);
    if (auto bad = StickyTree::check(shape, labels)) {
        throw InternalError("contraction broke a sticky condition: " + bad->message());
    }
    return StickyTree::validate(std::move(shape), std::move(labels));
}

DecoratedTree expand(const StickyTree& tree) {
    const PlaneTree& t = tree.shape();
    std::vector<std::optional<NodeId>> parents;
    LeafLabels labels;
    std::function<void(NodeId, std::optional<NodeId>)> emit = [&](NodeId v, std::optional<NodeId> up) {
        const NodeId me = parents.size();
        parents.push_back(up);
        labels[parents.size()] = static_cast<long>(tree.label(v)) - 1;
        parents.push_back(me);
        for (NodeId c : t.children(v)) {
            emit(c, me);
        }
    };
    emit(0, std::nullopt);
    PlaneTree shape = PlaneTree::from_parents(parents);
    if (auto bad = DecoratedTree::check(shape, labels)) {
        throw InternalError("expansion broke a decorated condition: " + bad->message());
    }
    return DecoratedTree::validate(std::move(shape), std::move(labels));
}

bool is_synchronized_sticky(const StickyTree& tree) {
    for (NodeId v = 1; v < tree.shape().size(); ++v) {
        if (!tree.shape().is_leaf(v) && !tree.is_primary(v)) {
            return false;
        }
    }
    return true;
}

DecoratedTree sync_sticky_to_decorated(const StickyTree& tree) {
    if (!is_synchronized_sticky(tree)) {
        throw NotSynchronizedTree("sticky tree has a derived internal node");
    }
    LeafLabels labels;
    for (NodeId v = 1; v < tree.shape().size(); ++v) {
        if (tree.shape().is_leaf(v)) {
            labels[v] = static_cast<long>(tree.label(v)) - 1;
        }
    }
    if (auto bad = DecoratedTree::check(tree.shape(), labels)) {
        throw InternalError("synchronized tree maps outside decorated trees: " + bad->message());
    }
    return DecoratedTree::validate(tree.shape(), std::move(labels));
}

StickyTree sync_decorated_to_sticky(const DecoratedTree& tree) {
    const PlaneTree& t = tree.shape();
    std::vector<Label> labels(t.size(), 0);
    for (NodeId v = 1; v < t.size(); ++v) {
        labels[v] = tree.is_leaf(v) ? static_cast<Label>(tree.label(v) + 1) : t.depth(v);
    }
    if (auto bad = StickyTree::check(t, labels)) {
        throw NotSynchronizedTree("decorated tree has no synchronized sticky preimage: " + bad->message());
    }
    return StickyTree::validate(t, std::move(labels));
}

} // namespace sticky
