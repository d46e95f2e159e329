#include "sticky/flows.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace sticky {

std::size_t ForestFlow::node_count() const {
    std::size_t k = 0;
    for (const auto& t : forest) {
        k += t.size();
    }
    return k;
}

std::vector<long> outgoing_rates(const PlaneTree& tree, const std::vector<long>& inputs) {
    std::vector<long> rate(inputs);
    for (NodeId v = tree.size(); v-- > 1;) {
        rate[*tree.parent(v)] += rate[v];
    }
    return rate;
}

ForestFlow validate_closed_flow(std::vector<PlaneTree> forest, std::vector<std::vector<long>> inputs) {
    if (forest.size() != inputs.size()) {
        throw InvalidFlow(FlowViolation::Shape, 0, 0,
                          std::to_string(forest.size()) + " trees but " + std::to_string(inputs.size())
                              + " input lists");
    }
    for (std::size_t i = 0; i < forest.size(); ++i) {
        if (forest[i].size() != inputs[i].size()) {
            throw InvalidFlow(FlowViolation::Shape, i, 0,
                              "tree " + std::to_string(i) + " has " + std::to_string(forest[i].size())
                                  + " nodes but " + std::to_string(inputs[i].size()) + " inputs");
        }
        for (NodeId v = 0; v < inputs[i].size(); ++v) {
            if (inputs[i][v] < -1) {
                throw InvalidFlow(FlowViolation::InputBelow, i, v,
                                  "input " + std::to_string(inputs[i][v]) + " below -1 at tree "
                                      + std::to_string(i) + " node " + std::to_string(v));
            }
        }
        const auto rate = outgoing_rates(forest[i], inputs[i]);
        for (NodeId v = 1; v < rate.size(); ++v) {
            if (rate[v] < 0) {
                throw InvalidFlow(FlowViolation::NegativeRate, i, v,
                                  "negative outgoing rate at tree " + std::to_string(i) + " node "
                                      + std::to_string(v));
            }
        }
        if (rate[0] != 0) {
            throw InvalidFlow(FlowViolation::OpenRoot, i, 0,
                              "root of tree " + std::to_string(i) + " has outgoing rate "
                                  + std::to_string(rate[0]));
        }
    }
    return ForestFlow { std::move(forest), std::move(inputs) };
}

ForestFlow sticky_to_flow(const StickyTree& tree) {
    const PlaneTree& t = tree.shape();
    const auto c = tree.certificate_counts();
    ForestFlow out;
    for (NodeId r : t.children(0)) {
        out.forest.push_back(t.subtree(r));
        auto& in = out.inputs.emplace_back();
        for (NodeId v = r; v < t.subtree_end(r); ++v) {
            in.push_back(static_cast<long>(c[v]) - 1);
        }
    }
    return out;
}

StickyTree flow_to_sticky(const ForestFlow& flow) {
    const ForestFlow f = validate_closed_flow(flow.forest, flow.inputs);
    std::vector<std::optional<NodeId>> parents { std::nullopt };
    std::vector<std::size_t> counts { 0 };
    for (std::size_t i = 0; i < f.forest.size(); ++i) {
        const NodeId offset = parents.size();
        const auto& t = f.forest[i];
        for (NodeId v = 0; v < t.size(); ++v) {
            parents.push_back(v == 0 ? 0 : *t.parent(v) + offset);
            counts.push_back(static_cast<std::size_t>(f.inputs[i][v] + 1));
        }
    }
    return recover_labels(PlaneTree::from_parents(parents), counts);
}

std::vector<PlaneTree> forest_of_dyck(const DyckPath& path) {
    const PlaneTree t = tree_from_contour(path);
    std::vector<PlaneTree> out;
    for (NodeId r : t.children(0)) {
        out.push_back(t.subtree(r));
    }
    return out;
}

namespace {

std::uint64_t count_tree(const PlaneTree& t) {
    std::vector<NodeId> post;
    std::function<void(NodeId)> walk = [&](NodeId v) {
        for (NodeId c : t.children(v)) {
            walk(c);
        }
        post.push_back(v);
    };
    walk(0);

    std::vector<long> rate(t.size(), 0);
    std::uint64_t count = 0;
    std::function<void(std::size_t, long)> assign = [&](std::size_t i, long total) {
        const NodeId v = post[i];
        long below = 0;
        for (NodeId c : t.children(v)) {
            below += rate[c];
        }
        if (v == 0) {
            // The root closes the tree: its input is forced to -total.
            count += total <= 1 ? 1 : 0;
            return;
        }
        const long remaining = static_cast<long>(post.size() - i - 1);
        for (long f = std::max(-1L, -below); f <= remaining - total; ++f) {
            rate[v] = below + f;
            assign(i + 1, total + f);
        }
    };
    assign(0, 0);
    return count;
}

} // namespace

std::uint64_t count_closed_flows(const std::vector<PlaneTree>& forest) {
    std::size_t nodes = 0;
    for (const auto& t : forest) {
        nodes += t.size();
    }
    if (nodes > kFlowCountCap) {
        throw SizeCapExceeded("count_closed_flows", nodes, kFlowCountCap);
    }
    std::uint64_t total = 1;
    for (const auto& t : forest) {
        total *= count_tree(t);
    }
    return total;
}

ForestFlow mirror_flow(const ForestFlow& flow) {
    ForestFlow out;
    for (std::size_t i = flow.forest.size(); i-- > 0;) {
        auto [tree, renum] = flow.forest[i].mirrored();
        std::vector<long> in(flow.inputs[i].size());
        for (NodeId v = 0; v < in.size(); ++v) {
            in[renum[v]] = flow.inputs[i][v];
        }
        out.forest.push_back(std::move(tree));
        out.inputs.push_back(std::move(in));
    }
    return out;
}

} // namespace sticky
