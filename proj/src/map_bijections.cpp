#include "sticky/map_bijections.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <utility>

namespace sticky {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// Reverses every child list, renumbers into prefix order and validates.
StickyTree finish_tree(std::vector<std::vector<NodeId>> kids, const std::vector<Label>& label,
                       std::vector<NodeId>* old_to_new) {
    for (auto& k : kids) {
        std::reverse(k.begin(), k.end());
    }
    auto [shape, renum] = PlaneTree::from_children(0, kids);
    std::vector<Label> labels(label.size());
    for (NodeId x = 0; x < label.size(); ++x) {
        labels[renum[x]] = label[x];
    }
    if (auto bad = StickyTree::check(shape, labels)) {
        throw InternalError("exploration produced a non-sticky tree: " + bad->message());
    }
    if (old_to_new) {
        *old_to_new = renum;
    }
    return StickyTree::validate(std::move(shape), std::move(labels));
}

Dart down_dart(NodeId x) { return static_cast<Dart>(2 * (x - 1)); }
Dart up_dart(NodeId x) { return static_cast<Dart>(2 * (x - 1) + 1); }

} // namespace

StickyTree map_to_sticky(const RootedMap& m, ExplorationTrace* trace) {
    if (!is_planar(m)) {
        throw NotPlanar("map has genus > 0 (Euler characteristic "
                        + std::to_string(m.euler_characteristic()) + ")");
    }
    if (m.empty()) {
        if (trace) {
            *trace = {};
            trace->discovered_by = { kNoDart };
            trace->first_visit = { true };
        }
        return StickyTree();
    }
    if (auto br = bridges(m); !br.empty()) {
        throw NotBridgeless(br.front());
    }

    std::vector<NodeId> parent { kNone };
    std::vector<std::size_t> vertex { m.vertex(m.root()) };
    std::vector<Dart> via { kNoDart };
    std::vector<std::vector<NodeId>> kids(1);
    std::vector<bool> visited(m.dart_count(), false);

    std::function<void(Dart, NodeId)> explore = [&](Dart h, NodeId up) {
        visited[h] = visited[m.alpha(h)] = true;
        const NodeId x = parent.size();
        parent.push_back(up);
        vertex.push_back(m.vertex(m.alpha(h)));
        via.push_back(h);
        kids.emplace_back();
        kids[up].push_back(x);
        for (Dart g = m.sigma(m.alpha(h)); !visited[g]; g = m.sigma(g)) {
            explore(g, x);
        }
    };
    for (Dart h = m.root(); !visited[h]; h = m.sigma(h)) {
        explore(h, 0);
    }

    // Node indices are exploration times, so a forward sweep sees first visits first.
    std::vector<std::size_t> depth(parent.size(), 0);
    std::vector<Label> label(parent.size(), 0);
    std::vector<bool> first(parent.size(), false);
    std::map<std::size_t, Label> seen;
    for (NodeId x = 0; x < parent.size(); ++x) {
        depth[x] = x == 0 ? 0 : depth[parent[x]] + 1;
        auto [it, fresh] = seen.emplace(vertex[x], depth[x]);
        label[x] = it->second;
        first[x] = fresh;
    }

    std::vector<NodeId> renum;
    StickyTree out = finish_tree(std::move(kids), label, &renum);
    if (trace) {
        *trace = {};
        trace->visit_order.assign(via.begin() + 1, via.end());
        trace->discovered_by.resize(via.size());
        trace->first_visit.resize(via.size());
        for (NodeId x = 0; x < via.size(); ++x) {
            trace->discovered_by[renum[x]] = via[x];
            trace->first_visit[renum[x]] = first[x];
        }
    }
    return out;
}

RootedMap sticky_to_map(const StickyTree& s, ExplorationTrace* trace) {
    const PlaneTree& t = s.shape();
    const std::size_t n = t.edge_count();
    if (trace) {
        *trace = {};
    }
    if (n == 0) {
        if (trace) {
            trace->glue_order = { 0 };
        }
        return RootedMap();
    }
    auto plug = [n](NodeId x) { return static_cast<Dart>(2 * n + x); };
    const std::size_t total = 2 * n + t.size();

    // Edge darts of x: D (at the parent) and U (at x). Every node also gets a
    // plug, a fixed point of alpha sitting just before U in clockwise order.
    std::vector<std::vector<Dart>> block(t.size());
    for (NodeId x = 0; x < t.size(); ++x) {
        if (x > 0) {
            block[x].push_back(up_dart(x));
        }
        auto ch = t.children(x);
        for (auto it = ch.rbegin(); it != ch.rend(); ++it) {
            block[x].push_back(down_dart(*it));
        }
    }
    std::vector<Dart> alpha(total), sigma(total);
    for (NodeId x = 1; x < t.size(); ++x) {
        alpha[down_dart(x)] = up_dart(x);
        alpha[up_dart(x)] = down_dart(x);
    }
    auto set_cycle = [&](const std::vector<Dart>& cyc) {
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            sigma[cyc[i]] = cyc[(i + 1) % cyc.size()];
        }
    };
    for (NodeId x = 0; x < t.size(); ++x) {
        alpha[plug(x)] = plug(x);
        std::vector<Dart> cyc { plug(x) };
        cyc.insert(cyc.end(), block[x].begin(), block[x].end());
        set_cycle(cyc);
    }

    std::vector<std::vector<NodeId>> group(t.size());
    for (NodeId x = 0; x < t.size(); ++x) {
        group[t.ancestor_at_depth(x, s.label(x))].push_back(x);
    }
    std::vector<NodeId> reps;
    for (NodeId y = 0; y < t.size(); ++y) {
        if (!group[y].empty()) {
            reps.push_back(y);
        }
    }
    std::stable_sort(reps.begin(), reps.end(),
                     [&](NodeId a, NodeId b) { return t.depth(a) < t.depth(b); });

    for (NodeId y : reps) {
        const auto& g = group[y];
        if (g.size() > 1) {
            std::vector<bool> on_face(total, false);
            Dart h = plug(g.front());
            do {
                on_face[h] = true;
                h = alpha[sigma[h]];
            } while (h != plug(g.front()));
            for (NodeId w : g) {
                if (!on_face[plug(w)]) {
                    throw InternalError("plugs of node " + std::to_string(w) + " and node "
                                        + std::to_string(g.front()) + " are on different faces");
                }
            }
        }
        std::vector<Dart> merged;
        for (NodeId w : g) {
            merged.insert(merged.end(), block[w].begin(), block[w].end());
        }
        set_cycle(merged);
    }
    if (trace) {
        trace->glue_order = reps;
    }

    alpha.resize(2 * n);
    sigma.resize(2 * n);
    return RootedMap(std::move(alpha), std::move(sigma), down_dart(t.children(0).back()));
}

StickyTree core_to_sticky(const CoreMap& c, ExplorationTrace* trace) {
    const RootedMap& m = c.map;
    if (trace) {
        *trace = {};
    }
    if (m.empty()) {
        if (trace) {
            trace->discovered_by = { kNoDart };
            trace->first_visit = { true };
        }
        return StickyTree();
    }
    const std::size_t nd = m.dart_count();
    std::vector<bool> dead(nd, false), tree(nd, false);
    std::vector<std::size_t> label(m.vertex_count(), kNone);
    for (auto v : c.left_boundary) {
        label[v] = 0;
    }
    std::vector<EdgeId> removed;

    auto other = [&](Dart h) { return m.vertex(m.alpha(h)); };
    auto next_cw = [&](Dart h) {
        Dart g = m.sigma(h);
        while (dead[g]) {
            g = m.sigma(g);
        }
        return g;
    };
    auto next_ccw = [&](Dart h) {
        Dart g = m.sigma_inv(h);
        while (dead[g]) {
            g = m.sigma_inv(g);
        }
        return g;
    };
    auto kill = [&](Dart h) {
        dead[h] = dead[m.alpha(h)] = true;
        removed.push_back(std::min(h, m.alpha(h)));
    };
    auto same_edge = [&](Dart a, Dart b) { return a == b || a == m.alpha(b); };
    // True when the endpoints of e are disconnected once e and f are ignored.
    auto is_bridge_without = [&](Dart e, Dart f) {
        std::vector<bool> seen(m.vertex_count(), false);
        seen[m.vertex(e)] = true;
        const auto target = other(e);
        std::vector<std::size_t> todo { m.vertex(e) };
        std::vector<std::vector<Dart>> at(m.vertex_count());
        for (Dart h = 0; h < nd; ++h) {
            if (!dead[h] && !same_edge(h, e) && !same_edge(h, f)) {
                at[m.vertex(h)].push_back(h);
            }
        }
        while (!todo.empty()) {
            const auto v = todo.back();
            todo.pop_back();
            for (Dart h : at[v]) {
                const auto w = other(h);
                if (!seen[w]) {
                    seen[w] = true;
                    todo.push_back(w);
                }
            }
        }
        return !seen[target];
    };

    std::vector<std::size_t> node_vertex { c.apex };
    std::vector<Dart> via { kNoDart };
    std::vector<std::vector<NodeId>> kids(1);

    std::function<void(NodeId, Dart, Dart, std::size_t)> explore = [&](NodeId x, Dart start,
                                                                       Dart parent_dart,
                                                                       std::size_t depth) {
        Dart h = start;
        while (h != parent_dart && !tree[h]) {
            const Dart e = h;
            const auto y = other(e);
            Dart ep = e;
            if (label[y] == kNone) {
                label[y] = depth + 1;
                Dart g = next_cw(e);
                while (label[other(g)] == kNone) {
                    label[other(g)] = depth + 1;
                    const Dart nxt = next_cw(g);
                    kill(g);
                    g = nxt;
                }
                ep = g;
            }
            // Around u′ = other(ep), delete counter-clockwise from e′ until e is a bridge.
            Dart k = next_ccw(m.alpha(ep));
            while (!is_bridge_without(e, ep)) {
                if (tree[k] || same_edge(k, e) || same_edge(k, ep)) {
                    throw InternalError("edge deletion cannot isolate edge "
                                        + std::to_string(std::min(e, m.alpha(e)) + 1));
                }
                const Dart nxt = next_ccw(k);
                kill(k);
                k = nxt;
            }
            if (!same_edge(ep, e)) {
                kill(ep);
            }
            tree[e] = tree[m.alpha(e)] = true;
            if (label[y] > depth + 1) {
                throw InternalError("lead vertex label exceeds its exploration depth");
            }
            const NodeId yn = node_vertex.size();
            node_vertex.push_back(y);
            via.push_back(e);
            kids.emplace_back();
            kids[x].push_back(yn);
            explore(yn, next_cw(m.alpha(e)), m.alpha(e), depth + 1);
            h = next_cw(e);
        }
    };
    explore(0, m.root(), kNoDart, 0);

    if (node_vertex.size() != m.vertex_count()) {
        throw InternalError("exploration reached " + std::to_string(node_vertex.size()) + " of "
                            + std::to_string(m.vertex_count()) + " core vertices");
    }
    std::vector<Label> node_label(node_vertex.size());
    for (NodeId x = 0; x < node_vertex.size(); ++x) {
        node_label[x] = label[node_vertex[x]];
    }
    std::vector<NodeId> renum;
    StickyTree out = finish_tree(std::move(kids), node_label, &renum);
    if (trace) {
        trace->visit_order.assign(via.begin() + 1, via.end());
        trace->removed_edges = removed;
        trace->discovered_by.resize(via.size());
        trace->first_visit.assign(via.size(), true);
        for (NodeId x = 0; x < via.size(); ++x) {
            trace->discovered_by[renum[x]] = via[x];
        }
    }
    return out;
}

StickyTree triangulation_to_sticky(const RootedMap& t, ExplorationTrace* trace) {
    return core_to_sticky(core(t), trace);
}

CoreMap sticky_to_core(const StickyTree& s, ExplorationTrace* trace) {
    const PlaneTree& t = s.shape();
    const std::size_t n = t.edge_count();
    if (trace) {
        *trace = {};
    }
    if (n == 0) {
        return CoreMap::from_rooted(RootedMap(), 0);
    }

    // Contour positions of the corners: corner j of x sits after its j-th child.
    const std::size_t L = 2 * n + 1;
    std::vector<std::vector<std::size_t>> pos(t.size());
    std::size_t clock = 0;
    std::function<void(NodeId)> walk = [&](NodeId x) {
        pos[x].push_back(clock++);
        for (NodeId c : t.children(x)) {
            walk(c);
            pos[x].push_back(clock++);
        }
    };
    walk(0);

    // corner[x][j] holds (contour distance, dart) for chords leaving that corner.
    std::vector<std::vector<std::vector<std::pair<std::size_t, Dart>>>> corner(t.size());
    for (NodeId x = 0; x < t.size(); ++x) {
        corner[x].resize(pos[x].size());
    }
    std::vector<Dart> alpha(2 * n);
    for (NodeId x = 1; x < t.size(); ++x) {
        alpha[down_dart(x)] = up_dart(x);
        alpha[up_dart(x)] = down_dart(x);
    }
    auto chord = [&](NodeId x, std::size_t jx, NodeId y, std::size_t jy) {
        const Dart a = static_cast<Dart>(alpha.size());
        alpha.push_back(a + 1);
        alpha.push_back(a);
        const std::size_t p = pos[x][jx], q = pos[y][jy];
        corner[x][jx].emplace_back((q + L - p) % L, a);
        corner[y][jy].emplace_back((p + L - q) % L, a + 1);
        if (trace) {
            trace->added_edges.push_back(a);
        }
    };

    for (NodeId v = 1; v < t.size(); ++v) {
        const NodeId u = *t.parent(v);
        const auto sibs = t.children(u);
        const std::size_t j = static_cast<std::size_t>(std::find(sibs.begin(), sibs.end(), v) - sibs.begin()) + 1;
        const std::size_t d = t.depth(v);
        NodeId src = v;
        if (s.is_primary(v)) {
            src = s.certificate(v);
            for (NodeId w = v + 1; w < t.subtree_end(v); ++w) {
                if (s.label(w) == d) {
                    chord(u, j - 1, w, 0);
                }
            }
            chord(u, j - 1, src, 0);
        }
        if (j > 1) {
            for (NodeId x = sibs[j - 2];; x = t.children(x).back()) {
                chord(src, 0, x, pos[x].size() - 1);
                if (t.is_leaf(x)) {
                    break;
                }
            }
        }
    }

    std::vector<std::vector<Dart>> rotations(t.size());
    for (NodeId x = 0; x < t.size(); ++x) {
        for (auto& cc : corner[x]) {
            std::sort(cc.begin(), cc.end());
        }
        auto& r = rotations[x];
        auto add_corner = [&](std::size_t j) {
            for (const auto& [dist, dart] : corner[x][j]) {
                r.push_back(dart);
            }
        };
        const auto ch = t.children(x);
        const std::size_t k = ch.size();
        if (x > 0) {
            r.push_back(up_dart(x));
            add_corner(k);
        }
        for (std::size_t i = k; i >= 1; --i) {
            r.push_back(down_dart(ch[i - 1]));
            add_corner(i - 1);
        }
        if (x == 0) {
            add_corner(k);
        }
    }
    RootedMap m = map_from_rotations(rotations, alpha, down_dart(t.children(0).back()));
    if (!is_planar(m)) {
        throw InternalError("reconstructed core is not planar");
    }
    const auto base = m.vertex(up_dart(t.size() - 1));
    try {
        return CoreMap::from_rooted(std::move(m), base);
    } catch (const InvalidCore& e) {
        throw InternalError(std::string("reconstructed core is malformed: ") + e.what());
    }
}

RootedMap sticky_to_triangulation(const StickyTree& s, ExplorationTrace* trace) {
    RootedMap out = close_core(sticky_to_core(s, trace));
    if (!is_triangulation(out)) {
        throw InternalError("reconstruction is not a simple triangulation");
    }
    return out;
}

} // namespace sticky
