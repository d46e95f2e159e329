#pragma once

#include "sticky/planar_map.hpp"
#include "sticky/sticky_tree.hpp"
#include "sticky/triangulation.hpp"

#include <limits>
#include <vector>

namespace sticky {

class NotPlanar : public Error {
public:
    using Error::Error;
};

class NotBridgeless : public Error {
public:
    explicit NotBridgeless(EdgeId e)
        : Error("map has a bridge at edge " + std::to_string(e + 1))
        , edge_(e) { }
    EdgeId edge() const { return edge_; }

private:
    EdgeId edge_;
};

constexpr Dart kNoDart = std::numeric_limits<Dart>::max();

/// Optional record of what a transformation did, for debugging and replay.
/// Node indices are prefix indices of the resulting (or input) tree.
struct ExplorationTrace {
    std::vector<Dart> visit_order;     ///< darts in the order they became tree edges
    std::vector<Dart> discovered_by;   ///< per node, the dart that reached it (kNoDart at the root)
    std::vector<bool> first_visit;     ///< per node, whether its vertex was new
    std::vector<EdgeId> removed_edges; ///< edges deleted by P, in order
    std::vector<EdgeId> added_edges;   ///< edges added by Q on top of the tree
    std::vector<NodeId> glue_order;    ///< R: the node owning each glued vertex, in order
};

/// Depth-first edge exploration of a bridgeless planar map (S).
/// Throws NotPlanar or NotBridgeless.
StickyTree map_to_sticky(const RootedMap& map, ExplorationTrace* trace = nullptr);

/// Plug gluing (R), inverse of map_to_sticky.
RootedMap sticky_to_map(const StickyTree& tree, ExplorationTrace* trace = nullptr);

/// Exploration with edge deletion on the core (P). Throws NotTriangulation.
StickyTree triangulation_to_sticky(const RootedMap& triangulation, ExplorationTrace* trace = nullptr);
StickyTree core_to_sticky(const CoreMap& core, ExplorationTrace* trace = nullptr);

/// Tree plus type-A and type-B chords (Q′), closed into a triangulation (Q).
CoreMap sticky_to_core(const StickyTree& tree, ExplorationTrace* trace = nullptr);
RootedMap sticky_to_triangulation(const StickyTree& tree, ExplorationTrace* trace = nullptr);

} // namespace sticky
