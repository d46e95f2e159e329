#pragma once

#include "sticky/planar_map.hpp"
#include "sticky/plane_tree.hpp"
#include "sticky/sticky_tree.hpp"

#include <optional>
#include <vector>

namespace testing {

inline sticky::PlaneTree tree(std::vector<std::optional<sticky::NodeId>> parents) {
    return sticky::PlaneTree::from_parents(parents);
}

inline sticky::StickyTree sticky_of(std::vector<std::optional<sticky::NodeId>> parents,
                                    std::vector<sticky::Label> labels) {
    return sticky::StickyTree::validate(tree(std::move(parents)), std::move(labels));
}

// root-a-b
inline sticky::StickyTree path(sticky::Label a, sticky::Label b) {
    return sticky_of({ std::nullopt, 0, 1 }, { 0, a, b });
}

inline sticky::StickyTree cherry() {
    return sticky_of({ std::nullopt, 0, 0 }, { 0, 0, 0 });
}

inline sticky::StickyTree single_edge() {
    return sticky_of({ std::nullopt, 0 }, { 0, 0 });
}

inline sticky::RootedMap loop_map() {
    return sticky::RootedMap({ 1, 0 }, { 1, 0 }, 0);
}

inline sticky::RootedMap bridge_map() {
    return sticky::RootedMap({ 1, 0 }, { 0, 1 }, 0);
}

// darts 0,2 at v and 1,3 at u; root 0 from v to u
inline sticky::RootedMap double_edge() {
    return sticky::RootedMap({ 1, 0, 3, 2 }, { 2, 3, 0, 1 }, 0);
}

// four vertices A (0 10 4), B (1 6 8), u (2 11 9), v (3 7 5); root 3 from v to u
inline sticky::RootedMap tetrahedron() {
    return sticky::RootedMap({ 1, 0, 3, 2, 5, 4, 7, 6, 9, 8, 11, 10 },
                             { 10, 6, 11, 7, 0, 3, 8, 5, 1, 2, 4, 9 }, 3);
}

inline sticky::RootedMap triangle() {
    // three vertices, darts 0..5; edges (0 1) (2 3) (4 5)
    return sticky::map_from_rotations({ { 0, 5 }, { 1, 2 }, { 3, 4 } }, { 1, 0, 3, 2, 5, 4 }, 0);
}

} // namespace testing
