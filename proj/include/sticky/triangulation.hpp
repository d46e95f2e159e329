#pragma once

#include "sticky/planar_map.hpp"

#include <cstddef>
#include <vector>

namespace sticky {

class NotTriangulation : public Error {
public:
    using Error::Error;
};

class InvalidCore : public Error {
public:
    using Error::Error;
};

/// Planar, all faces of degree 3, no loop, no multiple edge.
bool is_triangulation(const RootedMap& map);

/// Vertices not on the root face; throws NotTriangulation.
std::size_t internal_vertex_count(const RootedMap& triangulation);

/// What is left of a triangulation rooted at (u, v) once u, v and their
/// edges are deleted.
///
/// The root dart of `map` leaves the apex along the right boundary, so the
/// outer face of the core is the face on the counter-clockwise side of the
/// root dart. Walking that face with alpha∘sigma from the apex runs down the
/// right boundary to the base and back up the left boundary. The single-vertex
/// core (from the single triangle) has apex == base == 0.
struct CoreMap {
    RootedMap map;
    std::size_t apex = 0;
    std::size_t base = 0;
    std::vector<std::size_t> left_boundary;  ///< apex ... base
    std::vector<std::size_t> right_boundary; ///< apex ... base

    /// Recomputes apex and both boundaries from the root dart and the base,
    /// throwing InvalidCore when they are not simple paths meeting only at
    /// apex and base positions.
    static CoreMap from_rooted(RootedMap map, std::size_t base);

    /// Same core with canonically renumbered darts.
    CoreMap canonical() const;

    friend bool operator==(const CoreMap&, const CoreMap&) = default;
};

/// Corners of the core's outer face, as darts h such that the corner lies
/// between h and sigma(h), in alpha∘sigma order starting at the apex.
std::vector<Dart> outer_corners(const RootedMap& core);

/// The core C(T). Throws NotTriangulation.
CoreMap core(const RootedMap& triangulation);

/// Adds u linked to the left boundary, v linked to the right boundary and the
/// root from v to u with the apex outside. Inverse of core().
RootedMap close_core(const CoreMap& core);

} // namespace sticky
