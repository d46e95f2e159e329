#pragma once

#include "sticky/errors.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace sticky {

/// Darts are 0-based internally; the JSON surface numbers them from 1.
using Dart = std::uint32_t;

class InvalidMap : public Error {
public:
    using Error::Error;
};

/// A rooted combinatorial map: `alpha` pairs the two darts of every edge and
/// `sigma` gives the next dart clockwise around its vertex. The map with no
/// edge is the single vertex. Faces are the cycles of alpha∘sigma; the face
/// cycle through h is the face on the clockwise side of h.
class RootedMap {
public:
    /// The single-vertex map.
    RootedMap() = default;

    /// Throws InvalidMap unless alpha is a fixed-point-free involution, sigma
    /// a permutation of the same darts, the map connected and root a dart.
    RootedMap(std::vector<Dart> alpha, std::vector<Dart> sigma, Dart root);

    std::size_t dart_count() const { return alpha_.size(); }
    std::size_t edge_count() const { return alpha_.size() / 2; }
    bool empty() const { return alpha_.empty(); }

    Dart root() const;
    Dart alpha(Dart h) const { return alpha_[h]; }
    Dart sigma(Dart h) const { return sigma_[h]; }
    Dart sigma_inv(Dart h) const { return sigma_inv_[h]; }
    /// Face successor alpha(sigma(h)).
    Dart phi(Dart h) const { return alpha_[sigma_[h]]; }

    const std::vector<Dart>& alpha_perm() const { return alpha_; }
    const std::vector<Dart>& sigma_perm() const { return sigma_; }

    /// Vertex index of every dart; vertices are numbered by first dart.
    const std::vector<std::size_t>& vertex_of() const { return vertex_of_; }
    std::size_t vertex(Dart h) const { return vertex_of_[h]; }
    std::size_t vertex_count() const { return vertex_count_; }

    std::vector<std::vector<Dart>> vertices() const;
    std::vector<std::vector<Dart>> faces() const;
    std::size_t face_count() const;

    /// v - e + f; equals 2 exactly for planar maps.
    long euler_characteristic() const;

    friend bool operator==(const RootedMap& a, const RootedMap& b) {
        return a.alpha_ == b.alpha_ && a.sigma_ == b.sigma_ && a.root_ == b.root_;
    }

private:
    std::vector<Dart> alpha_;
    std::vector<Dart> sigma_;
    std::vector<Dart> sigma_inv_;
    std::vector<std::size_t> vertex_of_;
    std::size_t vertex_count_ = 1;
    Dart root_ = 0;
};

/// An edge is reported by its smaller dart.
using EdgeId = Dart;

bool is_planar(const RootedMap& map);
std::vector<EdgeId> bridges(const RootedMap& map);
std::vector<EdgeId> loops(const RootedMap& map);
bool is_bridgeless(const RootedMap& map);

/// Same darts, vertices and faces exchanged: sigma* = alpha∘sigma. The root
/// dart is kept, so dual(dual(m)) == m exactly.
RootedMap dual(const RootedMap& map);

/// Darts renumbered in breadth-first discovery order from the root, trying
/// sigma before alpha. Two rooted maps are isomorphic iff their canonical
/// forms are equal.
RootedMap canonicalize(const RootedMap& map);

bool canonically_equal(const RootedMap& a, const RootedMap& b);

/// Builds a map from the clockwise dart list of every vertex and the edge
/// pairing.
RootedMap map_from_rotations(const std::vector<std::vector<Dart>>& rotations,
                             const std::vector<Dart>& alpha, Dart root);

} // namespace sticky
