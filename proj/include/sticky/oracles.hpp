#pragma once

#include "sticky/planar_map.hpp"

#include <cstdint>
#include <vector>

namespace sticky {

constexpr std::size_t kBridgelessCap = 4;
constexpr std::size_t kTriangulationCap = 5;

/// Every rooted bridgeless planar map with n edges, once each, in canonical
/// form and sorted. Brute force over all vertex permutations; throws
/// SizeCapExceeded for n > 4.
std::vector<RootedMap> enumerate_bridgeless_maps(std::size_t n);

/// 2 / (n (n+1)) * binom(4n+1, n-1), computed exactly. Throws
/// std::domain_error for n = 0 and std::overflow_error past 64 bits.
std::uint64_t formula_count(std::size_t n);

/// Q applied to every sticky tree with n edges, checked to be simple
/// triangulations with n internal vertices and pairwise non-isomorphic.
/// Throws SizeCapExceeded for n > 5.
std::vector<RootedMap> enumerate_triangulations_via_Q(std::size_t n);

} // namespace sticky
