#include "sticky/oracles.hpp"

#include "sticky/map_bijections.hpp"
#include "sticky/triangulation.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

namespace sticky {

namespace {

bool transitive(const std::vector<Dart>& alpha, const std::vector<Dart>& sigma) {
    std::vector<bool> seen(alpha.size(), false);
    std::vector<Dart> stack { 0 };
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const Dart h = stack.back();
        stack.pop_back();
        for (Dart g : { alpha[h], sigma[h] }) {
            if (!seen[g]) {
                seen[g] = true;
                ++reached;
                stack.push_back(g);
            }
        }
    }
    return reached == alpha.size();
}

struct MapLess {
    bool operator()(const RootedMap& a, const RootedMap& b) const {
        return std::tie(a.alpha_perm(), a.sigma_perm()) < std::tie(b.alpha_perm(), b.sigma_perm());
    }
};

} // namespace

std::vector<RootedMap> enumerate_bridgeless_maps(std::size_t n) {
    if (n > kBridgelessCap) {
        throw SizeCapExceeded("enumerate_bridgeless_maps", n, kBridgelessCap);
    }
    if (n == 0) {
        return { RootedMap() };
    }
    const std::size_t nd = 2 * n;
    std::vector<Dart> alpha(nd);
    for (Dart h = 0; h < nd; ++h) {
        alpha[h] = h ^ 1u;
    }
    std::vector<Dart> sigma(nd);
    std::iota(sigma.begin(), sigma.end(), 0);
    std::set<RootedMap, MapLess> found;
    do {
        // Cheaper than letting the constructor throw on disconnected maps.
        if (!transitive(alpha, sigma)) {
            continue;
        }
        RootedMap m(alpha, sigma, 0);
        if (!is_planar(m) || !is_bridgeless(m)) {
            continue;
        }
        found.insert(canonicalize(m));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return { found.begin(), found.end() };
}

std::uint64_t formula_count(std::size_t n) {
    if (n == 0) {
        throw std::domain_error("the counting formula is undefined at n = 0");
    }
    __extension__ typedef unsigned __int128 u128;
    const u128 limit = ~static_cast<u128>(0) / (4 * n + 2);
    // binom(4n+1, k) built up one factor at a time; each step stays integral.
    u128 b = 1;
    for (std::size_t k = 0; k < n - 1; ++k) {
        if (b > limit) {
            throw std::overflow_error("formula_count overflows at n = " + std::to_string(n));
        }
        b = b * (4 * n + 1 - k) / (k + 1);
    }
    const u128 num = 2 * b;
    const u128 den = static_cast<u128>(n) * (n + 1);
    if (num % den != 0) {
        throw InternalError("counting formula is not integral at n = " + std::to_string(n));
    }
    const u128 r = num / den;
    if (r > std::numeric_limits<std::uint64_t>::max()) {
        throw std::overflow_error("formula_count exceeds 64 bits at n = " + std::to_string(n));
    }
    return static_cast<std::uint64_t>(r);
}

std::vector<RootedMap> enumerate_triangulations_via_Q(std::size_t n) {
    if (n > kTriangulationCap) {
        throw SizeCapExceeded("enumerate_triangulations_via_Q", n, kTriangulationCap);
    }
    std::vector<RootedMap> out;
    std::set<RootedMap, MapLess> seen;
    for_each_sticky(n, [&](const StickyTree& s) {
        RootedMap t = sticky_to_triangulation(s);
        if (!is_triangulation(t) || internal_vertex_count(t) != n) {
            throw InternalError("Q produced a map outside the triangulations of size " + std::to_string(n));
        }
        if (!seen.insert(canonicalize(t)).second) {
            throw InternalError("Q is not injective at size " + std::to_string(n));
        }
        out.push_back(std::move(t));
    });
    return out;
}

} // namespace sticky
