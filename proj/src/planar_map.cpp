#include "sticky/planar_map.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

namespace sticky {

namespace {

constexpr Dart kUnset = static_cast<Dart>(-1);

bool is_permutation_of_range(const std::vector<Dart>& p) {
    std::vector<bool> seen(p.size(), false);
    for (Dart x : p) {
        if (x >= p.size() || seen[x]) {
            return false;
        }
        seen[x] = true;
    }
    return true;
}

// Connectivity of the vertex graph when the darts in `skip` are ignored.
bool connected_without(const RootedMap& m, EdgeId skip) {
    const std::size_t nv = m.vertex_count();
    std::vector<std::vector<std::size_t>> adj(nv);
    for (Dart h = 0; h < m.dart_count(); ++h) {
        if (h == skip || m.alpha(h) == skip) {
            continue;
        }
        adj[m.vertex(h)].push_back(m.vertex(m.alpha(h)));
    }
    std::vector<bool> seen(nv, false);
    std::vector<std::size_t> stack { 0 };
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const auto v = stack.back();
        stack.pop_back();
        for (auto w : adj[v]) {
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == nv;
}

} // namespace

RootedMap::RootedMap(std::vector<Dart> alpha, std::vector<Dart> sigma, Dart root)
    : alpha_(std::move(alpha))
    , sigma_(std::move(sigma))
    , root_(root) {
    const std::size_t n = alpha_.size();
    if (sigma_.size() != n) {
        throw InvalidMap("alpha and sigma have different sizes");
    }
    if (n % 2 != 0) {
        throw InvalidMap("odd number of darts");
    }
    if (!is_permutation_of_range(alpha_) || !is_permutation_of_range(sigma_)) {
        throw InvalidMap("alpha and sigma must be permutations of the darts");
    }
    for (Dart h = 0; h < n; ++h) {
        if (alpha_[h] == h || alpha_[alpha_[h]] != h) {
            throw InvalidMap("alpha must be a fixed-point-free involution");
        }
    }
    if (n == 0) {
        root_ = 0;
        return;
    }
    if (root_ >= n) {
        throw InvalidMap("root is not a dart");
    }
    sigma_inv_.assign(n, 0);
    for (Dart h = 0; h < n; ++h) {
        sigma_inv_[sigma_[h]] = h;
    }
    vertex_of_.assign(n, static_cast<std::size_t>(-1));
    vertex_count_ = 0;
    for (Dart h = 0; h < n; ++h) {
        if (vertex_of_[h] != static_cast<std::size_t>(-1)) {
            continue;
        }
        Dart x = h;
        do {
            vertex_of_[x] = vertex_count_;
            x = sigma_[x];
        } while (x != h);
        ++vertex_count_;
    }
    // Transitivity of <sigma, alpha>.
    std::vector<bool> seen(n, false);
    std::vector<Dart> stack { 0 };
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const Dart h = stack.back();
        stack.pop_back();
        for (Dart g : { alpha_[h], sigma_[h], sigma_inv_[h] }) {
            if (!seen[g]) {
                seen[g] = true;
                ++reached;
                stack.push_back(g);
            }
        }
    }
    if (reached != n) {
        throw InvalidMap("map is not connected");
    }
}

Dart RootedMap::root() const {
    if (empty()) {
        throw InvalidMap("the single-vertex map has no root dart");
    }
    return root_;
}

std::vector<std::vector<Dart>> RootedMap::vertices() const {
    std::vector<std::vector<Dart>> out(vertex_count_);
    if (empty()) {
        return out;
    }
    std::vector<bool> seen(dart_count(), false);
    for (Dart h = 0; h < dart_count(); ++h) {
        if (seen[h]) {
            continue;
        }
        auto& cyc = out[vertex_of_[h]];
        for (Dart x = h; !seen[x]; x = sigma_[x]) {
            seen[x] = true;
            cyc.push_back(x);
        }
    }
    return out;
}

std::vector<std::vector<Dart>> RootedMap::faces() const {
    std::vector<std::vector<Dart>> out;
    std::vector<bool> seen(dart_count(), false);
    for (Dart h = 0; h < dart_count(); ++h) {
        if (seen[h]) {
            continue;
        }
        auto& cyc = out.emplace_back();
        for (Dart x = h; !seen[x]; x = phi(x)) {
            seen[x] = true;
            cyc.push_back(x);
        }
    }
    return out;
}

std::size_t RootedMap::face_count() const {
    return empty() ? 1 : faces().size();
}

long RootedMap::euler_characteristic() const {
    return static_cast<long>(vertex_count()) - static_cast<long>(edge_count())
        + static_cast<long>(face_count());
}

bool is_planar(const RootedMap& map) {
    return map.euler_characteristic() == 2;
}

std::vector<EdgeId> bridges(const RootedMap& map) {
    std::vector<EdgeId> out;
    for (Dart h = 0; h < map.dart_count(); ++h) {
        if (h < map.alpha(h) && map.vertex(h) != map.vertex(map.alpha(h))
            && !connected_without(map, h)) {
            out.push_back(h);
        }
    }
    return out;
}

std::vector<EdgeId> loops(const RootedMap& map) {
    std::vector<EdgeId> out;
    for (Dart h = 0; h < map.dart_count(); ++h) {
        if (h < map.alpha(h) && map.vertex(h) == map.vertex(map.alpha(h))) {
            out.push_back(h);
        }
    }
    return out;
}

bool is_bridgeless(const RootedMap& map) {
    return bridges(map).empty();
}

RootedMap dual(const RootedMap& map) {
    if (map.empty()) {
        return map;
    }
    std::vector<Dart> sigma(map.dart_count());
    for (Dart h = 0; h < map.dart_count(); ++h) {
        sigma[h] = map.phi(h);
    }
    return RootedMap(map.alpha_perm(), std::move(sigma), map.root());
}

RootedMap canonicalize(const RootedMap& map) {
    if (map.empty()) {
        return map;
    }
    const std::size_t n = map.dart_count();
    std::vector<Dart> order(n, kUnset);
    std::vector<Dart> visit;
    visit.reserve(n);
    std::deque<Dart> queue { map.root() };
    order[map.root()] = 0;
    visit.push_back(map.root());
    while (!queue.empty()) {
        const Dart h = queue.front();
        queue.pop_front();
        for (Dart g : { map.sigma(h), map.alpha(h) }) {
            if (order[g] == kUnset) {
                order[g] = static_cast<Dart>(visit.size());
                visit.push_back(g);
                queue.push_back(g);
            }
        }
    }
    std::vector<Dart> alpha(n), sigma(n);
    for (Dart i = 0; i < n; ++i) {
        alpha[i] = order[map.alpha(visit[i])];
        sigma[i] = order[map.sigma(visit[i])];
    }
    return RootedMap(std::move(alpha), std::move(sigma), 0);
}

bool canonically_equal(const RootedMap& a, const RootedMap& b) {
    return a.dart_count() == b.dart_count() && canonicalize(a) == canonicalize(b);
}

RootedMap map_from_rotations(const std::vector<std::vector<Dart>>& rotations,
                             const std::vector<Dart>& alpha, Dart root) {
    std::vector<Dart> sigma(alpha.size(), kUnset);
    for (const auto& cyc : rotations) {
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            const Dart h = cyc[i];
            if (h >= sigma.size() || sigma[h] != kUnset) {
                throw InvalidMap("dart " + std::to_string(h) + " listed twice or out of range");
            }
            sigma[h] = cyc[(i + 1) % cyc.size()];
        }
    }
    if (std::find(sigma.begin(), sigma.end(), kUnset) != sigma.end()) {
        throw InvalidMap("some dart has no vertex");
    }
    return RootedMap(alpha, std::move(sigma), root);
}

} // namespace sticky
