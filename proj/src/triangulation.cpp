#include "sticky/triangulation.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

namespace sticky {

namespace {

bool is_simple_path(const std::vector<std::size_t>& path) {
    std::set<std::size_t> seen(path.begin(), path.end());
    return seen.size() == path.size();
}

} // namespace

bool is_triangulation(const RootedMap& map) {
    if (map.empty() || !is_planar(map)) {
        return false;
    }
    for (const auto& f : map.faces()) {
        if (f.size() != 3) {
            return false;
        }
    }
    std::set<std::pair<std::size_t, std::size_t>> pairs;
    for (Dart h = 0; h < map.dart_count(); ++h) {
        if (h > map.alpha(h)) {
            continue;
        }
        auto a = map.vertex(h);
        auto b = map.vertex(map.alpha(h));
        if (a == b) {
            return false;
        }
        if (!pairs.emplace(std::min(a, b), std::max(a, b)).second) {
            return false;
        }
    }
    return true;
}

std::size_t internal_vertex_count(const RootedMap& triangulation) {
    if (!is_triangulation(triangulation)) {
        throw NotTriangulation("map is not a simple planar triangulation");
    }
    return triangulation.vertex_count() - 3;
}

std::vector<Dart> outer_corners(const RootedMap& core) {
    std::vector<Dart> out;
    if (core.empty()) {
        return out;
    }
    const Dart start = core.sigma_inv(core.root());
    Dart h = start;
    do {
        out.push_back(h);
        h = core.phi(h);
    } while (h != start);
    return out;
}

CoreMap CoreMap::from_rooted(RootedMap map, std::size_t base) {
    CoreMap c;
    if (map.empty()) {
        if (base != 0) {
            throw InvalidCore("single-vertex core must have base 0");
        }
        c.map = std::move(map);
        c.left_boundary = { 0 };
        c.right_boundary = { 0 };
        return c;
    }
    const auto corners = outer_corners(map);
    std::vector<std::size_t> at;
    at.reserve(corners.size());
    for (Dart h : corners) {
        at.push_back(map.vertex(h));
    }
    const auto hits = std::count(at.begin(), at.end(), base);
    if (hits != 1 || at.front() == base) {
        throw InvalidCore("base must appear exactly once on the outer face, away from the apex");
    }
    const std::size_t k = static_cast<std::size_t>(std::find(at.begin(), at.end(), base) - at.begin());
    c.apex = at.front();
    c.base = base;
    c.right_boundary.assign(at.begin(), at.begin() + static_cast<long>(k) + 1);
    c.left_boundary.push_back(c.apex);
    for (std::size_t j = at.size() - 1; j >= k; --j) {
        c.left_boundary.push_back(at[j]);
    }
    if (!is_simple_path(c.left_boundary) || !is_simple_path(c.right_boundary)) {
        throw InvalidCore("core boundaries are not simple paths");
    }
    c.map = std::move(map);
    return c;
}

CoreMap CoreMap::canonical() const {
    if (map.empty()) {
        return *this;
    }
    RootedMap canon = canonicalize(map);
    // Locate the base through any of its darts; the canonical numbering maps
    // darts bijectively so the vertex is recovered by replaying the BFS.
    Dart base_dart = 0;
    while (map.vertex(base_dart) != base) {
        ++base_dart;
    }
    // Replay the canonical BFS to learn where base_dart went.
    std::vector<Dart> order(map.dart_count(), static_cast<Dart>(-1));
    std::vector<Dart> queue { map.root() };
    order[map.root()] = 0;
    Dart next = 1;
    for (std::size_t i = 0; i < queue.size(); ++i) {
        const Dart h = queue[i];
        for (Dart g : { map.sigma(h), map.alpha(h) }) {
            if (order[g] == static_cast<Dart>(-1)) {
                order[g] = next++;
                queue.push_back(g);
            }
        }
    }
    const std::size_t new_base = canon.vertex(order[base_dart]);
    return from_rooted(std::move(canon), new_base);
}

CoreMap core(const RootedMap& t) {
    if (!is_triangulation(t)) {
        throw NotTriangulation("map is not a simple planar triangulation");
    }
    const Dart hr = t.root();
    const Dart g = t.alpha(hr);
    const std::size_t u = t.vertex(g);
    const std::size_t v = t.vertex(hr);

    // Clockwise at u: v, apex, ..., base. Counter-clockwise at v: u, apex, ..., base.
    std::vector<std::size_t> left_t, right_t;
    for (Dart h = t.sigma(g); h != g; h = t.sigma(h)) {
        left_t.push_back(t.vertex(t.alpha(h)));
    }
    for (Dart h = t.sigma_inv(hr); h != hr; h = t.sigma_inv(h)) {
        right_t.push_back(t.vertex(t.alpha(h)));
    }

    std::vector<Dart> renumber(t.dart_count(), static_cast<Dart>(-1));
    std::vector<Dart> kept;
    for (Dart h = 0; h < t.dart_count(); ++h) {
        const auto a = t.vertex(h);
        const auto b = t.vertex(t.alpha(h));
        if (a != u && a != v && b != u && b != v) {
            renumber[h] = static_cast<Dart>(kept.size());
            kept.push_back(h);
        }
    }
    if (kept.empty()) {
        return CoreMap::from_rooted(RootedMap(), 0);
    }

    std::vector<Dart> alpha(kept.size()), sigma(kept.size());
    for (std::size_t i = 0; i < kept.size(); ++i) {
        const Dart h = kept[i];
        alpha[i] = renumber[t.alpha(h)];
        Dart s = t.sigma(h);
        while (renumber[s] == static_cast<Dart>(-1)) {
            s = t.sigma(s);
        }
        sigma[i] = renumber[s];
    }
    const Dart apex_to_v = t.alpha(t.sigma_inv(hr));
    const Dart root = renumber[t.sigma(apex_to_v)];
    if (root == static_cast<Dart>(-1)) {
        throw InternalError("right-boundary dart of the apex was deleted");
    }
    CoreMap c;
    c.map = RootedMap(std::move(alpha), std::move(sigma), root);

    auto core_vertex = [&](std::size_t tv) {
        for (Dart h : kept) {
            if (t.vertex(h) == tv) {
                return c.map.vertex(renumber[h]);
            }
        }
        throw InternalError("boundary vertex missing from the core");
    };
    c = CoreMap::from_rooted(std::move(c.map), core_vertex(left_t.back()));

    std::vector<std::size_t> left_c, right_c;
    for (auto x : left_t) {
        left_c.push_back(core_vertex(x));
    }
    for (auto x : right_t) {
        right_c.push_back(core_vertex(x));
    }
    if (left_c != c.left_boundary || right_c != c.right_boundary) {
        throw InternalError("outer-face walk disagrees with the neighbourhoods of the root edge");
    }
    return c;
}

RootedMap close_core(const CoreMap& c) {
    if (c.map.empty()) {
        // u: (g, u->apex), v: (h_r, v->apex), apex: (apex->u, apex->v).
        enum : Dart { G, UA, HR, VA, AU, AV };
        std::vector<Dart> alpha { HR, AU, G, AV, UA, VA };
        return map_from_rotations({ { G, UA }, { HR, VA }, { AU, AV } }, alpha, HR);
    }
    const CoreMap checked = CoreMap::from_rooted(c.map, c.base);
    if (checked.left_boundary != c.left_boundary || checked.right_boundary != c.right_boundary
        || checked.apex != c.apex) {
        throw InvalidCore("boundaries do not match the outer face of the core");
    }

    const RootedMap& m = c.map;
    const auto corners = outer_corners(m);
    const std::size_t L = corners.size();
    const std::size_t kr = c.right_boundary.size() - 1;

    std::vector<Dart> alpha(m.alpha_perm());
    auto new_edge = [&]() {
        const Dart a = static_cast<Dart>(alpha.size());
        alpha.push_back(a + 1);
        alpha.push_back(a);
        return a;
    };
    const Dart g = new_edge();  // at u, towards v
    const Dart hr = g + 1;      // at v, towards u

    std::vector<std::vector<Dart>> inserted(m.dart_count());
    std::vector<Dart> at_u { g }, at_v { hr };
    std::vector<Dart> to_u(L + 1), to_v(kr + 1);
    for (std::size_t j = 0; j <= kr; ++j) {
        to_v[j] = new_edge();
    }
    for (std::size_t j = kr; j <= L; ++j) {
        to_u[j] = new_edge();
    }
    // to_u[L] is the apex's link to u.
    for (std::size_t j = 0; j < L; ++j) {
        auto& ins = inserted[corners[j]];
        if (j == 0) {
            ins = { to_u[L], to_v[0] };
        } else if (j == kr) {
            ins = { to_v[kr], to_u[kr] };
        } else if (j < kr) {
            ins = { to_v[j] };
        } else {
            ins = { to_u[j] };
        }
    }
    at_u.push_back(to_u[L] + 1);
    for (std::size_t j = L - 1; j >= kr; --j) {
        at_u.push_back(to_u[j] + 1);
    }
    for (std::size_t j = kr + 1; j-- > 0;) {
        at_v.push_back(to_v[j] + 1);
    }

    std::vector<std::vector<Dart>> rotations;
    for (const auto& cyc : m.vertices()) {
        auto& r = rotations.emplace_back();
        for (Dart h : cyc) {
            r.push_back(h);
            r.insert(r.end(), inserted[h].begin(), inserted[h].end());
        }
    }
    rotations.push_back(std::move(at_u));
    rotations.push_back(std::move(at_v));
    return map_from_rotations(rotations, alpha, hr);
}

} // namespace sticky
