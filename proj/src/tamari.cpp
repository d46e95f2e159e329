#include "sticky/tamari.hpp"

#include "sticky/plane_tree.hpp"

#include <stdexcept>

namespace sticky {

std::vector<std::size_t> match_lengths(const DyckPath& path) {
    std::vector<std::size_t> out(path.order(), 0);
    // (index of the up step, position of the up step)
    std::vector<std::pair<std::size_t, std::size_t>> open;
    std::size_t ups = 0;
    for (std::size_t i = 0; i < path.length(); ++i) {
        if (path.is_up(i)) {
            open.emplace_back(ups++, i);
        } else {
            const auto [k, at] = open.back();
            open.pop_back();
            out[k] = i - at - 1;
        }
    }
    return out;
}

bool tamari_leq(const DyckPath& d, const DyckPath& e) {
    if (d.length() != e.length()) {
        throw LengthMismatch("paths of length " + std::to_string(d.length()) + " and "
                             + std::to_string(e.length()) + " are not comparable");
    }
    const auto a = match_lengths(d);
    const auto b = match_lengths(e);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) {
            return false;
        }
    }
    return true;
}

std::string path_type(const DyckPath& path) {
    if (path.empty()) {
        throw InvalidDyckPath("the empty path has no type");
    }
    std::string out;
    for (std::size_t i = 0; i + 1 < path.length() && out.size() + 1 < path.order(); ++i) {
        if (path.is_up(i)) {
            out.push_back(path.is_up(i + 1) ? 'E' : 'N');
        }
    }
    return out;
}

TamariInterval::TamariInterval(DyckPath lower, DyckPath upper)
    : lower_(std::move(lower))
    , upper_(std::move(upper)) {
    if (!tamari_leq(lower_, upper_)) {
        throw NotAnInterval(lower_.to_string() + " is not below " + upper_.to_string());
    }
}

bool is_synchronized(const TamariInterval& interval) {
    if (interval.order() == 0) {
        return true;
    }
    return path_type(interval.lower()) == path_type(interval.upper());
}

TamariInterval sticky_to_interval(const StickyTree& tree) {
    if (tree.edge_count() == 0) {
        throw std::invalid_argument("the single-node tree has no interval");
    }
    const auto c = tree.certificate_counts();
    std::vector<bool> lower;
    for (NodeId v = 1; v < c.size(); ++v) {
        lower.push_back(true);
        lower.insert(lower.end(), c[v], false);
    }
    return TamariInterval(DyckPath(std::move(lower)), contour_word(tree.shape()));
}

StickyTree interval_to_sticky(const TamariInterval& interval) {
    PlaneTree shape = tree_from_contour(interval.upper());
    std::vector<std::size_t> counts(shape.size(), 0);
    std::size_t v = 0;
    for (bool up : interval.lower().steps()) {
        if (up) {
            ++v;
        } else {
            ++counts[v];
        }
    }
    return recover_labels(shape, counts);
}

std::vector<TamariInterval> enumerate_intervals(std::size_t n) {
    const auto paths = enumerate_dyck_paths(n);
    std::vector<std::vector<std::size_t>> lengths;
    for (const auto& p : paths) {
        lengths.push_back(match_lengths(p));
    }
    std::vector<TamariInterval> out;
    for (std::size_t j = 0; j < paths.size(); ++j) {
        for (std::size_t i = 0; i < paths.size(); ++i) {
            bool below = true;
            for (std::size_t k = 0; k < n && below; ++k) {
                below = lengths[i][k] <= lengths[j][k];
            }
            if (below) {
                out.emplace_back(paths[i], paths[j]);
            }
        }
    }
    return out;
}

} // namespace sticky
