#include "sticky/serialize.hpp"

#include <sstream>

namespace sticky {

namespace {

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed ") + what + ": " + e.what());
    }
}

std::vector<std::optional<NodeId>> parents_from(const json& j) {
    std::vector<std::optional<NodeId>> parents;
    for (const auto& p : j.at("parents")) {
        if (p.is_null()) {
            parents.emplace_back();
        } else if (p.is_number_unsigned()) {
            parents.emplace_back(p.get<NodeId>());
        } else {
            throw ParseError("parent entries must be null or non-negative integers");
        }
    }
    return parents;
}

json parents_json(const PlaneTree& tree) {
    json out = json::array();
    for (const auto& p : tree.parents()) {
        out.push_back(p ? json(*p) : json(nullptr));
    }
    return out;
}

std::vector<Dart> darts_from(const json& j, std::size_t count, const char* field) {
    std::vector<Dart> out;
    for (const auto& x : j.at(field)) {
        const auto v = x.get<long long>();
        if (v < 1 || static_cast<std::size_t>(v) > count) {
            throw ParseError(std::string(field) + " entry " + std::to_string(v) + " is not a dart in 1.."
                             + std::to_string(count));
        }
        out.push_back(static_cast<Dart>(v - 1));
    }
    if (out.size() != count) {
        throw ParseError(std::string(field) + " must list " + std::to_string(count) + " darts");
    }
    return out;
}

std::string quote(const std::string& s) {
    return "\"" + s + "\"";
}

} // namespace

json parse_json(const std::string& text) {
    return guarded("JSON", [&] { return json::parse(text); });
}

json to_json(const PlaneTree& tree) {
    return json { { "parents", parents_json(tree) } };
}

PlaneTree tree_from_json(const json& j) {
    return guarded("tree", [&] { return PlaneTree::from_parents(parents_from(j)); });
}

json to_json(const StickyTree& tree) {
    json out = to_json(tree.shape());
    out["labels"] = tree.labels();
    return out;
}

StickyTree sticky_from_json(const json& j) {
    return guarded("sticky tree", [&] {
        return StickyTree::validate(tree_from_json(j), j.at("labels").get<std::vector<Label>>());
    });
}

json to_json(const RootedMap& map) {
    json out;
    out["n"] = map.edge_count();
    json alpha = json::array(), sigma = json::array();
    for (Dart h = 0; h < map.dart_count(); ++h) {
        alpha.push_back(map.alpha(h) + 1);
        sigma.push_back(map.sigma(h) + 1);
    }
    out["alpha"] = alpha;
    out["sigma"] = sigma;
    out["root"] = map.empty() ? json(nullptr) : json(map.root() + 1);
    return out;
}

RootedMap map_from_json(const json& j) {
    return guarded("map", [&] {
        const auto n = j.at("n").get<std::size_t>();
        auto alpha = darts_from(j, 2 * n, "alpha");
        auto sigma = darts_from(j, 2 * n, "sigma");
        if (n == 0) {
            return RootedMap();
        }
        const auto root = j.at("root").get<long long>();
        if (root < 1 || static_cast<std::size_t>(root) > 2 * n) {
            throw ParseError("root is not a dart in 1.." + std::to_string(2 * n));
        }
        return RootedMap(std::move(alpha), std::move(sigma), static_cast<Dart>(root - 1));
    });
}

json to_json(const CoreMap& core) {
    return json { { "map", to_json(core.map) },
                  { "apex", core.apex },
                  { "base", core.base },
                  { "left_boundary", core.left_boundary },
                  { "right_boundary", core.right_boundary } };
}

CoreMap core_from_json(const json& j) {
    return guarded("core", [&] {
        CoreMap c = CoreMap::from_rooted(map_from_json(j.at("map")), j.at("base").get<std::size_t>());
        if ((j.contains("apex") && j["apex"].get<std::size_t>() != c.apex)
            || (j.contains("left_boundary")
                && j["left_boundary"].get<std::vector<std::size_t>>() != c.left_boundary)
            || (j.contains("right_boundary")
                && j["right_boundary"].get<std::vector<std::size_t>>() != c.right_boundary)) {
            throw InvalidCore("stated apex or boundaries differ from the outer face");
        }
        return c;
    });
}

json to_json(const TamariInterval& interval) {
    return json { { "lower", interval.lower().to_string() }, { "upper", interval.upper().to_string() } };
}

TamariInterval interval_from_json(const json& j) {
    return guarded("interval", [&] {
        return TamariInterval(DyckPath::parse(j.at("lower").get<std::string>()),
                              DyckPath::parse(j.at("upper").get<std::string>()));
    });
}

json to_json(const ForestFlow& flow) {
    json trees = json::array();
    for (std::size_t i = 0; i < flow.forest.size(); ++i) {
        trees.push_back({ { "parents", parents_json(flow.forest[i]) }, { "inputs", flow.inputs[i] } });
    }
    return json { { "forest", trees } };
}

ForestFlow flow_from_json(const json& j) {
    return guarded("flow", [&] {
        ForestFlow f;
        for (const auto& t : j.at("forest")) {
            f.forest.push_back(PlaneTree::from_parents(parents_from(t)));
            f.inputs.push_back(t.at("inputs").get<std::vector<long>>());
        }
        return f;
    });
}

json to_json(const DecoratedTree& tree) {
    json out = to_json(tree.shape());
    json labels = json::object();
    for (const auto& [v, l] : tree.leaf_labels()) {
        labels[std::to_string(v)] = l;
    }
    out["leaf_labels"] = labels;
    return out;
}

DecoratedTree decorated_from_json(const json& j) {
    return guarded("decorated tree", [&] {
        LeafLabels labels;
        for (const auto& [key, value] : j.at("leaf_labels").items()) {
            std::size_t used = 0;
            NodeId v = 0;
            try {
                v = std::stoul(key, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != key.size() || key.empty()) {
                throw ParseError("leaf_labels key '" + key + "' is not a node index");
            }
            labels[v] = value.get<long>();
        }
        return DecoratedTree::validate(tree_from_json(j), std::move(labels));
    });
}

std::string to_dot(const RootedMap& map) {
    std::ostringstream out;
    out << "digraph map {\n";
    const auto cycles = map.vertices();
    for (std::size_t v = 0; v < map.vertex_count(); ++v) {
        std::string rot;
        if (v < cycles.size()) {
            for (Dart h : cycles[v]) {
                rot += (rot.empty() ? "" : " ") + std::to_string(h + 1);
            }
        }
        out << "  v" << v << " [label=" << quote(std::to_string(v) + (rot.empty() ? "" : ": (" + rot + ")"))
            << "];\n";
    }
    for (Dart h = 0; h < map.dart_count(); ++h) {
        if (h > map.alpha(h)) {
            continue;
        }
        const bool is_root = h == map.root() || map.alpha(h) == map.root();
        const Dart tail = is_root ? map.root() : h;
        out << "  v" << map.vertex(tail) << " -> v" << map.vertex(map.alpha(tail)) << " [label="
            << quote(std::to_string(tail + 1) + "/" + std::to_string(map.alpha(tail) + 1))
            << (is_root ? ", style=bold" : "") << "];\n";
    }
    out << "}\n";
    return out.str();
}

std::string to_dot(const PlaneTree& tree, const std::vector<std::string>& node_labels) {
    std::ostringstream out;
    out << "digraph tree {\n";
    for (NodeId v = 0; v < tree.size(); ++v) {
        std::string label = std::to_string(v);
        if (v < node_labels.size() && !node_labels[v].empty()) {
            label += " [" + node_labels[v] + "]";
        }
        out << "  n" << v << " [label=" << quote(label) << "];\n";
    }
    for (NodeId v = 1; v < tree.size(); ++v) {
        out << "  n" << *tree.parent(v) << " -> n" << v << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string to_dot(const StickyTree& tree) {
    std::vector<std::string> labels;
    for (Label l : tree.labels()) {
        labels.push_back(std::to_string(l));
    }
    return to_dot(tree.shape(), labels);
}

std::string to_dot(const DecoratedTree& tree) {
    std::vector<std::string> labels(tree.shape().size());
    for (const auto& [v, l] : tree.leaf_labels()) {
        labels[v] = std::to_string(l);
    }
    return to_dot(tree.shape(), labels);
}

std::string to_dot(const ForestFlow& flow) {
    std::ostringstream out;
    out << "digraph forest {\n";
    for (std::size_t i = 0; i < flow.forest.size(); ++i) {
        const auto& t = flow.forest[i];
        for (NodeId v = 0; v < t.size(); ++v) {
            out << "  t" << i << "n" << v << " [label="
                << quote(std::to_string(v) + " [" + std::to_string(flow.inputs[i][v]) + "]") << "];\n";
        }
        for (NodeId v = 1; v < t.size(); ++v) {
            out << "  t" << i << "n" << *t.parent(v) << " -> t" << i << "n" << v << ";\n";
        }
    }
    out << "}\n";
    return out.str();
}

} // namespace sticky
