#include "cli.hpp"

#include "sticky/decorated.hpp"
#include "sticky/flows.hpp"
#include "sticky/map_bijections.hpp"
#include "sticky/oracles.hpp"
#include "sticky/serialize.hpp"
#include "sticky/tamari.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>

namespace sticky::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

constexpr std::size_t kVerifyCap = 7;
constexpr std::size_t kEnumerateCap = 8;

const std::vector<std::string> kObjectClasses { "sticky",   "bridgeless", "triangulation", "core",
                                                "interval", "flow",       "decorated" };
const std::vector<std::string> kEnumerateClasses { "sticky", "bridgeless", "triangulation", "interval",
                                                   "flow" };

StickyTree to_sticky(const std::string& cls, const json& j) {
    if (cls == "sticky") {
        return sticky_from_json(j);
    }
    if (cls == "bridgeless") {
        return map_to_sticky(map_from_json(j));
    }
    if (cls == "triangulation") {
        return triangulation_to_sticky(map_from_json(j));
    }
    if (cls == "core") {
        return core_to_sticky(core_from_json(j));
    }
    if (cls == "interval") {
        return interval_to_sticky(interval_from_json(j));
    }
    if (cls == "flow") {
        return flow_to_sticky(flow_from_json(j));
    }
    return contract(decorated_from_json(j));
}

json from_sticky(const std::string& cls, const StickyTree& s) {
    if (cls == "sticky") {
        return to_json(s);
    }
    if (cls == "bridgeless") {
        return to_json(sticky_to_map(s));
    }
    if (cls == "triangulation") {
        return to_json(sticky_to_triangulation(s));
    }
    if (cls == "core") {
        return to_json(sticky_to_core(s));
    }
    if (cls == "interval") {
        return to_json(sticky_to_interval(s));
    }
    if (cls == "flow") {
        return to_json(sticky_to_flow(s));
    }
    return to_json(expand(s));
}

RootedMap checked_map(const std::string& cls, const json& j) {
    RootedMap m = map_from_json(j);
    if (cls == "triangulation" && !is_triangulation(m)) {
        throw NotTriangulation("map is not a simple planar triangulation");
    }
    if (cls == "bridgeless") {
        if (!is_planar(m)) {
            throw NotPlanar("map is not planar");
        }
        if (auto br = bridges(m); !br.empty()) {
            throw NotBridgeless(br.front());
        }
    }
    return m;
}

json normalized(const std::string& cls, const json& j) {
    if (cls == "bridgeless" || cls == "triangulation") {
        return to_json(checked_map(cls, j));
    }
    if (cls == "core") {
        return to_json(core_from_json(j));
    }
    if (cls == "interval") {
        return to_json(interval_from_json(j));
    }
    if (cls == "flow") {
        const ForestFlow f = flow_from_json(j);
        return to_json(validate_closed_flow(f.forest, f.inputs));
    }
    if (cls == "decorated") {
        return to_json(decorated_from_json(j));
    }
    return to_json(sticky_from_json(j));
}

std::string dot(const std::string& cls, const json& j) {
    if (cls == "bridgeless" || cls == "triangulation") {
        return to_dot(checked_map(cls, j));
    }
    if (cls == "core") {
        return to_dot(core_from_json(j).map);
    }
    if (cls == "interval") {
        throw UsageError("intervals have no DOT form; export them as json");
    }
    if (cls == "flow") {
        const ForestFlow f = flow_from_json(j);
        return to_dot(validate_closed_flow(f.forest, f.inputs));
    }
    if (cls == "decorated") {
        return to_dot(decorated_from_json(j));
    }
    return to_dot(sticky_from_json(j));
}

// Reads whitespace-separated JSON values (JSON-lines or pretty-printed).
void for_each_value(std::istream& in, const std::function<void(const json&)>& f) {
    while (true) {
        in >> std::ws;
        if (in.peek() == std::char_traits<char>::eof()) {
            return;
        }
        json j;
        try {
            in >> j;
        } catch (const json::exception& e) {
            throw ParseError(std::string("malformed JSON input: ") + e.what());
        }
        f(j);
    }
}

struct Streams {
    std::ifstream fin;
    std::ofstream fout;
    std::istream* in;
    std::ostream* out;

    Streams(std::istream& in_default, std::ostream& out_default, const std::string& in_path,
            const std::string& out_path)
        : in(&in_default)
        , out(&out_default) {
        if (!in_path.empty()) {
            fin.open(in_path);
            if (!fin) {
                throw UsageError("cannot open input file " + in_path);
            }
            in = &fin;
        }
        if (!out_path.empty()) {
            fout.open(out_path);
            if (!fout) {
                throw UsageError("cannot open output file " + out_path);
            }
            out = &fout;
        }
    }
};

int do_enumerate(const std::string& cls, std::size_t n, std::ostream& out) {
    if (n > kEnumerateCap) {
        throw SizeCapExceeded("enumerate", n, kEnumerateCap);
    }
    auto emit = [&](const json& j) { out << j.dump() << '\n'; };
    if (cls == "sticky") {
        for_each_sticky(n, [&](const StickyTree& s) { emit(to_json(s)); });
    } else if (cls == "bridgeless") {
        for (const auto& m : enumerate_bridgeless_maps(n)) {
            emit(to_json(m));
        }
    } else if (cls == "triangulation") {
        for (const auto& t : enumerate_triangulations_via_Q(n)) {
            emit(to_json(t));
        }
    } else if (cls == "interval") {
        if (n == 0) {
            throw UsageError("intervals start at n = 1");
        }
        for (const auto& i : enumerate_intervals(n)) {
            emit(to_json(i));
        }
    } else {
        for_each_sticky(n, [&](const StickyTree& s) { emit(to_json(sticky_to_flow(s))); });
    }
    return 0;
}

void require_verify_size(std::size_t n) {
    if (n == 0) {
        throw UsageError("verification suites start at n = 1");
    }
    if (n > kVerifyCap) {
        throw SizeCapExceeded("verify", n, kVerifyCap);
    }
}

int verify_counts(std::size_t n, std::ostream& out) {
    std::size_t trees = 0;
    for_each_sticky(n, [&](const StickyTree&) { ++trees; });
    const std::size_t intervals = enumerate_intervals(n).size();
    std::optional<std::size_t> maps;
    if (n <= kBridgelessCap) {
        maps = enumerate_bridgeless_maps(n).size();
    }
    const auto formula = formula_count(n);
    const bool ok = trees == formula && intervals == formula && (!maps || *maps == formula);
    out << trees << ' ' << (maps ? std::to_string(*maps) : "-") << ' ' << intervals << ' ' << formula << ' '
        << (ok ? "ok" : "FAIL") << '\n';
    return ok ? 0 : 1;
}

// Prints one line per identity and returns whether all passed.
class Tally {
public:
    explicit Tally(std::ostream& out)
        : out_(out) { }

    template <class Items, class Pred>
    void check(const std::string& name, const Items& items, Pred pred) {
        std::size_t passed = 0;
        for (const auto& x : items) {
            bool good = false;
            try {
                good = pred(x);
            } catch (const std::exception&) {
                good = false;
            }
            passed += good ? 1 : 0;
        }
        report(name, passed, items.size());
    }

    void report(const std::string& name, std::size_t passed, std::size_t total) {
        const bool good = passed == total;
        ok_ = ok_ && good;
        out_ << name << ' ' << passed << '/' << total << ' ' << (good ? "ok" : "FAIL") << '\n';
    }

    void skip(const std::string& name, const std::string& why) { out_ << name << " skipped (" << why << ")\n"; }

    bool ok() const { return ok_; }

private:
    std::ostream& out_;
    bool ok_ = true;
};

int verify_roundtrip(std::size_t n, std::ostream& out) {
    const auto trees = enumerate_sticky(n);
    Tally t(out);
    t.check("S(R(S))=S", trees, [](const StickyTree& s) { return map_to_sticky(sticky_to_map(s)) == s; });
    if (n <= kBridgelessCap) {
        t.check("R(S(B))~B", enumerate_bridgeless_maps(n), [](const RootedMap& b) {
            return canonically_equal(sticky_to_map(map_to_sticky(b)), b);
        });
    } else {
        t.skip("R(S(B))~B", "map oracle stops at n = 4");
    }
    std::vector<RootedMap> tri;
    t.check("P(Q(S))=S", trees, [&](const StickyTree& s) {
        tri.push_back(sticky_to_triangulation(s));
        return triangulation_to_sticky(tri.back()) == s;
    });
    t.check("Q(P(T))~T", tri, [](const RootedMap& m) {
        return canonically_equal(sticky_to_triangulation(triangulation_to_sticky(m)), m);
    });
    t.check("I^-1(I(S))=S", trees,
            [](const StickyTree& s) { return interval_to_sticky(sticky_to_interval(s)) == s; });
    t.check("flow^-1(flow(S))=S", trees,
            [](const StickyTree& s) { return flow_to_sticky(sticky_to_flow(s)) == s; });
    t.check("Ctr(Ctr^-1(S))=S", trees, [](const StickyTree& s) { return contract(expand(s)) == s; });
    out << (t.ok() ? "ok" : "FAIL") << '\n';
    return t.ok() ? 0 : 1;
}

int verify_thm41(std::size_t n, std::ostream& out) {
    const auto paths = enumerate_dyck_paths(n);
    std::vector<std::vector<std::size_t>> lengths;
    for (const auto& p : paths) {
        lengths.push_back(match_lengths(p));
    }
    std::size_t mismatches = 0;
    for (std::size_t j = 0; j < paths.size(); ++j) {
        std::size_t below = 0;
        for (std::size_t i = 0; i < paths.size(); ++i) {
            below += std::equal(lengths[i].begin(), lengths[i].end(), lengths[j].begin(),
                                [](std::size_t a, std::size_t b) { return a <= b; })
                ? 1
                : 0;
        }
        const auto flows = count_closed_flows(forest_of_dyck(paths[j]));
        if (flows != below) {
            ++mismatches;
            out << "mismatch " << paths[j].to_string() << ' ' << below << ' ' << flows << '\n';
        }
    }
    const bool ok = mismatches == 0;
    out << "thm41 n=" << n << " paths=" << paths.size() << " mismatches=" << mismatches << ' '
        << (ok ? "ok" : "FAIL") << '\n';
    return ok ? 0 : 1;
}

template <class F>
std::map<std::size_t, std::size_t> histogram(const std::vector<StickyTree>& trees, F f) {
    std::map<std::size_t, std::size_t> h;
    for (const auto& s : trees) {
        ++h[f(s)];
    }
    return h;
}

int verify_stats(std::size_t n, std::ostream& out) {
    const auto trees = enumerate_sticky(n);
    const auto intervals = enumerate_intervals(n);
    Tally t(out);
    t.check("synchronized<=>internal-primary", trees, [](const StickyTree& s) {
        return is_synchronized(sticky_to_interval(s)) == is_synchronized_sticky(s);
    });
    t.check("vertices(R(S))=primary+1", trees, [](const StickyTree& s) {
        return sticky_to_map(s).vertex_count() == s.primary_count() + 1;
    });
    t.check("primary=#inputs(-1)", trees, [](const StickyTree& s) {
        const auto f = sticky_to_flow(s);
        std::size_t k = 0;
        for (const auto& in : f.inputs) {
            k += static_cast<std::size_t>(std::count(in.begin(), in.end(), -1L));
        }
        return k == s.primary_count();
    });
    std::map<std::size_t, std::size_t> rise, descent;
    for (const auto& i : intervals) {
        ++rise[i.upper().initial_rise()];
        ++descent[i.upper().final_descent()];
    }
    t.report("initial-rise~final-descent", rise == descent ? 1 : 0, 1);
    const auto left = histogram(trees, [](const StickyTree& s) { return s.leftmost_branch_length(); });
    const auto right = histogram(trees, [](const StickyTree& s) { return s.rightmost_branch_length(); });
    t.report("leftmost~rightmost-branch", left == right ? 1 : 0, 1);
    t.check("mirror-involution", trees, [](const StickyTree& s) {
        const auto f = sticky_to_flow(s);
        const auto g = mirror_flow(f);
        validate_closed_flow(g.forest, g.inputs);
        return mirror_flow(g) == f;
    });
    out << (t.ok() ? "ok" : "FAIL") << '\n';
    return t.ok() ? 0 : 1;
}

int do_stats(const std::string& statistic, std::size_t n, std::ostream& out) {
    if (n > kVerifyCap) {
        throw SizeCapExceeded("stats", n, kVerifyCap);
    }
    std::map<std::size_t, std::size_t> dist;
    if (statistic == "primary" || statistic == "vertices") {
        for_each_sticky(n, [&](const StickyTree& s) {
            ++dist[statistic == "primary" ? s.primary_count() : sticky_to_map(s).vertex_count()];
        });
    } else {
        if (n == 0) {
            throw UsageError("intervals start at n = 1");
        }
        for (const auto& i : enumerate_intervals(n)) {
            ++dist[statistic == "initial-rise" ? i.upper().initial_rise() : i.upper().final_descent()];
        }
    }
    json d = json::object();
    for (const auto& [k, v] : dist) {
        d[std::to_string(k)] = v;
    }
    out << json { { "statistic", statistic }, { "n", n }, { "distribution", d } }.dump() << '\n';
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app { "Sticky trees, bridgeless maps, triangulations, Tamari intervals and closed flows" };
    app.require_subcommand(1);

    std::string cls, from, to, suite, statistic, format, in_path, out_path;
    std::size_t n = 0;

    auto* enumerate = app.add_subcommand("enumerate", "Write every object of a class and size as JSON lines");
    enumerate->add_option("--class", cls, "Object class")->required()->check(CLI::IsMember(kEnumerateClasses));
    enumerate->add_option("--n", n, "Size (edges, or internal vertices for triangulations)")->required();
    enumerate->add_option("--out", out_path, "Output file (default stdout)");

    auto* convert = app.add_subcommand("convert", "Convert JSON objects between classes through sticky trees");
    convert->add_option("--from", from, "Input class")->required()->check(CLI::IsMember(kObjectClasses));
    convert->add_option("--to", to, "Output class")->required()->check(CLI::IsMember(kObjectClasses));
    convert->add_option("--in", in_path, "Input file (default stdin)");
    convert->add_option("--out", out_path, "Output file (default stdout)");

    auto* verify = app.add_subcommand("verify", "Run an exhaustive verification suite");
    verify->add_option("--suite", suite, "Suite")->required()->check(
        CLI::IsMember({ "counts", "roundtrip", "thm41", "stats" }));
    verify->add_option("--n", n, "Size")->required();

    auto* stats = app.add_subcommand("stats", "Distribution of a statistic over all objects of size n");
    stats->add_option("--statistic", statistic, "Statistic")->required()->check(
        CLI::IsMember({ "primary", "initial-rise", "final-descent", "vertices" }));
    stats->add_option("--n", n, "Size")->required();

    auto* exporter = app.add_subcommand("export", "Re-emit validated objects as JSON or DOT");
    exporter->add_option("--format", format, "Output format")->required()->check(CLI::IsMember({ "json", "dot" }));
    exporter->add_option("--class", cls, "Object class")->required()->check(CLI::IsMember(kObjectClasses));
    exporter->add_option("--in", in_path, "Input file (default stdin)");
    exporter->add_option("--out", out_path, "Output file (default stdout)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\nrun with --help for usage\n";
        return 2;
    }

    try {
        Streams io(in, out, in_path, out_path);
        if (*enumerate) {
            return do_enumerate(cls, n, *io.out);
        }
        if (*convert) {
            for_each_value(*io.in, [&](const json& j) { *io.out << from_sticky(to, to_sticky(from, j)).dump() << '\n'; });
            return 0;
        }
        if (*verify) {
            require_verify_size(n);
            if (suite == "counts") {
                return verify_counts(n, *io.out);
            }
            if (suite == "roundtrip") {
                return verify_roundtrip(n, *io.out);
            }
            if (suite == "thm41") {
                return verify_thm41(n, *io.out);
            }
            return verify_stats(n, *io.out);
        }
        if (*stats) {
            return do_stats(statistic, n, *io.out);
        }
        for_each_value(*io.in, [&](const json& j) {
            if (format == "json") {
                *io.out << normalized(cls, j).dump() << '\n';
            } else {
                *io.out << dot(cls, j);
            }
        });
        return 0;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const SizeCapExceeded& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace sticky::cli
