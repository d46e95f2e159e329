#include "fixture_check.hpp"

#include "sticky/decorated.hpp"
#include "sticky/map_bijections.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>

namespace sticky::cli {

namespace {

std::pair<bool, bool> run_checks(const std::string& kind, const json& in, const json& exp) {
    if (kind == "map_to_sticky") {
        const auto m = map_from_json(in);
        const auto s = sticky_from_json(exp);
        return { map_to_sticky(m) == s, canonically_equal(sticky_to_map(s), m) };
    }
    if (kind == "sticky_to_map") {
        const auto s = sticky_from_json(in);
        const auto m = map_from_json(exp);
        return { canonically_equal(sticky_to_map(s), m), map_to_sticky(m) == s };
    }
    if (kind == "core") {
        const auto t = map_from_json(in);
        const auto c = core_from_json(exp);
        return { core(t).canonical() == c.canonical(), canonically_equal(close_core(c), t) };
    }
    if (kind == "triangulation_to_sticky") {
        const auto t = map_from_json(in);
        const auto s = sticky_from_json(exp);
        return { triangulation_to_sticky(t) == s, canonically_equal(sticky_to_triangulation(s), t) };
    }
    if (kind == "sticky_to_core") {
        const auto s = sticky_from_json(in);
        const auto c = core_from_json(exp);
        return { sticky_to_core(s).canonical() == c.canonical(), core_to_sticky(c) == s };
    }
    if (kind == "core_to_sticky") {
        const auto c = core_from_json(in);
        const auto s = sticky_from_json(exp);
        return { core_to_sticky(c) == s, sticky_to_core(s).canonical() == c.canonical() };
    }
    if (kind == "contract") {
        const auto r = decorated_from_json(in);
        const auto s = sticky_from_json(exp);
        return { contract(r) == s, expand(s) == r };
    }
    if (kind == "sync_sticky_to_decorated") {
        const auto s = sticky_from_json(in);
        const auto r = decorated_from_json(exp);
        return { sync_sticky_to_decorated(s) == r, sync_decorated_to_sticky(r) == s };
    }
    throw ParseError("unknown fixture transformation '" + kind + "'");
}

} // namespace

FixtureResult check_fixture(const json& fixture) {
    FixtureResult r;
    r.name = fixture.value("name", std::string("unnamed"));
    try {
        const auto [forward, back] = run_checks(fixture.at("transformation").get<std::string>(),
                                                fixture.at("input"), fixture.at("expected"));
        r.forward = forward;
        r.round_trip = back;
    } catch (const std::exception& e) {
        r.detail = e.what();
    }
    return r;
}

std::vector<FixtureResult> check_fixture_dir(const std::string& dir) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.path().extension() == ".json") {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());
    std::vector<FixtureResult> out;
    for (const auto& p : files) {
        std::ifstream in(p);
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        try {
            out.push_back(check_fixture(parse_json(text)));
        } catch (const std::exception& e) {
            out.push_back({ p.filename().string(), false, false, e.what() });
        }
    }
    return out;
}

} // namespace sticky::cli
