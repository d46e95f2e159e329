#include "cli.hpp"
#include "fixture_check.hpp"

#include "sticky/decorated.hpp"
#include "sticky/flows.hpp"
#include "sticky/map_bijections.hpp"
#include "sticky/oracles.hpp"
#include "sticky/tamari.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#ifndef STICKY_FIXTURE_DIR
#define STICKY_FIXTURE_DIR "tests/fixtures"
#endif

using namespace sticky;

namespace {

struct Outcome {
    bool pass;
    std::string summary;
};

bool all_passed = true;

void criterion(int id, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = { false, std::string("exception: ") + e.what() };
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all_passed = all_passed && o.pass;
    std::ostringstream t;
    t.precision(2);
    t << std::fixed << secs;
    std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << o.summary << " ["
              << t.str() << "s]" << std::endl;
}

Outcome counts() {
    const std::size_t expected[] = { 0, 1, 3, 13, 68, 399, 2530 };
    const auto start = std::chrono::steady_clock::now();
    std::string lines;
    bool ok = true;
    for (std::size_t k = 1; k <= 6; ++k) {
        std::ostringstream out, err;
        std::istringstream in;
        const int code = cli::run({ "verify", "--suite", "counts", "--n", std::to_string(k) }, in, out, err);
        std::istringstream fields(out.str());
        std::string trees, maps, intervals, formula, verdict;
        fields >> trees >> maps >> intervals >> formula >> verdict;
        const std::string want = std::to_string(expected[k]);
        const bool maps_ok = k <= 4 ? maps == want : maps == "-";
        ok = ok && code == 0 && verdict == "ok" && trees == want && intervals == want && formula == want
            && maps_ok;
        lines += (k > 1 ? ", " : "") + trees;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    ok = ok && secs < 120.0;
    return { ok, "|S_k| for k=1..6 = " + lines + "; intervals equal; maps equal up to k=4" };
}

Outcome round_trips() {
    std::size_t checked = 0, failed = 0;
    auto tally = [&](bool good) {
        ++checked;
        failed += good ? 0 : 1;
    };
    for (std::size_t n = 0; n <= 6; ++n) {
        for_each_sticky(n, [&](const StickyTree& s) {
            tally(map_to_sticky(sticky_to_map(s)) == s);
            if (n <= 5) {
                const RootedMap t = sticky_to_triangulation(s);
                tally(triangulation_to_sticky(t) == s);
                tally(canonically_equal(sticky_to_triangulation(triangulation_to_sticky(t)), t));
            }
        });
    }
    for (std::size_t n = 0; n <= 4; ++n) {
        for (const auto& b : enumerate_bridgeless_maps(n)) {
            tally(canonically_equal(sticky_to_map(map_to_sticky(b)), b));
        }
    }
    return { failed == 0, std::to_string(checked) + " round trips (S.R n<=6, R.S n<=4, P.Q and Q.P n<=5), "
                              + std::to_string(failed) + " failures" };
}

Outcome triangulation_image() {
    bool ok = true;
    std::string sizes;
    for (std::size_t n = 0; n <= 5; ++n) {
        std::set<std::pair<std::vector<Dart>, std::vector<Dart>>> forms;
        std::size_t count = 0;
        for_each_sticky(n, [&](const StickyTree& s) {
            const RootedMap t = sticky_to_triangulation(s);
            ++count;
            ok = ok && is_triangulation(t) && internal_vertex_count(t) == n && t.edge_count() == 3 * (n + 1)
                && t.vertex_count() == n + 3;
            const RootedMap c = canonicalize(t);
            forms.emplace(c.alpha_perm(), c.sigma_perm());
        });
        ok = ok && forms.size() == count;
        sizes += (n > 0 ? ", " : "") + std::to_string(forms.size());
    }
    ok = ok && sizes.find("1, 1, 3, 13, 68, 399") == 0;
    return { ok, "distinct triangulations for n=0..5: " + sizes };
}

Outcome tamari_bijection() {
    bool ok = true;
    std::string sizes;
    for (std::size_t n = 1; n <= 6; ++n) {
        std::set<TamariInterval> image;
        std::size_t trees = 0;
        for_each_sticky(n, [&](const StickyTree& s) {
            ++trees;
            const TamariInterval i = sticky_to_interval(s);
            image.insert(i);
            ok = ok && interval_to_sticky(i) == s;
        });
        const auto all = enumerate_intervals(n);
        for (const auto& i : all) {
            ok = ok && sticky_to_interval(interval_to_sticky(i)) == i;
        }
        ok = ok && image.size() == trees && image.size() == all.size();
        sizes += (n > 1 ? ", " : "") + std::to_string(image.size());
    }
    return { ok, "injective image sizes for n=1..6: " + sizes + "; inverse exhaustive" };
}

Outcome flows_below() {
    const auto start = std::chrono::steady_clock::now();
    std::size_t paths = 0, mismatches = 0;
    for (std::size_t n = 0; n <= 6; ++n) {
        const auto all = enumerate_dyck_paths(n);
        for (const auto& d : all) {
            std::size_t below = 0;
            for (const auto& e : all) {
                below += tamari_leq(e, d) ? 1 : 0;
            }
            ++paths;
            mismatches += below == count_closed_flows(forest_of_dyck(d)) ? 0 : 1;
        }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return { mismatches == 0 && secs < 60.0,
             std::to_string(paths) + " Dyck paths of length <= 12, " + std::to_string(mismatches) + " mismatches" };
}

Outcome synchronized() {
    std::size_t checked = 0, failed = 0;
    for (std::size_t n = 1; n <= 6; ++n) {
        for_each_sticky(n, [&](const StickyTree& s) {
            ++checked;
            failed += is_synchronized(sticky_to_interval(s)) == is_synchronized_sticky(s) ? 0 : 1;
        });
    }
    return { failed == 0, std::to_string(checked) + " trees, " + std::to_string(failed) + " failures" };
}

Outcome transport() {
    std::size_t failed = 0;
    bool multisets = true;
    for (std::size_t n = 1; n <= 6; ++n) {
        for_each_sticky(n, [&](const StickyTree& s) {
            failed += sticky_to_map(s).vertex_count() == s.primary_count() + 1 ? 0 : 1;
            std::size_t sinks = 0;
            for (const auto& in : sticky_to_flow(s).inputs) {
                sinks += static_cast<std::size_t>(std::count(in.begin(), in.end(), -1L));
            }
            failed += sinks == s.primary_count() ? 0 : 1;
        });
        std::multiset<std::size_t> rise, descent;
        for (const auto& i : enumerate_intervals(n)) {
            rise.insert(i.upper().initial_rise());
            descent.insert(i.upper().final_descent());
        }
        multisets = multisets && rise == descent;
    }
    return { failed == 0 && multisets,
             std::to_string(failed) + " vertex/sink mismatches; rise and descent multisets "
                 + (multisets ? "equal" : "differ") };
}

Outcome fixtures() {
    const auto results = cli::check_fixture_dir(STICKY_FIXTURE_DIR);
    std::size_t passed = 0;
    std::string bad;
    for (const auto& r : results) {
        if (r.ok()) {
            ++passed;
        } else {
            bad += " " + r.name;
        }
    }
    return { !results.empty() && passed == results.size(),
             std::to_string(passed) + "/" + std::to_string(results.size()) + " hand-derived fixtures"
                 + (bad.empty() ? "" : "; failing:" + bad) };
}

} // namespace

int main() {
    criterion(1, counts);
    criterion(2, round_trips);
    criterion(3, triangulation_image);
    criterion(4, tamari_bijection);
    criterion(5, flows_below);
    criterion(6, synchronized);
    criterion(7, transport);
    criterion(8, fixtures);
    return all_passed ? 0 : 1;
}
