// End-to-end acceptance checks.  Each criterion prints exactly one
// [PASS]/[FAIL] line; the process exits nonzero if any criterion fails.
// Every check here re-derives its expectations independently of the library
// paths it exercises (exhaustive scans, closed-form counts, rebuilds).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "oracles.hpp"
#include "vftem/additive.hpp"
#include "vftem/builder.hpp"
#include "vftem/constructions.hpp"
#include "vftem/distances.hpp"
#include "vftem/emulator.hpp"
#include "vftem/graph.hpp"
#include "vftem/oracle.hpp"
#include "vftem/rng.hpp"
#include "vftem/verifier.hpp"

using namespace vftem;

namespace {

std::shared_ptr<const WeightedGraph> share(WeightedGraph g) {
    return std::make_shared<const WeightedGraph>(std::move(g));
}

struct Outcome {
    bool passed = false;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

int g_failures = 0;

void run(int id, const std::string& label, double limit_ms,
         const std::function<Outcome()>& body) {
    const auto t0 = Clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out.passed = false;
        out.detail = std::string("exception: ") + e.what();
    }
    const double ms =
        std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    const bool in_time = ms < limit_ms;
    const bool ok = out.passed && in_time;
    if (!ok) ++g_failures;
    std::printf("[%s] criterion %d: %s (%s; %.0f ms, limit %.0f ms%s)\n", ok ? "PASS" : "FAIL",
                id, label.c_str(), out.detail.c_str(), ms, limit_ms,
                in_time ? "" : ", OVER TIME");
    std::fflush(stdout);
}

// --- criterion 1: multiplicative emulators verify at stretch 2k-1 -----------

Outcome emulator_stretch_check() {
    int built = 0, failed = 0;
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        auto g = share(random_gnp(12, 0.5, WeightMode::DistinctInt, seed));
        for (int k : {2, 3}) {
            for (std::size_t f : {1u, 2u}) {
                const BuildParams p =
                    choose_params(12, f, k, 1.0, 1.0, 1.0, CheckMode::Exhaustive, seed);
                const EmulatorGraph h = build_vft_emulator(g, f, k, p);
                ++built;
                if (!verify_multiplicative(*g, h, f, 2.0 * k - 1.0).passed) ++failed;
                if (k == 3) {
                    const EmulatorGraph h5 = build_vft_5_emulator(g, f, p);
                    ++built;
                    if (!verify_multiplicative(*g, h5, f, 5.0).passed) ++failed;
                }
            }
        }
    }
    std::ostringstream d;
    d << built << " builds over 50 seeds, k in {2,3}, f in {1,2}; " << failed
      << " verification failures";
    return {failed == 0, d.str()};
}

// --- criterion 2: additive emulators verify at +2 / +4 ----------------------

Outcome additive_stretch_check() {
    int built = 0, failed = 0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        auto g = share(random_gnp(12, 0.5, WeightMode::Unit, seed));
        for (std::size_t f : {1u, 2u}) {
            const EmulatorGraph h4 = build_additive4(g, f, seed);
            ++built;
            if (!verify_additive(*g, h4, f, 4.0).passed) ++failed;
            const EmulatorGraph h2 = build_additive2(g, f, seed);
            ++built;
            if (!verify_additive(*g, h2, f, 2.0).passed) ++failed;
        }
    }
    std::ostringstream d;
    d << built << " builds over 20 seeds, f in {1,2}; " << failed << " verification failures";
    return {failed == 0, d.str()};
}

// --- criterion 3: the greedy fault search is sandwiched ---------------------

Outcome fault_search_sandwich() {
    int collected = 0, yes_bound = 0, no_bound = 0, bad = 0;
    std::uint64_t i = 0;
    while (collected < 200 && i < 2000) {
        ++i;
        const std::size_t n = 8 + i % 5;  // 8..12
        auto g = share(random_gnp(n, 0.42, WeightMode::DistinctInt, 1000 + i));
        const EmulatorGraph h = testutil::random_partial_emulator(g, 2000 + i);
        Rng rng(derive_stream(i, "accept3"));
        const Vertex u = static_cast<Vertex>(rng.below(n));
        const Vertex v = static_cast<Vertex>(rng.below(n));
        if (u == v || h.has_edge(u, v)) continue;
        const int k = 2 + static_cast<int>(rng.below(2));
        const std::size_t f = 1 + rng.below(2);
        ++collected;
        const double bound = 2.0 * k - 1.0;
        const WitnessResult r = find_fault_set(*g, h, u, v, k, f);

        bool small_witness_exists = false;
        for (const FaultSet& fs : oracle::all_fault_sets(n, f, {u, v}))
            if (hop_dist(h, *g, fs, u, v) > bound) {
                small_witness_exists = true;
                break;
            }
        bool large_witness_exists = false;
        for (const FaultSet& fs : oracle::all_fault_sets(n, (2 * k - 2) * f, {u, v}))
            if (hop_dist(h, *g, fs, u, v) > bound) {
                large_witness_exists = true;
                break;
            }

        if (small_witness_exists) {
            ++yes_bound;
            if (!r.forced) ++bad;
        }
        if (!large_witness_exists) {
            ++no_bound;
            if (r.forced) ++bad;
        }
        if (r.forced) {
            if (!r.fault_set || r.fault_set->size() > (2 * k - 2) * f ||
                r.fault_set->contains(u) || r.fault_set->contains(v) ||
                !(hop_dist(h, *g, *r.fault_set, u, v) > bound))
                ++bad;
        }
    }
    std::ostringstream d;
    d << collected << " instances (" << yes_bound << " forced-YES bounds, " << no_bound
      << " forced-NO bounds); " << bad << " counterexamples";
    return {collected == 200 && bad == 0, d.str()};
}

// --- criterion 4: dense graphs carry at least m - kn alternating walks ------

Outcome alternating_floor_check() {
    int checked = 0, failed = 0;
    for (std::uint64_t i = 0; i < 100; ++i) {
        const int k = (i % 2 == 0) ? 2 : 3;
        const std::size_t n = (k == 2) ? 7 + i % 4 : 8 + i % 3;  // keep m > kn feasible
        const std::size_t max_m = n * (n - 1) / 2;
        const std::size_t lo = static_cast<std::size_t>(k) * n + 1;
        const std::size_t m = lo + (i * 7) % (max_m - lo + 1);
        const WeightedGraph g = random_gnm(n, m, WeightMode::DistinctInt, 3000 + i);
        ++checked;
        const std::uint64_t floor = static_cast<std::uint64_t>(m - k * n);
        if (count_alternating_kpaths(g, k, true) < floor) ++failed;
    }
    std::ostringstream d;
    d << checked << " graphs with m > kn, k in {2,3}; " << failed << " below the floor";
    return {checked == 100 && failed == 0, d.str()};
}

// --- criterion 5: fixed-size constructions hit their exact sizes ------------

Outcome construction_size_check() {
    int failed = 0;
    std::ostringstream d;

    const WeightedGraph pg = projective_plane_incidence(2);
    if (pg.num_vertices() != 14 || pg.num_edges() != 21 || girth(pg) != 6) ++failed;

    const WeightedGraph bases[] = {testutil::path_graph(4),   testutil::cycle_graph(5),
                                   testutil::cycle_graph(6),  testutil::star_graph(4),
                                   testutil::petersen_graph(), testutil::complete_graph(4),
                                   heawood_graph()};
    int blow_checked = 0;
    for (int i = 0; i < 20; ++i) {
        const WeightedGraph& base = bases[i % 7];
        const int t = 1 + i % 5;
        const WeightedGraph b = blow_up(base, t);
        ++blow_checked;
        if (b.num_vertices() != base.num_vertices() * static_cast<std::size_t>(t) ||
            b.num_edges() !=
                base.num_edges() * static_cast<std::size_t>(t) * static_cast<std::size_t>(t))
            ++failed;
    }

    const WeightedGraph lb = lb_instance_stretch3(8, heawood_graph());
    if (lb.num_vertices() != 28 || lb.num_edges() != 84) ++failed;

    d << "incidence graph 14/21/girth-6, " << blow_checked
      << " blow-up size checks, doubled lower-bound instance 28/84; " << failed << " mismatches";
    return {failed == 0, d.str()};
}

// --- criterion 6: builds serialize byte-identically --------------------------

Outcome determinism_check() {
    int compared = 0, mismatched = 0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        auto gw = share(random_gnp(12, 0.5, WeightMode::DistinctInt, 4000 + seed));
        auto gu = share(random_gnp(12, 0.5, WeightMode::Unit, 4100 + seed));
        const BuildParams p3 =
            choose_params(12, 1, 3, 1.0, 1.0, 1.0, CheckMode::Exhaustive, seed);
        const BuildParams p2 =
            choose_params(12, 1, 2, 1.0, 1.0, 1.0, CheckMode::Exhaustive, seed);

        const auto check = [&](const std::string& a, const std::string& b) {
            ++compared;
            if (a != b) ++mismatched;
        };
        check(build_vft_5_emulator(gw, 1, p3).serialize(),
              build_vft_5_emulator(gw, 1, p3).serialize());
        check(build_vft_emulator(gw, 1, 3, p3).serialize(),
              build_vft_emulator(gw, 1, 3, p3).serialize());
        check(build_vft_spanner_greedy(gw, 1, 2, p2).serialize(),
              build_vft_spanner_greedy(gw, 1, 2, p2).serialize());
        check(build_additive2(gu, 1, seed).serialize(), build_additive2(gu, 1, seed).serialize());
        check(build_additive4(gu, 1, seed).serialize(), build_additive4(gu, 1, seed).serialize());
    }
    std::ostringstream d;
    d << compared << " rebuild comparisons across five builders; " << mismatched << " mismatches";
    return {compared == 50 && mismatched == 0, d.str()};
}

// --- criterion 7: emulator size tracks the spanner as f grows ---------------

Outcome size_ratio_check() {
    const std::size_t n = 200, m = 800;
    const std::vector<std::size_t> fs = {1, 2, 4, 8, 16};
    const int seeds = 5;
    std::vector<double> ratio(fs.size()), se(fs.size());
    std::ostringstream d;
    d.precision(4);
    for (std::size_t i = 0; i < fs.size(); ++i) {
        std::vector<double> em_tot, sp_tot;
        for (int s = 1; s <= seeds; ++s) {
            auto g = share(random_gnm(n, m, WeightMode::DistinctInt, 5000 + s));
            const BuildParams p = choose_params(n, fs[i], 3, 1.0, 1.0, 1.0,
                                                CheckMode::Approximate, 5000 + s);
            em_tot.push_back(
                static_cast<double>(build_vft_emulator(g, fs[i], 3, p).num_edges()));
            sp_tot.push_back(
                static_cast<double>(build_vft_spanner_greedy(g, fs[i], 3, p).num_edges()));
        }
        const auto mean = [](const std::vector<double>& xs) {
            double t = 0;
            for (double x : xs) t += x;
            return t / static_cast<double>(xs.size());
        };
        const auto stderr_of = [&](const std::vector<double>& xs) {
            const double mu = mean(xs);
            double ss = 0;
            for (double x : xs) ss += (x - mu) * (x - mu);
            return std::sqrt(ss / static_cast<double>(xs.size() - 1)) /
                   std::sqrt(static_cast<double>(xs.size()));
        };
        const double me = mean(em_tot), ms_ = mean(sp_tot);
        ratio[i] = me / ms_;
        // first-order error propagation for a quotient of independent means
        se[i] = ratio[i] * std::sqrt(stderr_of(em_tot) * stderr_of(em_tot) / (me * me) +
                                     stderr_of(sp_tot) * stderr_of(sp_tot) / (ms_ * ms_));
        d << "f=" << fs[i] << ":" << ratio[i] << "±" << se[i] << " ";
    }
    bool ok = ratio[0] <= 1.1;
    for (std::size_t i = 0; i + 1 < fs.size(); ++i) {
        const double slack = 2.0 * std::sqrt(se[i] * se[i] + se[i + 1] * se[i + 1]);
        if (ratio[i + 1] > ratio[i] + slack) ok = false;
    }
    d << (ok ? "(near parity at f=1, non-increasing within noise)"
             : "(ratio bound violated)");
    return {ok, d.str()};
}

// --- criterion 8: emulator distances never undercut graph distances ---------

Outcome lower_distance_check() {
    std::uint64_t checked = 0, violations = 0;
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        auto gw = share(random_gnp(12, 0.5, WeightMode::DistinctInt, 6000 + seed));
        auto gu = share(random_gnp(12, 0.5, WeightMode::Unit, 6100 + seed));
        const std::size_t f = 1 + seed % 2;
        const BuildParams p3 =
            choose_params(12, f, 3, 1.0, 1.0, 1.0, CheckMode::Exhaustive, seed);
        const BuildParams p2 =
            choose_params(12, f, 2, 1.0, 1.0, 1.0, CheckMode::Exhaustive, seed);
        const EmulatorGraph builds[] = {build_vft_5_emulator(gw, f, p3),
                                        build_vft_emulator(gw, f, 3, p3),
                                        build_vft_emulator(gw, f, 2, p2),
                                        build_vft_spanner_greedy(gw, f, 2, p2),
                                        build_additive2(gu, f, seed),
                                        build_additive4(gu, f, seed)};
        for (const EmulatorGraph& h : builds) {
            const WeightedGraph& g = h.base();
            for (const FaultSet& fset : oracle::all_fault_sets(12, f)) {
                const FaultedView view(h, fset);
                for (Vertex u = 0; u < 12; ++u) {
                    if (fset.contains(u)) continue;
                    for (Vertex v = u + 1; v < 12; ++v) {
                        if (fset.contains(v)) continue;
                        ++checked;
                        const Dist dg = graph_dist(g, fset, u, v);
                        const Dist dh = view.dist(u, v);
                        if (dh < dg) ++violations;
                    }
                }
            }
        }
    }
    std::ostringstream d;
    d << checked << " (fault set, pair) combinations across six builder outputs; " << violations
      << " lower-bound violations";
    return {violations == 0, d.str()};
}

}  // namespace

int main() {
    run(1, "stretch-(2k-1) and stretch-5 emulators verify exhaustively", 300000.0,
        emulator_stretch_check);
    run(2, "+2/+4 additive emulators verify exhaustively", 120000.0, additive_stretch_check);
    run(3, "greedy fault search sandwiched by exhaustive searches", 180000.0,
        fault_search_sandwich);
    run(4, "alternating-walk census respects the m - kn floor", 120000.0,
        alternating_floor_check);
    run(5, "fixed constructions hit exact sizes", 60000.0, construction_size_check);
    run(6, "builders serialize byte-identically across rebuilds", 120000.0, determinism_check);
    run(7, "emulator size stays near the spanner and shrinks with f", 1800000.0,
        size_ratio_check);
    run(8, "emulator distances never undercut graph distances", 300000.0, lower_distance_check);
    return g_failures == 0 ? 0 : 1;
}
