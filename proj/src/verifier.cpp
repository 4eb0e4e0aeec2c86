#include "vftem/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "vftem/distances.hpp"
#include "vftem/errors.hpp"

namespace vftem {

namespace {

// C(n,0) + ... + C(n,f), saturating at 2^63.
std::uint64_t subset_count(std::size_t n, std::size_t f) {
    const std::uint64_t cap = std::uint64_t{1} << 63;
    std::uint64_t total = 0, binom = 1;
    for (std::size_t i = 0; i <= std::min(f, n); ++i) {
        if (binom >= cap - total) return cap;
        total += binom;
        if (i < n) {
            const std::uint64_t next = binom * (n - i);  // n at desk scale: no overflow
            binom = next / (i + 1);
        }
    }
    return total;
}

using AllowFn = std::function<Dist(Dist)>;

VerificationReport run_verify(const WeightedGraph& g, const EmulatorGraph& h, std::size_t f,
                              const AllowFn& allow, std::uint64_t budget) {
    if (g.num_vertices() != h.num_vertices() || g.num_edges() != h.base().num_edges())
        throw std::invalid_argument("verify: g does not match the emulator's base graph");
    const std::size_t n = g.num_vertices();
    const std::uint64_t work = subset_count(n, f);
    const std::uint64_t pair_scale = std::max<std::uint64_t>(1, n * n);
    if (work > budget / pair_scale)
        throw BudgetExceeded("verification work estimate exceeds budget of " +
                             std::to_string(budget));

    VerificationReport report;
    std::vector<Vertex> cur;
    std::vector<Dist> dg, dh;

    // One fault set at a time: all surviving-pair graph distances, the
    // emulator's faulted view, then both stretch inequalities per pair.
    auto scan_subset = [&]() {
        const FaultSet faults(cur);
        const std::vector<char> mask = faults.mask(n);
        FaultedView view(h, faults);
        for (Vertex u = 0; static_cast<std::size_t>(u) < n; ++u) {
            if (mask[static_cast<std::size_t>(u)]) continue;
            sssp_masked(g, mask, u, dg);
            dh = view.dists_from(u);
            for (Vertex v = u + 1; static_cast<std::size_t>(v) < n; ++v) {
                if (mask[static_cast<std::size_t>(v)]) continue;
                ++report.checked_pairs;
                const Dist dgv = dg[static_cast<std::size_t>(v)];
                if (is_inf(dgv)) continue;  // no requirement on disconnected pairs
                const Dist dhv = dh[static_cast<std::size_t>(v)];
                const Dist hi = allow(dgv);
                if (!is_inf(dhv)) {
                    const double stretch = dhv / dgv;
                    report.worst_stretch = std::max(report.worst_stretch, stretch);
                }
                if (dhv < dgv) {
                    ++report.violation_count;
                    if (report.violations.size() < VerificationReport::kMaxStoredViolations)
                        report.violations.push_back({faults, u, v, dhv, dgv});
                } else if (dhv > hi) {
                    ++report.violation_count;
                    if (report.violations.size() < VerificationReport::kMaxStoredViolations)
                        report.violations.push_back({faults, u, v, dhv, hi});
                }
            }
        }
    };

    std::function<void()> enumerate = [&]() {
        scan_subset();
        if (cur.size() < f) {
            for (Vertex x = cur.empty() ? 0 : cur.back() + 1;
                 static_cast<std::size_t>(x) < n; ++x) {
                cur.push_back(x);
                enumerate();
                cur.pop_back();
            }
        }
    };
    enumerate();

    report.passed = report.violation_count == 0;
    return report;
}

}  // namespace

VerificationReport verify_multiplicative(const WeightedGraph& g, const EmulatorGraph& h,
                                         std::size_t f, double t, std::uint64_t budget) {
    if (t < 1) throw std::invalid_argument("stretch factor t must be >= 1");
    return run_verify(g, h, f, [t](Dist d) { return t * d; }, budget);
}

VerificationReport verify_additive(const WeightedGraph& g, const EmulatorGraph& h, std::size_t f,
                                   double c, std::uint64_t budget) {
    if (c < 0) throw std::invalid_argument("additive allowance c must be >= 0");
    return run_verify(g, h, f, [c](Dist d) { return d + c; }, budget);
}

std::string VerificationReport::to_json() const {
    nlohmann::json j;
    j["passed"] = passed;
    j["checked_pairs"] = checked_pairs;
    j["violation_count"] = violation_count;
    j["worst_stretch"] = worst_stretch;
    j["violations"] = nlohmann::json::array();
    auto dist_field = [](Dist d) -> nlohmann::json {
        if (is_inf(d)) return "inf";
        return d;
    };
    for (const Violation& v : violations) {
        nlohmann::json jv;
        jv["faults"] = v.faults.vertices();
        jv["u"] = v.u;
        jv["v"] = v.v;
        jv["got"] = dist_field(v.got);
        jv["allowed"] = dist_field(v.allowed);
        j["violations"].push_back(std::move(jv));
    }
    return j.dump();
}

// --- path counting ---------------------------------------------------------

std::uint64_t count_middle_heavy_3paths(const EmulatorGraph& h) {
    std::uint64_t total = 0;
    for (EdgeId i = 0; static_cast<std::size_t>(i) < h.num_spanner_edges(); ++i) {
        const Edge& mid = h.spanner_edge(i);
        // Insertion order is the tie-broken weight order, so "strictly
        // lighter than the middle edge" is just a smaller id.
        for (const auto& [s, es] : h.spanner_neighbors(mid.u)) {
            if (es >= i) continue;
            for (const auto& [t, et] : h.spanner_neighbors(mid.v)) {
                if (et >= i || t == s) continue;
                ++total;
            }
        }
    }
    return total;
}

namespace {

// Strictly heavier under the tie-broken order (weight, then edge id).
bool heavier(const WeightedGraph& g, EdgeId a, EdgeId b) {
    const double wa = g.edge(a).w, wb = g.edge(b).w;
    return wa > wb || (wa == wb && a > b);
}

struct AlternatingCounter {
    const WeightedGraph& g;
    int k;
    bool edge_simple;
    std::vector<char> vused;
    std::vector<char> eused;
    std::uint64_t count = 0;

    void run() {
        const std::size_t n = g.num_vertices();
        if (edge_simple)
            eused.assign(g.num_edges(), 0);
        else
            vused.assign(n, 0);
        for (Vertex v = 0; static_cast<std::size_t>(v) < n; ++v) {
            if (!edge_simple) vused[static_cast<std::size_t>(v)] = 1;
            extend(v, -1, 0);
            if (!edge_simple) vused[static_cast<std::size_t>(v)] = 0;
        }
    }

    void extend(Vertex cur, EdgeId last, int depth) {
        if (depth == k) {
            ++count;
            return;
        }
        for (const auto& [nb, e] : g.neighbors(cur)) {
            if (depth > 0) {
                // 1-based position of the new edge decides which side of the
                // alternation constraint applies.
                const bool even_position = (depth + 1) % 2 == 0;
                if (even_position ? !heavier(g, e, last) : !heavier(g, last, e)) continue;
            }
            if (edge_simple ? eused[static_cast<std::size_t>(e)] != 0
                            : vused[static_cast<std::size_t>(nb)] != 0)
                continue;
            if (edge_simple)
                eused[static_cast<std::size_t>(e)] = 1;
            else
                vused[static_cast<std::size_t>(nb)] = 1;
            extend(nb, e, depth + 1);
            if (edge_simple)
                eused[static_cast<std::size_t>(e)] = 0;
            else
                vused[static_cast<std::size_t>(nb)] = 0;
        }
    }
};

}  // namespace

std::uint64_t count_alternating_kpaths(const WeightedGraph& g, int k, bool edge_simple) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    AlternatingCounter counter{g, k, edge_simple, {}, {}, 0};
    counter.run();
    // Directed traversals: odd k admits both orientations of every path,
    // even k exactly one (the reversed constraint set is contradictory).
    return k % 2 == 1 ? counter.count / 2 : counter.count;
}

// --- path predicates ---------------------------------------------------------

namespace {

void validate_path(const LocalPath& path, const EmulatorGraph& h) {
    if (path.edges.empty() || path.vertices.size() != path.edges.size() + 1)
        throw std::invalid_argument("malformed path");
    for (std::size_t i = 0; i < path.edges.size(); ++i) {
        const EdgeId e = path.edges[i];
        if (e < 0 || static_cast<std::size_t>(e) >= h.num_spanner_edges())
            throw std::invalid_argument("path edge id out of range");
        const Edge& ed = h.spanner_edge(e);
        const Vertex a = path.vertices[i], b = path.vertices[i + 1];
        if (!((ed.u == a && ed.v == b) || (ed.u == b && ed.v == a)))
            throw std::invalid_argument("path edge does not join consecutive path vertices");
    }
}

}  // namespace

bool is_local(const LocalPath& path, const EmulatorGraph& h) {
    validate_path(path, h);
    for (std::size_t i = 1; i < path.edges.size(); ++i) {
        const Vertex y = path.vertices[i];
        if (h.bucket_of(y, path.edges[i - 1]) != h.bucket_of(y, path.edges[i])) return false;
    }
    return true;
}

bool is_sala(const LocalPath& path, const EmulatorGraph& h) {
    validate_path(path, h);
    // Simple: no repeated vertices.
    std::vector<Vertex> vs = path.vertices;
    std::sort(vs.begin(), vs.end());
    if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) return false;
    // Alternating: spanner insertion ids are the tie-broken weight order.
    for (std::size_t pos = 2; pos <= path.edges.size(); pos += 2) {
        const EdgeId e = path.edges[pos - 1];
        if (e <= path.edges[pos - 2]) return false;
        if (pos < path.edges.size() && e <= path.edges[pos]) return false;
    }
    if (!is_local(path, h)) return false;
    // Avoids-faults: no path vertex lies in any path edge's witness.
    for (EdgeId e : path.edges) {
        const FaultSet& w = h.witness(e);
        for (Vertex x : path.vertices)
            if (w.contains(x)) return false;
    }
    return true;
}

}  // namespace vftem
