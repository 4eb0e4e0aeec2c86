// Command-line front end for the fault-tolerant emulator library: build
// emulators/spanners, verify stretch guarantees against a base graph,
// generate graph families, and sweep experiment grids into CSV tables.
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "vftem/additive.hpp"
#include "vftem/builder.hpp"
#include "vftem/constructions.hpp"
#include "vftem/emulator.hpp"
#include "vftem/errors.hpp"
#include "vftem/graph.hpp"
#include "vftem/verifier.hpp"

namespace {

using namespace vftem;

// ---- generator specifications ----------------------------------------------
//
// A generator spec is "family:field:field:..." with key=value fields (a bare
// value is allowed where a family has one natural parameter):
//   pg2:q=2            projective-plane incidence graph of prime order q
//   heawood            shorthand for pg2:q=2
//   gnp:n=..:p=..:seed=..[:w=unit|uniform|distinct][:maxw=..][:m=..]
//                      random graph; with m=.. draws exactly m edges instead
//   blowup:f=..:k=..[:q=..]   stretch-(2k-1) lower-bound blow-up over pg2(q)
//   lb3:f=..[:q=..]           stretch-3 lower-bound blow-up over pg2(q)
//   file:PATH          load an edge-list file

struct GenFields {
    std::map<std::string, std::string> kv;
    std::vector<std::string> bare;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

[[noreturn]] void spec_error(const std::string& spec, const std::string& why) {
    throw std::invalid_argument("generator spec '" + spec + "': " + why);
}

std::optional<std::string> field(const GenFields& f, const std::string& key) {
    auto it = f.kv.find(key);
    if (it == f.kv.end()) return std::nullopt;
    return it->second;
}

std::uint64_t to_u64(const std::string& spec, const std::string& key, const std::string& val) {
    try {
        std::size_t pos = 0;
        const unsigned long long x = std::stoull(val, &pos);
        if (pos != val.size()) throw std::invalid_argument("trailing junk");
        return x;
    } catch (const std::exception&) {
        spec_error(spec, "field '" + key + "' is not an unsigned integer: '" + val + "'");
    }
}

double to_f64(const std::string& spec, const std::string& key, const std::string& val) {
    try {
        std::size_t pos = 0;
        const double x = std::stod(val, &pos);
        if (pos != val.size()) throw std::invalid_argument("trailing junk");
        return x;
    } catch (const std::exception&) {
        spec_error(spec, "field '" + key + "' is not a number: '" + val + "'");
    }
}

std::uint64_t req_u64(const std::string& spec, const GenFields& f, const std::string& key) {
    auto v = field(f, key);
    if (!v) spec_error(spec, "missing required field '" + key + "'");
    return to_u64(spec, key, *v);
}

// Builds the graph a spec names.  When `seed_override` is set (sweep cells),
// it replaces the seed of the random families so each sweep seed draws a
// fresh instance; deterministic families ignore it.
WeightedGraph make_graph(const std::string& spec, std::optional<std::uint64_t> seed_override) {
    if (spec.rfind("file:", 0) == 0) return load_graph(spec.substr(5));

    const std::vector<std::string> toks = split(spec, ':');
    const std::string& family = toks[0];
    GenFields f;
    for (std::size_t i = 1; i < toks.size(); ++i) {
        const auto eq = toks[i].find('=');
        if (eq == std::string::npos)
            f.bare.push_back(toks[i]);
        else
            f.kv[toks[i].substr(0, eq)] = toks[i].substr(eq + 1);
    }

    if (family == "heawood") return heawood_graph();
    if (family == "pg2") {
        std::uint64_t q = 2;
        if (auto v = field(f, "q"))
            q = to_u64(spec, "q", *v);
        else if (!f.bare.empty())
            q = to_u64(spec, "q", f.bare.front());
        return projective_plane_incidence(static_cast<int>(q));
    }
    if (family == "gnp") {
        const std::uint64_t n = req_u64(spec, f, "n");
        std::uint64_t seed = 0;
        if (auto v = field(f, "seed")) seed = to_u64(spec, "seed", *v);
        if (seed_override) seed = *seed_override;
        WeightMode mode = WeightMode::Unit;
        if (auto v = field(f, "w")) {
            if (*v == "unit")
                mode = WeightMode::Unit;
            else if (*v == "uniform")
                mode = WeightMode::UniformInt;
            else if (*v == "distinct")
                mode = WeightMode::DistinctInt;
            else
                spec_error(spec, "field 'w' must be unit, uniform, or distinct");
        }
        int maxw = 100;
        if (auto v = field(f, "maxw")) maxw = static_cast<int>(to_u64(spec, "maxw", *v));
        if (auto v = field(f, "m"))
            return random_gnm(n, to_u64(spec, "m", *v), mode, seed, maxw);
        auto p = field(f, "p");
        if (!p) spec_error(spec, "needs either p=.. or m=..");
        return random_gnp(n, to_f64(spec, "p", *p), mode, seed, maxw);
    }
    if (family == "blowup") {
        const std::uint64_t fv = req_u64(spec, f, "f");
        const std::uint64_t k = req_u64(spec, f, "k");
        std::uint64_t q = 2;
        if (auto v = field(f, "q")) q = to_u64(spec, "q", *v);
        return lb_instance_stretch2k1(fv, projective_plane_incidence(static_cast<int>(q)),
                                      static_cast<int>(k));
    }
    if (family == "lb3") {
        const std::uint64_t fv = req_u64(spec, f, "f");
        std::uint64_t q = 2;
        if (auto v = field(f, "q")) q = to_u64(spec, "q", *v);
        return lb_instance_stretch3(fv, projective_plane_incidence(static_cast<int>(q)));
    }
    spec_error(spec, "unknown family '" + family +
                         "' (expected pg2, heawood, gnp, blowup, lb3, or file:PATH)");
}

// ---- algorithm dispatch ------------------------------------------------------

struct AlgoRun {
    EmulatorGraph h;
    double d;  // degree-threshold parameter the run used (reported in CSV)
};

CheckMode parse_mode(const std::string& mode) {
    if (mode == "exhaustive") return CheckMode::Exhaustive;
    if (mode == "approx") return CheckMode::Approximate;
    throw std::invalid_argument("mode must be 'exhaustive' or 'approx', got '" + mode + "'");
}

AlgoRun run_algo(const std::string& algo, std::shared_ptr<const WeightedGraph> g, std::size_t f,
                 int k, CheckMode mode, std::uint64_t seed, double polylog_const, double cb,
                 std::optional<std::uint64_t> budget) {
    const std::size_t n = g->num_vertices();
    if (algo == "add2") {
        const AdditiveParams ap = additive2_params(n, f, seed);
        return {build_additive(std::move(g), ap), ap.d};
    }
    if (algo == "add4") {
        const AdditiveParams ap = additive4_params(n, f, seed);
        return {build_additive(std::move(g), ap), ap.d};
    }
    BuildParams p = choose_params(n, f, k, polylog_const, 1.0, cb, mode, seed);
    if (budget) {
        p.subset_cap = *budget;
        p.path_cap = *budget;
    }
    if (algo == "spanner") return {build_vft_spanner_greedy(std::move(g), f, k, p), p.d};
    if (algo == "em5") return {build_vft_5_emulator(std::move(g), f, p), p.d};
    if (algo == "emk") return {build_vft_emulator(std::move(g), f, k, p), p.d};
    throw std::invalid_argument("unknown algorithm '" + algo +
                                "' (expected spanner, em5, emk, add2, add4)");
}

// The guarantee each algorithm is checked against: multiplicative 2k-1 for
// the spanner/emulator builders, additive 2 / 4 for the additive builders.
VerificationReport verify_for(const std::string& algo, const WeightedGraph& g,
                              const EmulatorGraph& h, std::size_t f, int k, std::uint64_t budget) {
    if (algo == "add2") return verify_additive(g, h, f, 2.0, budget);
    if (algo == "add4") return verify_additive(g, h, f, 4.0, budget);
    return verify_multiplicative(g, h, f, 2.0 * k - 1.0, budget);
}

std::string fmt_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

// --budget flag beats the FTEM_BUDGET environment variable, which beats the
// built-in defaults.
std::optional<std::uint64_t> resolve_budget(std::optional<std::uint64_t> flag) {
    if (flag) return flag;
    if (const char* env = std::getenv("FTEM_BUDGET")) {
        const std::string val = env;
        try {
            std::size_t pos = 0;
            const unsigned long long x = std::stoull(val, &pos);
            if (pos != val.size()) throw std::invalid_argument("trailing junk");
            return x;
        } catch (const std::exception&) {
            throw std::invalid_argument("FTEM_BUDGET is not an unsigned integer: '" + val + "'");
        }
    }
    return std::nullopt;
}

// ---- subcommands -------------------------------------------------------------

struct BuildOpts {
    std::string gen, algo, mode = "exhaustive", out;
    std::size_t f = 1;
    int k = 3;
    std::uint64_t seed = 0;
    bool verify = false;
    double polylog_const = 1.0, cb = 1.0;
    std::optional<std::uint64_t> budget;
};

int run_build(const BuildOpts& o) {
    const auto budget = resolve_budget(o.budget);
    auto g = std::make_shared<WeightedGraph>(make_graph(o.gen, std::nullopt));
    const auto t0 = std::chrono::steady_clock::now();
    AlgoRun r = run_algo(o.algo, g, o.f, o.k, parse_mode(o.mode), o.seed, o.polylog_const, o.cb,
                         budget);
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();

    if (o.out.empty())
        r.h.serialize(std::cout);
    else
        r.h.save(o.out);

    std::ostringstream sum;
    sum << "summary: algo=" << o.algo << " n=" << g->num_vertices() << " m=" << g->num_edges()
        << " f=" << o.f << " k=" << o.k << " d=" << fmt_double(r.d)
        << " spanner_edges=" << r.h.num_spanner_edges()
        << " emulator_edges=" << r.h.num_emulator_edges()
        << " total_edges=" << r.h.num_spanner_edges() + r.h.num_emulator_edges() << " ms=" << ms;

    bool ok = true;
    if (o.verify) {
        const VerificationReport rep =
            verify_for(o.algo, *g, r.h, o.f, o.k, budget.value_or(kDefaultVerifyBudget));
        ok = rep.passed;
        sum << " verify=" << (ok ? "PASS" : "FAIL");
        if (!is_inf(rep.worst_stretch)) sum << " worst_stretch=" << fmt_double(rep.worst_stretch);
    }
    std::cout << sum.str() << '\n';
    return ok ? 0 : 1;
}

struct VerifyOpts {
    std::string graph_path, emulator_path;
    std::size_t f = 1;
    std::optional<double> t;
    std::optional<double> additive;
    std::optional<std::uint64_t> budget;
};

int run_verify(const VerifyOpts& o) {
    if (o.t.has_value() == o.additive.has_value())
        throw std::invalid_argument("pass exactly one of --t (multiplicative) or --additive");
    const auto budget = resolve_budget(o.budget).value_or(kDefaultVerifyBudget);
    auto g = std::make_shared<WeightedGraph>(load_graph(o.graph_path));
    const EmulatorGraph h = EmulatorGraph::load(g, o.emulator_path);
    const VerificationReport rep = o.t ? verify_multiplicative(*g, h, o.f, *o.t, budget)
                                       : verify_additive(*g, h, o.f, *o.additive, budget);
    std::cout << rep.to_json() << '\n';
    return rep.passed ? 0 : 1;
}

struct GenOpts {
    std::string gen, out;
};

int run_gen(const GenOpts& o) {
    const WeightedGraph g = make_graph(o.gen, std::nullopt);
    if (o.out.empty()) {
        save_graph(g, std::cout);
    } else {
        save_graph(g, o.out);
        std::cout << "wrote n=" << g.num_vertices() << " m=" << g.num_edges() << " to " << o.out
                  << '\n';
    }
    return 0;
}

struct SweepOpts {
    std::string gen, mode = "exhaustive", out;
    std::vector<std::string> algos;
    std::vector<std::size_t> fs;
    std::vector<int> ks = {3};
    std::vector<std::uint64_t> seeds = {0};
    bool verify = false;
    int jobs = 1;
    double polylog_const = 1.0, cb = 1.0;
    std::optional<std::uint64_t> budget;
};

struct SweepCell {
    std::string algo;
    std::size_t f;
    int k;
    std::uint64_t seed;
};

int run_sweep(const SweepOpts& o) {
    const auto budget = resolve_budget(o.budget);
    const CheckMode mode = parse_mode(o.mode);

    std::vector<SweepCell> cells;
    for (const auto& algo : o.algos)
        for (std::size_t f : o.fs)
            for (int k : o.ks)
                for (std::uint64_t seed : o.seeds) cells.push_back({algo, f, k, seed});
    if (cells.empty()) throw std::invalid_argument("sweep grid is empty (need --algo and --f)");

    std::vector<std::string> rows(cells.size());
    std::vector<std::exception_ptr> errors(cells.size());
    std::atomic<bool> any_fail{false};
    std::atomic<std::size_t> next{0};

    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= cells.size()) return;
            const SweepCell& c = cells[i];
            try {
                auto g = std::make_shared<WeightedGraph>(make_graph(o.gen, c.seed));
                const auto t0 = std::chrono::steady_clock::now();
                AlgoRun r = run_algo(c.algo, g, c.f, c.k, mode, c.seed, o.polylog_const, o.cb,
                                     budget);
                const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                    std::chrono::steady_clock::now() - t0)
                                    .count();
                std::string verified;
                if (o.verify) {
                    const VerificationReport rep = verify_for(
                        c.algo, *g, r.h, c.f, c.k, budget.value_or(kDefaultVerifyBudget));
                    verified = rep.passed ? "1" : "0";
                    if (!rep.passed) any_fail = true;
                }
                std::ostringstream row;
                row << o.gen << ',' << c.algo << ',' << g->num_vertices() << ','
                    << g->num_edges() << ',' << c.f << ',' << c.k << ',' << fmt_double(r.d) << ','
                    << r.h.num_spanner_edges() << ',' << r.h.num_emulator_edges() << ','
                    << r.h.num_spanner_edges() + r.h.num_emulator_edges() << ',' << verified << ','
                    << c.seed << ',' << ms;
                rows[i] = row.str();
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };

    const int jobs = std::max(1, o.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(jobs));
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!o.out.empty()) {
        file.open(o.out);
        if (!file) throw ParseError("cannot write CSV file: " + o.out);
        out = &file;
    }
    *out << "generator,algorithm,n,m,f,k,d,spanner_edges,emulator_edges,total_edges,verified,"
            "seed,ms\n";
    for (const auto& row : rows) *out << row << '\n';
    return any_fail ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fault-tolerant emulator and spanner toolkit"};
    app.require_subcommand(1);

    BuildOpts bo;
    CLI::App* build = app.add_subcommand("build", "build an emulator or spanner on a graph");
    build->add_option("--gen", bo.gen, "generator spec, e.g. gnp:n=12:p=0.5:seed=1")->required();
    build->add_option("--algo", bo.algo, "spanner | em5 | emk | add2 | add4")->required();
    build->add_option("-f,--f", bo.f, "number of tolerated vertex faults")->required();
    build->add_option("-k,--k", bo.k, "stretch parameter (guarantee 2k-1)");
    build->add_option("--seed", bo.seed, "builder random seed");
    build->add_flag("--verify", bo.verify, "verify the guarantee exhaustively after building");
    build->add_option("--mode", bo.mode, "forced-edge check: exhaustive | approx");
    build->add_option("--out", bo.out, "write the emulator here instead of stdout");
    build->add_option("--polylog-const", bo.polylog_const, "scale on the log n factor of d");
    build->add_option("--cb", bo.cb, "scale on the bucket size b = ceil(cb * k * d)");
    build->add_option("--budget", bo.budget, "work cap for checks (beats FTEM_BUDGET)");

    VerifyOpts vo;
    CLI::App* verify = app.add_subcommand("verify", "check an emulator file against its graph");
    verify->add_option("graph", vo.graph_path, "base graph (edge-list file)")->required();
    verify->add_option("emulator", vo.emulator_path, "emulator file")->required();
    verify->add_option("-f,--f", vo.f, "number of tolerated vertex faults")->required();
    verify->add_option("--t", vo.t, "multiplicative stretch bound");
    verify->add_option("--additive", vo.additive, "additive surplus bound");
    verify->add_option("--budget", vo.budget, "work cap (beats FTEM_BUDGET)");

    GenOpts go;
    CLI::App* gen = app.add_subcommand("gen", "emit a generated graph as an edge list");
    gen->add_option("--gen", go.gen, "generator spec")->required();
    gen->add_option("--out", go.out, "write the graph here instead of stdout");

    SweepOpts so;
    CLI::App* sweep = app.add_subcommand("sweep", "run an experiment grid and emit CSV");
    sweep->add_option("--gen", so.gen, "generator spec (random families reseeded per cell)")
        ->required();
    sweep->add_option("--algo", so.algos, "algorithms (repeat or comma-separate)")
        ->required()
        ->delimiter(',');
    sweep->add_option("-f,--f", so.fs, "fault budgets")->required()->delimiter(',');
    sweep->add_option("-k,--k", so.ks, "stretch parameters")->delimiter(',');
    CLI::Option* seeds_opt =
        sweep->add_option("--seeds", so.seeds, "seeds, one cell each")->delimiter(',');
    std::uint64_t single_seed = 0;
    sweep->add_option("--seed", single_seed, "single seed")->excludes(seeds_opt);
    sweep->add_flag("--verify", so.verify, "verify each cell (exhaustive; slow)");
    sweep->add_option("--mode", so.mode, "forced-edge check: exhaustive | approx");
    sweep->add_option("--out", so.out, "CSV output path (default stdout)");
    sweep->add_option("--jobs", so.jobs, "parallel cells");
    sweep->add_option("--polylog-const", so.polylog_const, "scale on the log n factor of d");
    sweep->add_option("--cb", so.cb, "scale on the bucket size b = ceil(cb * k * d)");
    sweep->add_option("--budget", so.budget, "work cap for checks (beats FTEM_BUDGET)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    if (sweep->count("--seed")) so.seeds = {single_seed};

    try {
        if (build->parsed()) return run_build(bo);
        if (verify->parsed()) return run_verify(vo);
        if (gen->parsed()) return run_gen(go);
        if (sweep->parsed()) return run_sweep(so);
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
