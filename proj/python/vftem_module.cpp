// Python bindings for the fault-tolerant emulator library: graphs, builders,
// verifiers, fault-set oracles, distances, and graph-family generators.
#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "vftem/additive.hpp"
#include "vftem/builder.hpp"
#include "vftem/constructions.hpp"
#include "vftem/distances.hpp"
#include "vftem/emulator.hpp"
#include "vftem/errors.hpp"
#include "vftem/graph.hpp"
#include "vftem/oracle.hpp"
#include "vftem/rng.hpp"
#include "vftem/verifier.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace vftem;

namespace {

std::vector<Edge> edges_from_sequence(const py::sequence& seq) {
    std::vector<Edge> es;
    es.reserve(seq.size());
    for (const auto& item : seq) {
        if (py::isinstance<Edge>(item)) {
            es.push_back(item.cast<Edge>());
            continue;
        }
        const auto t = item.cast<py::sequence>();
        if (t.size() == 2)
            es.push_back(Edge{t[0].cast<Vertex>(), t[1].cast<Vertex>(), 1.0});
        else if (t.size() == 3)
            es.push_back(Edge{t[0].cast<Vertex>(), t[1].cast<Vertex>(), t[2].cast<double>()});
        else
            throw std::invalid_argument("edge must be (u, v) or (u, v, w)");
    }
    return es;
}

}  // namespace

PYBIND11_MODULE(vftem, m) {
    m.doc() = "vertex fault-tolerant emulators and spanners";

    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<Edge>(m, "Edge")
        .def(py::init([](Vertex u, Vertex v, double w) { return Edge{u, v, w}; }), "u"_a, "v"_a,
             "w"_a = 1.0)
        .def_readwrite("u", &Edge::u)
        .def_readwrite("v", &Edge::v)
        .def_readwrite("w", &Edge::w)
        .def("__repr__", [](const Edge& e) {
            std::ostringstream s;
            s << "Edge(" << e.u << ", " << e.v << ", " << format_weight(e.w) << ")";
            return s.str();
        });

    py::class_<FaultSet>(m, "FaultSet")
        .def(py::init<>())
        .def(py::init<std::vector<Vertex>>(), "vertices"_a)
        .def("contains", &FaultSet::contains, "v"_a)
        .def("insert", &FaultSet::insert, "v"_a)
        .def("__len__", &FaultSet::size)
        .def_property_readonly("vertices",
                               [](const FaultSet& f) { return f.vertices(); })
        .def(py::self == py::self)
        .def("__repr__", [](const FaultSet& f) {
            std::ostringstream s;
            s << "FaultSet([";
            for (std::size_t i = 0; i < f.vertices().size(); ++i)
                s << (i ? ", " : "") << f.vertices()[i];
            s << "])";
            return s.str();
        });

    py::class_<WeightedGraph, std::shared_ptr<WeightedGraph>>(m, "WeightedGraph")
        .def_static(
            "from_edges",
            [](std::size_t n, const py::sequence& edges) {
                return WeightedGraph::from_edges(n, edges_from_sequence(edges));
            },
            "n"_a, "edges"_a)
        .def_property_readonly("num_vertices", &WeightedGraph::num_vertices)
        .def_property_readonly("num_edges", &WeightedGraph::num_edges)
        .def("edges", [](const WeightedGraph& g) { return g.edges(); })
        .def("edge", &WeightedGraph::edge, "e"_a, py::return_value_policy::copy)
        .def("neighbors", [](const WeightedGraph& g, Vertex v) { return g.neighbors(v); }, "v"_a)
        .def("degree", &WeightedGraph::degree, "v"_a)
        .def("find_edge", &WeightedGraph::find_edge, "u"_a, "v"_a)
        .def("is_unit_weighted", &WeightedGraph::is_unit_weighted)
        .def("unit_weighted_view", &WeightedGraph::unit_weighted_view)
        .def_property("comment", &WeightedGraph::comment, &WeightedGraph::set_comment)
        .def("to_text",
             [](const WeightedGraph& g) {
                 std::ostringstream out;
                 save_graph(g, out);
                 return out.str();
             })
        .def("save", [](const WeightedGraph& g, const std::string& path) { save_graph(g, path); },
             "path"_a)
        .def("__repr__", [](const WeightedGraph& g) {
            std::ostringstream s;
            s << "WeightedGraph(n=" << g.num_vertices() << ", m=" << g.num_edges() << ")";
            return s.str();
        });

    m.def("parse_graph", py::overload_cast<const std::string&>(&parse_graph), "text"_a);
    m.def("load_graph", &load_graph, "path"_a);

    py::class_<LocalPath>(m, "LocalPath")
        .def_readonly("vertices", &LocalPath::vertices)
        .def_readonly("edges", &LocalPath::edges)
        .def("num_edges", &LocalPath::num_edges);

    py::class_<EmulatorGraph>(m, "EmulatorGraph")
        .def(py::init<std::shared_ptr<const WeightedGraph>, int>(), "base"_a,
             "bucket_size"_a = 0)
        .def_property_readonly("base", &EmulatorGraph::base_ptr)
        .def("add_spanner_edge", &EmulatorGraph::add_spanner_edge, "u"_a, "v"_a, "w"_a,
             "witness"_a = FaultSet())
        .def("add_emulator_edge", &EmulatorGraph::add_emulator_edge, "s"_a, "t"_a)
        .def_property_readonly("num_vertices", &EmulatorGraph::num_vertices)
        .def_property_readonly("num_spanner_edges", &EmulatorGraph::num_spanner_edges)
        .def_property_readonly("num_emulator_edges", &EmulatorGraph::num_emulator_edges)
        .def_property_readonly("num_edges", &EmulatorGraph::num_edges)
        .def("spanner_edges", [](const EmulatorGraph& h) { return h.spanner_edges(); })
        .def("emulator_edges", [](const EmulatorGraph& h) { return h.emulator_edges(); })
        .def("witness", &EmulatorGraph::witness, "spanner_edge"_a,
             py::return_value_policy::copy)
        .def("has_spanner_edge", &EmulatorGraph::has_spanner_edge, "u"_a, "v"_a)
        .def("has_emulator_edge", &EmulatorGraph::has_emulator_edge, "u"_a, "v"_a)
        .def("has_edge", &EmulatorGraph::has_edge, "u"_a, "v"_a)
        .def_property_readonly("bucket_size", &EmulatorGraph::bucket_size)
        .def("has_buckets", &EmulatorGraph::has_buckets)
        .def("bucket_of", &EmulatorGraph::bucket_of, "v"_a, "e"_a)
        .def("serialize", py::overload_cast<>(&EmulatorGraph::serialize, py::const_))
        .def("save", &EmulatorGraph::save, "path"_a)
        .def_static("parse",
                    py::overload_cast<std::shared_ptr<const WeightedGraph>, const std::string&>(
                        &EmulatorGraph::parse),
                    "base"_a, "text"_a)
        .def_static("load", &EmulatorGraph::load, "base"_a, "path"_a)
        .def("__repr__", [](const EmulatorGraph& h) {
            std::ostringstream s;
            s << "EmulatorGraph(n=" << h.num_vertices() << ", spanner=" << h.num_spanner_edges()
              << ", emulator=" << h.num_emulator_edges() << ")";
            return s.str();
        });

    // --- distances -----------------------------------------------------------

    m.def("graph_dist", &graph_dist, "g"_a, "faults"_a, "u"_a, "v"_a);
    m.def("emulator_dist", &emulator_dist, "h"_a, "faults"_a, "u"_a, "v"_a);
    m.def("hop_dist", &hop_dist, "h"_a, "g"_a, "faults"_a, "u"_a, "v"_a);

    // --- fault-set oracles -----------------------------------------------------

    py::enum_<WitnessMethod>(m, "WitnessMethod")
        .value("Exhaustive", WitnessMethod::Exhaustive)
        .value("Approximate", WitnessMethod::Approximate);

    py::class_<WitnessResult>(m, "WitnessResult")
        .def_readonly("forced", &WitnessResult::forced)
        .def_readonly("fault_set", &WitnessResult::fault_set)
        .def_readonly("method", &WitnessResult::method)
        .def_readonly("iterations", &WitnessResult::iterations)
        .def("__repr__", [](const WitnessResult& r) {
            std::ostringstream s;
            s << "WitnessResult(forced=" << (r.forced ? "True" : "False") << ")";
            return s.str();
        });

    m.def("exhaustive_witness", &exhaustive_witness, "h"_a, "u"_a, "v"_a, "f"_a, "bound"_a,
          "subset_cap"_a = kDefaultSubsetCap);
    m.def("find_fault_set", &find_fault_set, "g"_a, "h"_a, "u"_a, "v"_a, "k"_a, "f"_a);

    // --- builders ---------------------------------------------------------------

    py::enum_<CheckMode>(m, "CheckMode")
        .value("Exhaustive", CheckMode::Exhaustive)
        .value("Approximate", CheckMode::Approximate);

    py::class_<BuildParams>(m, "BuildParams")
        .def(py::init<>())
        .def_readwrite("f", &BuildParams::f)
        .def_readwrite("k", &BuildParams::k)
        .def_readwrite("d", &BuildParams::d)
        .def_readwrite("b", &BuildParams::b)
        .def_readwrite("check_mode", &BuildParams::check_mode)
        .def_readwrite("seed", &BuildParams::seed)
        .def_readwrite("polylog_constant", &BuildParams::polylog_constant)
        .def_readwrite("c", &BuildParams::c)
        .def_readwrite("c_b", &BuildParams::c_b)
        .def_readwrite("subset_cap", &BuildParams::subset_cap)
        .def_readwrite("path_cap", &BuildParams::path_cap)
        .def_readwrite("include_non_simple", &BuildParams::include_non_simple)
        .def("__repr__", [](const BuildParams& p) {
            std::ostringstream s;
            s << "BuildParams(f=" << p.f << ", k=" << p.k << ", d=" << p.d << ", b=" << p.b
              << ")";
            return s.str();
        });

    m.def("choose_params", &choose_params, "n"_a, "f"_a, "k"_a, "polylog_constant"_a = 1.0,
          "c"_a = 1.0, "c_b"_a = 1.0, "mode"_a = CheckMode::Exhaustive, "seed"_a = 0);

    m.def("build_vft_5_emulator", &build_vft_5_emulator, "g"_a, "f"_a, "params"_a,
          "observer"_a = BuildObserver{});
    m.def("build_vft_emulator", &build_vft_emulator, "g"_a, "f"_a, "k"_a, "params"_a,
          "observer"_a = BuildObserver{});
    m.def("build_vft_spanner_greedy", &build_vft_spanner_greedy, "g"_a, "f"_a, "k"_a, "params"_a,
          "observer"_a = BuildObserver{});
    m.def("enumerate_local_paths_through", &enumerate_local_paths_through, "h"_a, "e"_a,
          "max_edges"_a, "path_cap"_a = 100'000'000, "include_non_simple"_a = false);

    // --- additive builders --------------------------------------------------------

    py::class_<AdditiveParams>(m, "AdditiveParams")
        .def(py::init<>())
        .def_readwrite("f", &AdditiveParams::f)
        .def_readwrite("d", &AdditiveParams::d)
        .def_readwrite("p", &AdditiveParams::p)
        .def_readwrite("seed", &AdditiveParams::seed);

    m.def("additive4_params", &additive4_params, "n"_a, "f"_a, "seed"_a = 0);
    m.def("additive2_params", &additive2_params, "n"_a, "f"_a, "seed"_a = 0);
    m.def("build_additive", &build_additive, "g"_a, "params"_a);
    m.def("build_additive4", &build_additive4, "g"_a, "f"_a, "seed"_a = 0);
    m.def("build_additive2", &build_additive2, "g"_a, "f"_a, "seed"_a = 0);

    // --- verification ---------------------------------------------------------------

    py::class_<Violation>(m, "Violation")
        .def_readonly("faults", &Violation::faults)
        .def_readonly("u", &Violation::u)
        .def_readonly("v", &Violation::v)
        .def_readonly("got", &Violation::got)
        .def_readonly("allowed", &Violation::allowed);

    py::class_<VerificationReport>(m, "VerificationReport")
        .def_readonly("passed", &VerificationReport::passed)
        .def_readonly("checked_pairs", &VerificationReport::checked_pairs)
        .def_readonly("violation_count", &VerificationReport::violation_count)
        .def_readonly("worst_stretch", &VerificationReport::worst_stretch)
        .def_readonly("violations", &VerificationReport::violations)
        .def("to_json", &VerificationReport::to_json)
        .def("__repr__", [](const VerificationReport& r) {
            std::ostringstream s;
            s << "VerificationReport(passed=" << (r.passed ? "True" : "False")
              << ", checked_pairs=" << r.checked_pairs << ")";
            return s.str();
        });

    m.def("verify_multiplicative", &verify_multiplicative, "g"_a, "h"_a, "f"_a, "t"_a,
          "budget"_a = kDefaultVerifyBudget);
    m.def("verify_additive", &verify_additive, "g"_a, "h"_a, "f"_a, "c"_a,
          "budget"_a = kDefaultVerifyBudget);
    m.def("count_middle_heavy_3paths", &count_middle_heavy_3paths, "h"_a);
    m.def("count_alternating_kpaths", &count_alternating_kpaths, "g"_a, "k"_a,
          "edge_simple"_a = false);
    m.def("is_local", &is_local, "path"_a, "h"_a);
    m.def("is_sala", &is_sala, "path"_a, "h"_a);

    // --- graph families ---------------------------------------------------------------

    py::enum_<WeightMode>(m, "WeightMode")
        .value("Unit", WeightMode::Unit)
        .value("UniformInt", WeightMode::UniformInt)
        .value("DistinctInt", WeightMode::DistinctInt);

    m.def("blow_up", &blow_up, "g"_a, "t"_a);
    m.def("lb_instance_stretch3", &lb_instance_stretch3, "f"_a, "base"_a);
    m.def("lb_instance_stretch2k1", &lb_instance_stretch2k1, "f"_a, "base"_a, "k"_a);
    m.def("projective_plane_incidence", &projective_plane_incidence, "q"_a);
    m.def("heawood_graph", &heawood_graph);
    m.def("girth", &girth, "g"_a);
    m.def("random_gnp", &random_gnp, "n"_a, "p"_a, "mode"_a = WeightMode::Unit, "seed"_a = 0,
          "max_weight"_a = 100);
    m.def("random_gnm", &random_gnm, "n"_a, "m"_a, "mode"_a = WeightMode::Unit, "seed"_a = 0,
          "max_weight"_a = 100);

    // The seed-derivation rule shared by every random component: a named
    // stream seeded from (seed, tag).
    m.def("derive_stream", &derive_stream, "seed"_a, "tag"_a);
}
