#include <cstdio>
#include <memory>
#include <string>

#include "doctest.h"
#include "helpers.hpp"
#include "vftem/builder.hpp"
#include "vftem/constructions.hpp"
#include "vftem/errors.hpp"
#include "vftem/graph.hpp"

using namespace vftem;
using testutil::path_graph;

namespace {

std::shared_ptr<const WeightedGraph> share(WeightedGraph g) {
    return std::make_shared<const WeightedGraph>(std::move(g));
}

EmulatorGraph fixture(const std::shared_ptr<const WeightedGraph>& base) {
    EmulatorGraph h(base, 2);
    h.add_spanner_edge(1, 0, 1.0, {});     // reversed input, stored 0 1
    h.add_spanner_edge(1, 2, 2.0, {3});
    h.add_spanner_edge(3, 2, 2.5, {0});
    h.add_emulator_edge(3, 0);
    h.add_emulator_edge(0, 2);
    return h;
}

std::shared_ptr<const WeightedGraph> fixture_base() {
    return share(WeightedGraph::from_edges(4, {{0, 1, 1.0}, {1, 2, 2.0}, {2, 3, 2.5}}));
}

}  // namespace

TEST_SUITE_BEGIN("emulator serialization");

TEST_CASE("the text form is exact and normalized") {
    const EmulatorGraph h = fixture(fixture_base());
    CHECK(h.serialize() ==
          "SPANNER\n"
          "0 1 1\n"
          "1 2 2\n"
          "2 3 2.5\n"
          "EMULATOR\n"
          "0 3\n"
          "0 2\n"
          "WITNESS\n"
          "0 1 :\n"
          "1 2 : 3\n"
          "2 3 : 0\n"
          "BUCKETS\n"
          "b 2\n");
}

TEST_CASE("serialization is a fixpoint under parse") {
    auto base = fixture_base();
    const EmulatorGraph h = fixture(base);
    const std::string text = h.serialize();
    const EmulatorGraph back = EmulatorGraph::parse(base, text);
    CHECK(back.serialize() == text);
    CHECK(back.num_spanner_edges() == 3);
    CHECK(back.num_emulator_edges() == 2);
    CHECK(back.bucket_size() == 2);
    CHECK(back.witness(1) == FaultSet{3});
    CHECK(back.has_emulator_edge(0, 3));
    // arrival order (and with it the bucket structure) survives the trip
    CHECK(back.bucket_of(2, 1) == h.bucket_of(2, 1));
    CHECK(back.bucket_of(2, 2) == h.bucket_of(2, 2));
}

TEST_CASE("bucketless emulators omit the bucket section") {
    auto base = fixture_base();
    EmulatorGraph h(base);
    h.add_spanner_edge(0, 1, 1.0, {});
    const std::string text = h.serialize();
    CHECK(text.find("BUCKETS") == std::string::npos);
    const EmulatorGraph back = EmulatorGraph::parse(base, text);
    CHECK_FALSE(back.has_buckets());
}

TEST_CASE("file save and load round trip") {
    auto base = fixture_base();
    const EmulatorGraph h = fixture(base);
    const std::string path = "/tmp/vftem_test_emulator.txt";
    h.save(path);
    const EmulatorGraph back = EmulatorGraph::load(base, path);
    CHECK(back.serialize() == h.serialize());
    std::remove(path.c_str());

    const std::string gpath = "/tmp/vftem_test_graph.txt";
    save_graph(*base, gpath);
    const WeightedGraph gback = load_graph(gpath);
    CHECK(gback.num_vertices() == base->num_vertices());
    CHECK(gback.num_edges() == base->num_edges());
    std::remove(gpath.c_str());
}

TEST_CASE("parse validates content against the base graph") {
    auto base = fixture_base();
    // spanner edge absent from the base
    CHECK_THROWS_AS(EmulatorGraph::parse(base, "SPANNER\n0 2 1\n"), ParseError);
    // weight disagrees with the base
    CHECK_THROWS_AS(EmulatorGraph::parse(base, "SPANNER\n0 1 9\n"), ParseError);
    // decreasing weight order
    CHECK_THROWS_AS(EmulatorGraph::parse(base, "SPANNER\n1 2 2\n0 1 1\n"), ParseError);
    // emulator endpoint out of range
    CHECK_THROWS_AS(EmulatorGraph::parse(base, "EMULATOR\n0 9\n"), ParseError);
    // duplicate emulator pair
    CHECK_THROWS_AS(EmulatorGraph::parse(base, "EMULATOR\n0 2\n2 0\n"), ParseError);
    // content before any section
    CHECK_THROWS_AS(EmulatorGraph::parse(base, "0 1 1\n"), ParseError);
    // malformed witness line
    CHECK_THROWS_AS(EmulatorGraph::parse(base, "SPANNER\n0 1 1\nWITNESS\n0 1 3\n"), ParseError);
    // witness list not matching the spanner edges
    CHECK_THROWS_AS(
        EmulatorGraph::parse(base, "SPANNER\n0 1 1\n1 2 2\nWITNESS\n0 1 :\n"), ParseError);
    // witness entries out of order
    CHECK_THROWS_AS(
        EmulatorGraph::parse(base,
                             "SPANNER\n0 1 1\n1 2 2\nWITNESS\n1 2 :\n0 1 :\n"),
        ParseError);
    // malformed bucket line
    CHECK_THROWS_AS(EmulatorGraph::parse(base, "BUCKETS\nsize 2\n"), ParseError);
}

TEST_CASE("parse accepts comments and witness-free emulators") {
    auto base = fixture_base();
    const EmulatorGraph h =
        EmulatorGraph::parse(base, "# comment\nSPANNER\n0 1 1\n\nEMULATOR\n1 3\n");
    CHECK(h.num_spanner_edges() == 1);
    CHECK(h.witness(0).empty());
    CHECK(h.has_emulator_edge(1, 3));
}

TEST_CASE("builder outputs serialize byte-identically across rebuilds") {
    for (std::uint64_t seed : {2u, 4u}) {
        auto g = share(random_gnp(12, 0.5, WeightMode::DistinctInt, 900 + seed));
        const BuildParams p = choose_params(12, 1, 3, 1.0, 1.0, 1.0, CheckMode::Exhaustive, seed);
        const std::string a = build_vft_emulator(g, 1, 3, p).serialize();
        const std::string b = build_vft_emulator(g, 1, 3, p).serialize();
        CHECK(a == b);
        const EmulatorGraph back = EmulatorGraph::parse(g, a);
        CHECK(back.serialize() == a);
    }
}

TEST_SUITE_END();
