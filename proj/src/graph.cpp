#include "vftem/graph.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "vftem/errors.hpp"

namespace vftem {

// --- FaultSet ---------------------------------------------------------------

FaultSet::FaultSet(std::initializer_list<Vertex> vs) : FaultSet(std::vector<Vertex>(vs)) {}

FaultSet::FaultSet(std::vector<Vertex> vs) : vs_(std::move(vs)) {
    std::sort(vs_.begin(), vs_.end());
    vs_.erase(std::unique(vs_.begin(), vs_.end()), vs_.end());
}

bool FaultSet::contains(Vertex v) const {
    return std::binary_search(vs_.begin(), vs_.end(), v);
}

void FaultSet::insert(Vertex v) {
    auto it = std::lower_bound(vs_.begin(), vs_.end(), v);
    if (it == vs_.end() || *it != v) vs_.insert(it, v);
}

std::vector<char> FaultSet::mask(std::size_t n) const {
    std::vector<char> m(n, 0);
    for (Vertex v : vs_) {
        if (v < 0 || static_cast<std::size_t>(v) >= n)
            throw std::out_of_range("fault vertex " + std::to_string(v) + " out of range");
        m[static_cast<std::size_t>(v)] = 1;
    }
    return m;
}

// --- WeightedGraph ------------------------------------------------------------

WeightedGraph WeightedGraph::from_edges(std::size_t n, std::vector<Edge> edges) {
    WeightedGraph g;
    g.n_ = n;
    g.adj_.resize(n);
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(edges.size() * 2);
    g.edges_.reserve(edges.size());
    for (const Edge& e : edges) {
        if (e.u < 0 || e.v < 0 || static_cast<std::size_t>(e.u) >= n ||
            static_cast<std::size_t>(e.v) >= n)
            throw std::invalid_argument("edge {" + std::to_string(e.u) + "," +
                                        std::to_string(e.v) + "} out of range for n=" +
                                        std::to_string(n));
        if (e.u == e.v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
        if (!(e.w > 0) || !std::isfinite(e.w))
            throw std::invalid_argument("edge {" + std::to_string(e.u) + "," +
                                        std::to_string(e.v) +
                                        "} has non-positive or non-finite weight");
        const Vertex a = std::min(e.u, e.v), b = std::max(e.u, e.v);
        const std::uint64_t key =
            static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(n) +
            static_cast<std::uint64_t>(b);
        if (!seen.insert(key).second)
            throw std::invalid_argument("duplicate edge {" + std::to_string(a) + "," +
                                        std::to_string(b) + "}");
        const EdgeId id = static_cast<EdgeId>(g.edges_.size());
        g.edges_.push_back(e);
        g.adj_[static_cast<std::size_t>(e.u)].emplace_back(e.v, id);
        g.adj_[static_cast<std::size_t>(e.v)].emplace_back(e.u, id);
    }
    return g;
}

EdgeId WeightedGraph::find_edge(Vertex u, Vertex v) const {
    if (u < 0 || static_cast<std::size_t>(u) >= n_) return -1;
    for (const auto& [nb, id] : adj_[static_cast<std::size_t>(u)])
        if (nb == v) return id;
    return -1;
}

bool WeightedGraph::is_unit_weighted() const {
    return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.w == 1.0; });
}

WeightedGraph WeightedGraph::unit_weighted_view() const {
    std::vector<Edge> es = edges_;
    for (Edge& e : es) e.w = 1.0;
    WeightedGraph g = from_edges(n_, std::move(es));
    g.comment_ = comment_;
    return g;
}

// --- text format ---------------------------------------------------------------

std::string format_weight(double w) {
    if (w == std::floor(w) && std::abs(w) < 9.007199254740992e15) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(w));
        return buf;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", w);
    return buf;
}

namespace {

bool is_blank_or_comment(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& why) {
    throw ParseError("line " + std::to_string(line_no) + ": " + why);
}

}  // namespace

WeightedGraph parse_graph(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    long long n = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_blank_or_comment(line)) continue;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n) || n < 0) parse_fail(line_no, "expected vertex count");
            std::string extra;
            if (ls >> extra) parse_fail(line_no, "unexpected token '" + extra + "' after vertex count");
            continue;
        }
        long long u, v;
        if (!(ls >> u >> v)) parse_fail(line_no, "expected 'u v [w]'");
        double w = 1.0;
        std::string wtok;
        if (ls >> wtok) {
            std::size_t pos = 0;
            try {
                w = std::stod(wtok, &pos);
            } catch (const std::exception&) {
                parse_fail(line_no, "bad weight '" + wtok + "'");
            }
            if (pos != wtok.size()) parse_fail(line_no, "bad weight '" + wtok + "'");
            std::string extra;
            if (ls >> extra) parse_fail(line_no, "unexpected token '" + extra + "'");
        }
        if (u < 0 || v < 0 || u >= n || v >= n)
            parse_fail(line_no, "endpoint out of range [0," + std::to_string(n) + ")");
        edges.push_back(Edge{static_cast<Vertex>(u), static_cast<Vertex>(v), w});
    }
    if (n < 0) throw ParseError("empty input: missing vertex count line");
    try {
        return WeightedGraph::from_edges(static_cast<std::size_t>(n), std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

WeightedGraph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

WeightedGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open graph file: " + path);
    try {
        return parse_graph(in);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void save_graph(const WeightedGraph& g, std::ostream& out) {
    if (!g.comment().empty()) out << "# " << g.comment() << '\n';
    out << g.num_vertices() << '\n';
    for (const Edge& e : g.edges()) {
        const Vertex a = std::min(e.u, e.v), b = std::max(e.u, e.v);
        out << a << ' ' << b << ' ' << format_weight(e.w) << '\n';
    }
}

void save_graph(const WeightedGraph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write graph file: " + path);
    save_graph(g, out);
}

}  // namespace vftem
