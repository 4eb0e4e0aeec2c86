#include "vftem/emulator.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "vftem/errors.hpp"

namespace vftem {

EmulatorGraph::EmulatorGraph(std::shared_ptr<const WeightedGraph> base, int bucket_size)
    : base_(std::move(base)), bucket_size_(bucket_size) {
    if (!base_) throw std::invalid_argument("emulator needs a base graph");
    if (bucket_size < 0) throw std::invalid_argument("bucket size must be >= 0");
    sp_adj_.resize(base_->num_vertices());
    em_adj_.resize(base_->num_vertices());
}

std::uint64_t EmulatorGraph::pair_key(Vertex u, Vertex v) const {
    const auto a = static_cast<std::uint64_t>(std::min(u, v));
    const auto b = static_cast<std::uint64_t>(std::max(u, v));
    return a * base_->num_vertices() + b;
}

EdgeId EmulatorGraph::add_spanner_edge(Vertex u, Vertex v, double w, FaultSet witness) {
    const EdgeId base_edge = base_->find_edge(u, v);
    if (base_edge < 0)
        throw std::invalid_argument("spanner edge {" + std::to_string(u) + "," +
                                    std::to_string(v) + "} is not a base edge");
    if (base_->edge(base_edge).w != w)
        throw std::invalid_argument("spanner edge {" + std::to_string(u) + "," +
                                    std::to_string(v) + "} weight differs from base");
    if (!spanner_edges_.empty() && w < spanner_edges_.back().w)
        throw std::invalid_argument("spanner edges must arrive in nondecreasing weight order");
    if (!sp_keys_.insert(pair_key(u, v)).second)
        throw std::invalid_argument("duplicate spanner edge {" + std::to_string(u) + "," +
                                    std::to_string(v) + "}");
    if (witness.contains(u) || witness.contains(v))
        throw std::invalid_argument("witness of {" + std::to_string(u) + "," +
                                    std::to_string(v) + "} contains an endpoint");
    const Vertex a = std::min(u, v), b = std::max(u, v);
    const EdgeId id = static_cast<EdgeId>(spanner_edges_.size());
    spanner_edges_.push_back(Edge{a, b, w});
    witnesses_.push_back(std::move(witness));
    sp_pos_.emplace_back(static_cast<int>(sp_adj_[static_cast<std::size_t>(a)].size()),
                         static_cast<int>(sp_adj_[static_cast<std::size_t>(b)].size()));
    sp_adj_[static_cast<std::size_t>(a)].emplace_back(b, id);
    sp_adj_[static_cast<std::size_t>(b)].emplace_back(a, id);
    return id;
}

bool EmulatorGraph::add_emulator_edge(Vertex s, Vertex t) {
    if (s == t) throw std::invalid_argument("emulator self-pair at " + std::to_string(s));
    if (s < 0 || t < 0 || static_cast<std::size_t>(s) >= num_vertices() ||
        static_cast<std::size_t>(t) >= num_vertices())
        throw std::out_of_range("emulator pair endpoint out of range");
    if (!em_keys_.insert(pair_key(s, t)).second) return false;
    const Vertex a = std::min(s, t), b = std::max(s, t);
    const int idx = static_cast<int>(emulator_edges_.size());
    emulator_edges_.emplace_back(a, b);
    em_adj_[static_cast<std::size_t>(a)].emplace_back(b, idx);
    em_adj_[static_cast<std::size_t>(b)].emplace_back(a, idx);
    return true;
}

bool EmulatorGraph::has_spanner_edge(Vertex u, Vertex v) const {
    return sp_keys_.count(pair_key(u, v)) != 0;
}

bool EmulatorGraph::has_emulator_edge(Vertex u, Vertex v) const {
    return em_keys_.count(pair_key(u, v)) != 0;
}

bool EmulatorGraph::has_edge(Vertex u, Vertex v) const {
    return has_spanner_edge(u, v) || has_emulator_edge(u, v);
}

int EmulatorGraph::bucket_of(Vertex v, EdgeId e) const {
    if (bucket_size_ <= 0) throw std::logic_error("emulator has no bucket structure");
    if (e < 0 || static_cast<std::size_t>(e) >= spanner_edges_.size())
        throw std::out_of_range("spanner edge id out of range");
    const Edge& edge = spanner_edges_[static_cast<std::size_t>(e)];
    int pos;
    if (edge.u == v)
        pos = sp_pos_[static_cast<std::size_t>(e)].first;
    else if (edge.v == v)
        pos = sp_pos_[static_cast<std::size_t>(e)].second;
    else
        throw std::invalid_argument("edge " + std::to_string(e) + " is not incident to vertex " +
                                    std::to_string(v));
    return pos / bucket_size_;
}

// --- serialization -----------------------------------------------------------

void EmulatorGraph::serialize(std::ostream& out) const {
    out << "SPANNER\n";
    for (const Edge& e : spanner_edges_)
        out << e.u << ' ' << e.v << ' ' << format_weight(e.w) << '\n';
    out << "EMULATOR\n";
    for (const auto& [s, t] : emulator_edges_) out << s << ' ' << t << '\n';
    out << "WITNESS\n";
    for (std::size_t i = 0; i < spanner_edges_.size(); ++i) {
        out << spanner_edges_[i].u << ' ' << spanner_edges_[i].v << " :";
        for (Vertex x : witnesses_[i]) out << ' ' << x;
        out << '\n';
    }
    if (bucket_size_ > 0) out << "BUCKETS\nb " << bucket_size_ << '\n';
}

std::string EmulatorGraph::serialize() const {
    std::ostringstream out;
    serialize(out);
    return out.str();
}

namespace {

bool blank_or_comment(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

EmulatorGraph EmulatorGraph::parse(std::shared_ptr<const WeightedGraph> base, std::istream& in) {
    if (!base) throw std::invalid_argument("emulator needs a base graph");
    enum class Section { None, Spanner, Emulator, Witness, Buckets };
    Section section = Section::None;

    struct SpannerLine {
        Vertex u, v;
        double w;
    };
    std::vector<SpannerLine> spanner;
    std::vector<std::pair<Vertex, Vertex>> emulator;
    std::vector<std::pair<std::pair<Vertex, Vertex>, FaultSet>> witness;
    int bucket_size = 0;

    std::string line;
    std::size_t line_no = 0;
    auto fail = [&](const std::string& why) -> void {
        throw ParseError("line " + std::to_string(line_no) + ": " + why);
    };

    while (std::getline(in, line)) {
        ++line_no;
        if (blank_or_comment(line)) continue;
        if (line == "SPANNER") { section = Section::Spanner; continue; }
        if (line == "EMULATOR") { section = Section::Emulator; continue; }
        if (line == "WITNESS") { section = Section::Witness; continue; }
        if (line == "BUCKETS") { section = Section::Buckets; continue; }
        std::istringstream ls(line);
        switch (section) {
            case Section::None:
                fail("content before any section header");
                break;
            case Section::Spanner: {
                long long u, v;
                double w;
                if (!(ls >> u >> v >> w)) fail("expected 'u v w'");
                spanner.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), w});
                break;
            }
            case Section::Emulator: {
                long long s, t;
                if (!(ls >> s >> t)) fail("expected 's t'");
                emulator.emplace_back(static_cast<Vertex>(s), static_cast<Vertex>(t));
                break;
            }
            case Section::Witness: {
                long long u, v;
                std::string colon;
                if (!(ls >> u >> v >> colon) || colon != ":") fail("expected 'u v : f1 f2 ...'");
                std::vector<Vertex> fs;
                long long x;
                while (ls >> x) fs.push_back(static_cast<Vertex>(x));
                witness.emplace_back(
                    std::make_pair(static_cast<Vertex>(u), static_cast<Vertex>(v)),
                    FaultSet(std::move(fs)));
                break;
            }
            case Section::Buckets: {
                std::string tag;
                long long b;
                if (!(ls >> tag >> b) || tag != "b" || b < 0) fail("expected 'b <size>'");
                bucket_size = static_cast<int>(b);
                break;
            }
        }
    }

    if (!witness.empty() && witness.size() != spanner.size())
        throw ParseError("WITNESS section must list every spanner edge exactly once");

    EmulatorGraph h(std::move(base), bucket_size);
    try {
        for (std::size_t i = 0; i < spanner.size(); ++i) {
            FaultSet fs;
            if (!witness.empty()) {
                if (witness[i].first.first != spanner[i].u || witness[i].first.second != spanner[i].v)
                    throw ParseError("WITNESS entries must follow spanner edge order");
                fs = witness[i].second;
            }
            h.add_spanner_edge(spanner[i].u, spanner[i].v, spanner[i].w, std::move(fs));
        }
        for (const auto& [s, t] : emulator)
            if (!h.add_emulator_edge(s, t)) throw ParseError("duplicate emulator pair");
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    } catch (const std::out_of_range& e) {
        throw ParseError(e.what());
    }
    return h;
}

EmulatorGraph EmulatorGraph::parse(std::shared_ptr<const WeightedGraph> base,
                                   const std::string& text) {
    std::istringstream in(text);
    return parse(std::move(base), in);
}

EmulatorGraph EmulatorGraph::load(std::shared_ptr<const WeightedGraph> base,
                                  const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open emulator file: " + path);
    try {
        return parse(std::move(base), in);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void EmulatorGraph::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write emulator file: " + path);
    serialize(out);
}

}  // namespace vftem
