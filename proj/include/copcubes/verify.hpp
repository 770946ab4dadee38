#ifndef COPCUBES_VERIFY_HPP
#define COPCUBES_VERIFY_HPP

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "copcubes/distance.hpp"
#include "copcubes/graph.hpp"

namespace copcubes {

// Outcome of a structural check.  For failing checks the witness is the
// lexicographically first violation (by vertex/pair/triple index order);
// two_ball_center also attaches a witness (the center) on success.
struct CheckReport {
    bool verdict = false;
    std::optional<std::string> witness;            // "<kind>:<indices>"
    std::map<int, long long> histogram;            // common-neighbor multiplicities, when computed

    std::string serialize() const {
        std::string s = verdict ? "verdict=true" : "verdict=false";
        if (witness) s += " witness=" + *witness;
        return s;
    }
    static CheckReport pass() { return CheckReport{true, std::nullopt, {}}; }
    static CheckReport fail(std::string w) { return CheckReport{false, std::move(w), {}}; }
};

// Total map from source vertex indices into a target graph's vertex indices.
using VertexMap = std::vector<int>;

namespace detail {
inline std::string idx2(int a, int b) { return std::to_string(a) + "," + std::to_string(b); }
inline std::string idx3(int a, int b, int c) {
    return std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c);
}
} // namespace detail

// True iff g is connected and the graph distance of every vertex pair equals
// the Hamming distance of their labels, i.e. the labeling embeds g
// isometrically in the ambient hypercube.
inline CheckReport verify_isometric_in_hypercube(const LabeledGraph& g) {
    int n = g.num_vertices();
    if (n == 0) return CheckReport::fail("empty:0");
    DistanceMatrix d = all_pairs_distances(g);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (d.at(u, v) == DistanceMatrix::kInfinity)
                return CheckReport::fail("disconnected:" + detail::idx2(u, v));
            if (d.at(u, v) != hamming(g.labels[static_cast<std::size_t>(u)], g.labels[static_cast<std::size_t>(v)]))
                return CheckReport::fail("distance-mismatch:" + detail::idx2(u, v));
        }
    return CheckReport::pass();
}

// True iff every vertex triple has exactly one median (a vertex lying on
// shortest paths between all three pairs).
inline CheckReport is_median(const LabeledGraph& g) {
    int n = g.num_vertices();
    if (n == 0) throw PreconditionError("median check on empty graph");
    if (!g.is_connected()) throw PreconditionError("median check requires a connected graph");
    DistanceMatrix d = all_pairs_distances(g);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            for (int w = v + 1; w < n; ++w) {
                int count = 0;
                for (int m = 0; m < n; ++m) {
                    if (d.at(u, m) + d.at(m, v) != d.at(u, v)) continue;
                    if (d.at(v, m) + d.at(m, w) != d.at(v, w)) continue;
                    if (d.at(u, m) + d.at(m, w) != d.at(u, w)) continue;
                    ++count;
                }
                if (count != 1)
                    return CheckReport::fail((count == 0 ? "no-median:" : "multiple-medians:") +
                                             detail::idx3(u, v, w));
            }
    return CheckReport::pass();
}

// True iff every vertex pair at distance 2 has at most two common neighbors.
// On success the report's histogram maps each common-neighbor count to the
// number of distance-2 pairs realizing it.
inline CheckReport check_lemma31(const LabeledGraph& g) {
    int n = g.num_vertices();
    DistanceMatrix d = all_pairs_distances(g);
    std::map<int, long long> hist;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (d.at(u, v) != 2) continue;
            int common = 0;
            const auto& au = g.adj[static_cast<std::size_t>(u)];
            for (int w : au)
                if (g.has_edge(w, v)) ++common;
            if (common > 2) return CheckReport::fail("common-neighbors:" + detail::idx2(u, v));
            ++hist[common];
        }
    CheckReport r = CheckReport::pass();
    r.histogram = std::move(hist);
    return r;
}

// True iff r fixes the subgraph induced by h_vertices pointwise and maps every
// edge of g to an equal pair or an edge of that subgraph.
inline CheckReport verify_retraction(const LabeledGraph& g, const std::vector<int>& h_vertices,
                                     const VertexMap& r) {
    int n = g.num_vertices();
    if (static_cast<int>(r.size()) != n) throw PreconditionError("map must be total on the vertex set");
    std::vector<char> in_h(static_cast<std::size_t>(n), 0);
    for (int v : h_vertices) {
        if (v < 0 || v >= n) throw PreconditionError("subgraph vertex out of range");
        in_h[static_cast<std::size_t>(v)] = 1;
    }
    for (int v = 0; v < n; ++v) {
        int img = r[static_cast<std::size_t>(v)];
        if (img < 0 || img >= n || !in_h[static_cast<std::size_t>(img)])
            throw PreconditionError("map image outside the subgraph at vertex " + std::to_string(v));
    }
    for (int v = 0; v < n; ++v)
        if (in_h[static_cast<std::size_t>(v)] && r[static_cast<std::size_t>(v)] != v)
            return CheckReport::fail("not-fixed:" + std::to_string(v));
    for (auto [u, v] : g.edges) {
        int ru = r[static_cast<std::size_t>(u)], rv = r[static_cast<std::size_t>(v)];
        if (ru == rv) continue;
        if (!g.has_edge(ru, rv)) return CheckReport::fail("edge-not-preserved:" + detail::idx2(u, v));
    }
    return CheckReport::pass();
}

// True iff every vertex is in d or adjacent to a member of d.
inline CheckReport is_dominating_set(const LabeledGraph& g, const std::vector<int>& d) {
    int n = g.num_vertices();
    std::vector<char> dominated(static_cast<std::size_t>(n), 0);
    for (int v : d) {
        if (v < 0 || v >= n) throw PreconditionError("dominating-set vertex out of range");
        dominated[static_cast<std::size_t>(v)] = 1;
        for (int w : g.adj[static_cast<std::size_t>(v)]) dominated[static_cast<std::size_t>(w)] = 1;
    }
    for (int v = 0; v < n; ++v)
        if (!dominated[static_cast<std::size_t>(v)])
            return CheckReport::fail("undominated:" + std::to_string(v));
    return CheckReport::pass();
}

// Looks for a vertex whose closed radius-2 ball covers the whole graph.
// Verdict true carries the lexicographically first such center as witness.
inline CheckReport two_ball_center(const LabeledGraph& g) {
    int n = g.num_vertices();
    if (n == 0) throw PreconditionError("two-ball check on empty graph");
    if (!g.is_connected()) throw PreconditionError("two-ball check requires a connected graph");
    DistanceMatrix d = all_pairs_distances(g);
    for (int x = 0; x < n; ++x)
        if (eccentricity(d, x) <= 2) {
            CheckReport r = CheckReport::pass();
            r.witness = "center:" + std::to_string(x);
            return r;
        }
    return CheckReport{false, std::nullopt, {}};
}

} // namespace copcubes

#endif
