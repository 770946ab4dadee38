#ifndef COPCUBES_GRAPH_HPP
#define COPCUBES_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "copcubes/bitlabel.hpp"
#include "copcubes/errors.hpp"

namespace copcubes {

enum class GraphMode { InducedSubcube, ExplicitEdges };

// A graph whose vertices carry fixed-length binary labels.  In induced-subcube
// mode the edge set is exactly the pairs of labels at Hamming distance 1; in
// explicit-edges mode an arbitrary edge list is stored alongside the labels.
class LabeledGraph {
public:
    int dimension = 0;
    GraphMode mode = GraphMode::InducedSubcube;
    std::vector<Label> labels;                 // one per vertex
    std::vector<std::pair<int, int>> edges;    // i < j, sorted
    std::vector<std::vector<int>> adj;         // sorted adjacency lists

    int num_vertices() const { return static_cast<int>(labels.size()); }
    int num_edges() const { return static_cast<int>(edges.size()); }

    std::string label_string(int v) const { return label_to_string(labels[static_cast<std::size_t>(v)], dimension); }

    // Index of a label, or -1 if absent.
    int vertex_of(Label m) const {
        auto it = index_.find(m);
        return it == index_.end() ? -1 : it->second;
    }

    bool has_edge(int u, int v) const {
        const auto& a = adj[static_cast<std::size_t>(u)];
        return std::binary_search(a.begin(), a.end(), v);
    }

    int degree(int v) const { return static_cast<int>(adj[static_cast<std::size_t>(v)].size()); }

    // Closed neighborhood {v} ∪ N(v), sorted by vertex index.
    std::vector<int> closed_neighborhood(int v) const {
        std::vector<int> r = adj[static_cast<std::size_t>(v)];
        r.insert(std::lower_bound(r.begin(), r.end(), v), v);
        return r;
    }

    bool is_connected() const {
        int n = num_vertices();
        if (n == 0) return false;
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int count = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : adj[static_cast<std::size_t>(u)])
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    ++count;
                    stack.push_back(w);
                }
        }
        return count == n;
    }

    // Build from labels only; the edge set is the Hamming-distance-1 pairs.
    static LabeledGraph induced_subcube(int dimension, std::vector<Label> labels) {
        LabeledGraph g;
        g.dimension = dimension;
        g.mode = GraphMode::InducedSubcube;
        g.labels = std::move(labels);
        g.build_index();
        for (int v = 0; v < g.num_vertices(); ++v) {
            Label m = g.labels[static_cast<std::size_t>(v)];
            for (int b = 0; b < dimension; ++b) {
                int u = g.vertex_of(m ^ (Label{1} << b));
                if (u >= 0 && v < u) g.edges.emplace_back(v, u);
            }
        }
        std::sort(g.edges.begin(), g.edges.end());
        g.build_adjacency();
        return g;
    }

    // Build from labels plus an explicit edge list.
    static LabeledGraph explicit_edges(int dimension, std::vector<Label> labels,
                                       std::vector<std::pair<int, int>> edges) {
        LabeledGraph g;
        g.dimension = dimension;
        g.mode = GraphMode::ExplicitEdges;
        g.labels = std::move(labels);
        g.build_index();
        int n = g.num_vertices();
        for (auto& [i, j] : edges) {
            if (i == j) throw PreconditionError("self-loop in edge list");
            if (i > j) std::swap(i, j);
            if (i < 0 || j >= n) throw PreconditionError("edge endpoint out of range");
        }
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
            throw PreconditionError("duplicate edge in edge list");
        g.edges = std::move(edges);
        g.build_adjacency();
        return g;
    }

private:
    std::unordered_map<Label, int> index_;

    void build_index() {
        index_.reserve(labels.size());
        for (int v = 0; v < num_vertices(); ++v) {
            Label m = labels[static_cast<std::size_t>(v)];
            if (dimension < 32 && (m >> dimension) != 0)
                throw PreconditionError("label wider than graph dimension");
            if (!index_.emplace(m, v).second)
                throw PreconditionError("duplicate label: " + label_to_string(m, dimension));
        }
    }

    void build_adjacency() {
        adj.assign(labels.size(), {});
        for (auto [i, j] : edges) {
            adj[static_cast<std::size_t>(i)].push_back(j);
            adj[static_cast<std::size_t>(j)].push_back(i);
        }
        for (auto& a : adj) std::sort(a.begin(), a.end());
    }
};

inline int min_degree(const LabeledGraph& g) {
    if (g.num_vertices() == 0) throw PreconditionError("min_degree of empty graph");
    int best = g.degree(0);
    for (int v = 1; v < g.num_vertices(); ++v) best = std::min(best, g.degree(v));
    return best;
}

} // namespace copcubes

#endif
