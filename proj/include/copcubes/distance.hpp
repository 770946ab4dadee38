#ifndef COPCUBES_DISTANCE_HPP
#define COPCUBES_DISTANCE_HPP

#include <cstdint>
#include <vector>

#include "copcubes/graph.hpp"

namespace copcubes {

// All-pairs BFS hop distances.  Unreachable pairs hold kInfinity.
class DistanceMatrix {
public:
    static constexpr std::uint16_t kInfinity = 0xFFFF;

    DistanceMatrix() = default;
    explicit DistanceMatrix(int n) : n_(n), d_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), kInfinity) {}

    int size() const { return n_; }
    std::uint16_t at(int u, int v) const { return d_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)]; }
    void set(int u, int v, std::uint16_t val) { d_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)] = val; }

private:
    int n_ = 0;
    std::vector<std::uint16_t> d_;
};

// Single-source BFS; returns hop counts with kInfinity for unreachable.
inline std::vector<std::uint16_t> bfs_distances(const LabeledGraph& g, int source) {
    std::vector<std::uint16_t> dist(static_cast<std::size_t>(g.num_vertices()), DistanceMatrix::kInfinity);
    std::vector<int> queue{source};
    dist[static_cast<std::size_t>(source)] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        std::uint16_t du = dist[static_cast<std::size_t>(u)];
        for (int w : g.adj[static_cast<std::size_t>(u)])
            if (dist[static_cast<std::size_t>(w)] == DistanceMatrix::kInfinity) {
                dist[static_cast<std::size_t>(w)] = static_cast<std::uint16_t>(du + 1);
                queue.push_back(w);
            }
    }
    return dist;
}

inline DistanceMatrix all_pairs_distances(const LabeledGraph& g) {
    int n = g.num_vertices();
    DistanceMatrix m(n);
    for (int s = 0; s < n; ++s) {
        auto row = bfs_distances(g, s);
        for (int v = 0; v < n; ++v) m.set(s, v, row[static_cast<std::size_t>(v)]);
    }
    return m;
}

inline int eccentricity(const DistanceMatrix& m, int v) {
    int e = 0;
    for (int u = 0; u < m.size(); ++u) {
        if (m.at(v, u) == DistanceMatrix::kInfinity) return DistanceMatrix::kInfinity;
        e = std::max(e, static_cast<int>(m.at(v, u)));
    }
    return e;
}

inline int diameter(const DistanceMatrix& m) {
    int d = 0;
    for (int v = 0; v < m.size(); ++v) d = std::max(d, eccentricity(m, v));
    return d;
}

} // namespace copcubes

#endif
