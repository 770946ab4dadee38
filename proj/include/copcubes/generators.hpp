#ifndef COPCUBES_GENERATORS_HPP
#define COPCUBES_GENERATORS_HPP

#include <string>
#include <vector>

#include "copcubes/bitlabel.hpp"
#include "copcubes/graph.hpp"

namespace copcubes {

inline void check_dimension_cap(int n, int cap) {
    if (n < 0) throw PreconditionError("dimension must be non-negative");
    if (n > cap)
        throw ResourceCapError("dimension " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
}

// All length-n binary strings, edges between strings differing in one bit.
// Vertices are in lexicographic label order.
inline LabeledGraph gen_hypercube(int n, int cap = kMaxDimension) {
    check_dimension_cap(n, cap);
    std::vector<Label> labels;
    labels.reserve(std::size_t{1} << n);
    for (Label s = 0; s < (Label{1} << n); ++s) labels.push_back(bit_reverse(s, n));
    return LabeledGraph::induced_subcube(n, std::move(labels));
}

// Length-n strings with no "11" substring, lexicographic label order.
inline LabeledGraph gen_fibonacci_cube(int n, int cap = kMaxDimension) {
    check_dimension_cap(n, cap);
    std::vector<Label> labels;
    for (Label s = 0; s < (Label{1} << n); ++s) {
        Label m = bit_reverse(s, n);
        if (fibonacci_ok(m)) labels.push_back(m);
    }
    return LabeledGraph::induced_subcube(n, std::move(labels));
}

// Length-n strings with no "11" substring and not both first and last bit 1,
// lexicographic label order.
inline LabeledGraph gen_lucas_cube(int n, int cap = kMaxDimension) {
    check_dimension_cap(n, cap);
    std::vector<Label> labels;
    for (Label s = 0; s < (Label{1} << n); ++s) {
        Label m = bit_reverse(s, n);
        if (lucas_ok(m, n)) labels.push_back(m);
    }
    return LabeledGraph::induced_subcube(n, std::move(labels));
}

// Path on m vertices in explicit-edges mode.  Vertex i carries the unary
// label 1^i 0^(m-1-i), which embeds the path isometrically in Q_(m-1), so the
// labeling also passes the subcube checks.
inline LabeledGraph gen_path(int m, int cap = kMaxDimension) {
    if (m < 1) throw PreconditionError("path needs at least one vertex");
    int n = m - 1;
    check_dimension_cap(n, cap);
    std::vector<Label> labels;
    labels.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) labels.push_back((Label{1} << i) - 1);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < m; ++i) edges.emplace_back(i, i + 1);
    return LabeledGraph::explicit_edges(n, std::move(labels), std::move(edges));
}

} // namespace copcubes

#endif
