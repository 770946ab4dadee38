#ifndef COPCUBES_CONJECTURE_HPP
#define COPCUBES_CONJECTURE_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "copcubes/bounds.hpp"
#include "copcubes/solver.hpp"
#include "copcubes/verify.hpp"

namespace copcubes {

// One isomorphism class of connected isometric subgraphs of a hypercube,
// with its exact cop number (when found within the conjectured bound).
struct ConjectureRow {
    int n = 0;                  // embedding dimension
    std::vector<Label> labels;  // class representative, label order
    std::optional<int> exact;   // cop number, absent when it exceeds the bound
    int bound = 0;              // ceil((n+1)/2)

    bool ok() const { return exact.has_value(); }

    std::string serialize() const {
        std::string s = "n=" + std::to_string(n) + " graph=";
        for (std::size_t i = 0; i < labels.size(); ++i)
            s += (i ? "," : "") + label_to_string(labels[i], n);
        s += " c=" + (exact ? std::to_string(*exact) : std::string("?"));
        s += " bound=" + std::to_string(bound);
        s += std::string(" verdict=") + (ok() ? "ok" : "VIOLATION");
        return s;
    }
};

struct ConjectureReport {
    std::vector<ConjectureRow> rows;

    int violations() const {
        int v = 0;
        for (const ConjectureRow& r : rows)
            if (!r.ok()) ++v;
        return v;
    }

    std::string serialize() const {
        std::string s;
        for (const ConjectureRow& r : rows) s += r.serialize() + "\n";
        s += "classes=" + std::to_string(rows.size()) +
             " violations=" + std::to_string(violations()) + "\n";
        return s;
    }
};

namespace detail {

// Vertex maps of the hypercube automorphisms generated by coordinate
// permutations and coordinate flips: v -> permute_bits(v) xor flip.
inline std::vector<std::vector<int>> hypercube_symmetries(int n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    std::vector<std::vector<int>> maps;
    int verts = 1 << n;
    do {
        for (int flip = 0; flip < verts; ++flip) {
            std::vector<int> m(static_cast<std::size_t>(verts));
            for (int v = 0; v < verts; ++v) {
                int t = 0;
                for (int b = 0; b < n; ++b)
                    if ((v >> b) & 1) t |= 1 << perm[static_cast<std::size_t>(b)];
                m[static_cast<std::size_t>(v)] = t ^ flip;
            }
            maps.push_back(std::move(m));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return maps;
}

} // namespace detail

// Exhaustive test of "cop number <= ceil((n+1)/2)" over every connected
// isometric subgraph of Q_n for n <= n_max, one row per symmetry class.
// Subgraphs with a constant coordinate already appear at a lower dimension
// and are skipped.  k_budget > 0 caps the cop counts the solver may try.
inline ConjectureReport probe_conjecture(int n_max, int k_budget = 0,
                                         const SolverOptions& opt = {}) {
    if (n_max < 0) throw PreconditionError("probe_conjecture needs n_max >= 0");
    if (n_max > 4)
        throw ResourceCapError("probe_conjecture enumerates all of Q_n only up to n_max = 4");
    ConjectureReport report;
    for (int n = 0; n <= n_max; ++n) {
        int bound = (n + 2) / 2;
        if (k_budget > 0 && bound > k_budget)
            throw ResourceCapError("conjecture probe at n=" + std::to_string(n) + " needs up to " +
                                   std::to_string(bound) + " cops, above the budget of " +
                                   std::to_string(k_budget));
        const int verts = 1 << n;
        const std::uint32_t all = verts == 32 ? 0xFFFFFFFFu : ((std::uint32_t{1} << verts) - 1);
        std::vector<std::vector<int>> sym = detail::hypercube_symmetries(n);
        for (std::uint32_t subset = 1; subset <= all; ++subset) {
            // skip classes with a constant coordinate (handled at lower n)
            bool constant = false;
            for (int b = 0; b < n && !constant; ++b) {
                bool all0 = true, all1 = true;
                for (int v = 0; v < verts; ++v) {
                    if (!((subset >> v) & 1)) continue;
                    ((v >> b) & 1 ? all0 : all1) = false;
                }
                constant = all0 || all1;
            }
            if (constant) continue;
            // canonical class representative: the minimal image under the
            // symmetry group; process each class exactly once
            bool canonical = true;
            for (const std::vector<int>& m : sym) {
                std::uint32_t img = 0;
                for (int v = 0; v < verts; ++v)
                    if ((subset >> v) & 1) img |= std::uint32_t{1} << m[static_cast<std::size_t>(v)];
                if (img < subset) {
                    canonical = false;
                    break;
                }
            }
            if (!canonical) continue;
            std::vector<Label> labels;
            for (int v = 0; v < verts; ++v)
                if ((subset >> v) & 1) labels.push_back(static_cast<Label>(v));
            std::sort(labels.begin(), labels.end(),
                      [](Label x, Label y) { return label_lex_less(x, y); });
            LabeledGraph g = LabeledGraph::induced_subcube(n, labels);
            if (!g.is_connected()) continue;
            if (!verify_isometric_in_hypercube(g).verdict) continue;
            ConjectureRow row;
            row.n = n;
            row.labels = labels;
            row.bound = bound;
            row.exact = cop_number_exact(g, bound, opt);
            report.rows.push_back(std::move(row));
        }
    }
    return report;
}

} // namespace copcubes

#endif
