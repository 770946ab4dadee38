#ifndef COPCUBES_SOLVER_HPP
#define COPCUBES_SOLVER_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "copcubes/graph.hpp"

namespace copcubes {

// A game position: a sorted multiset of cop vertices, the robber vertex, and
// the side to move.  Cop identity never matters, only the occupied multiset.
struct GamePosition {
    std::vector<int> cops; // sorted ascending
    int robber = 0;
    bool cop_to_move = true;
};

struct SolverOptions {
    std::size_t memory_cap_bytes = std::size_t{2} << 30; // 2 GiB table cap
    bool compute_steps = true;
};

// Win/steps table for the k-cop pursuit game on a fixed graph, computed as the
// least fixpoint of the one-move-lookahead operator by repeated full sweeps.
// Sweep g marks the cop-to-move positions that force capture within g cop
// moves and the robber-to-move positions from which every robber reply is
// already marked; the sweep index at first marking is the optimal number of
// remaining cop moves (the steps value).
class SolveTable {
public:
    int V = 0;
    int k = 0;
    std::uint64_t M = 0;     // number of sorted cop multisets
    int words = 0;           // 64-bit words per robber-indexed row
    bool cop_win_verdict = false;
    bool has_steps = false;
    int generations = 0;     // sweeps executed until the fixpoint
    std::size_t bytes_estimate = 0;

    static constexpr std::uint16_t kMaxSteps = 0xFFFF;

    // --- construction -----------------------------------------------------

    static std::size_t estimate_bytes(int V, int k, const SolverOptions& opt) {
        long double m = 1.0L;
        for (int i = 1; i <= k; ++i) m = m * static_cast<long double>(V + i - 1) / i;
        int words = (V + 63) / 64;
        long double bytes = m * words * 8.0L * 2.0L            // win bitsets, both sides
                            + m * k * 2.0L                     // decoded cop positions
                            + static_cast<long double>(V) * words * 8.0L;
        if (opt.compute_steps) bytes += m * V * 2.0L * 2.0L;   // steps, both sides
        bytes *= 1.15L;                                        // allocator/transient slack
        return static_cast<std::size_t>(bytes);
    }

    static SolveTable solve(const LabeledGraph& g, int k, const SolverOptions& opt = {}) {
        if (k < 1) throw PreconditionError("at least one cop required");
        if (k > 8) throw PreconditionError("cop count above supported limit 8");
        if (g.num_vertices() == 0) throw PreconditionError("cannot solve on the empty graph");
        if (!g.is_connected()) throw PreconditionError("solver requires a connected graph");
        std::size_t need = estimate_bytes(g.num_vertices(), k, opt);
        if (need > opt.memory_cap_bytes)
            throw ResourceCapError("solve table would need about " + std::to_string(need) +
                                   " bytes, above the cap of " + std::to_string(opt.memory_cap_bytes));
        SolveTable t;
        t.init(g, k, opt);
        t.bytes_estimate = need;
        while (t.refine_once()) {
            if (t.generations > 200000) throw std::logic_error("fixpoint failed to converge");
        }
        --t.generations; // the last sweep changed nothing
        t.cop_win_verdict = false;
        for (std::uint64_t mi = 0; mi < t.M && !t.cop_win_verdict; ++mi)
            if (t.row_full(&t.win_cop_bits_[mi * t.words])) t.cop_win_verdict = true;
        return t;
    }

    // One full sweep (cop half then robber half); returns whether anything
    // changed.  Running it on a converged table is a no-op.
    bool refine_once() {
        ++generations;
        std::uint16_t gen_steps = static_cast<std::uint16_t>(std::min(generations, int(kMaxSteps)));
        bool changed = false;
        std::vector<std::uint64_t> row(static_cast<std::size_t>(words));
        std::vector<int> odo(static_cast<std::size_t>(k));
        std::vector<std::uint16_t> tgt(static_cast<std::size_t>(k));
        // Cop half: a cop-to-move position wins if some joint move reaches a
        // winning robber-to-move position (capture states were seeded).
        for (std::uint64_t mi = 0; mi < M; ++mi) {
            std::uint64_t* wc = &win_cop_bits_[mi * words];
            if (row_full(wc)) continue;
            std::copy(wc, wc + words, row.begin());
            const std::uint16_t* cpos = &decoded_[mi * k];
            std::fill(odo.begin(), odo.end(), 0);
            while (true) {
                for (int j = 0; j < k; ++j)
                    tgt[static_cast<std::size_t>(j)] =
                        static_cast<std::uint16_t>(nbr_list_[cpos[j]][static_cast<std::size_t>(odo[static_cast<std::size_t>(j)])]);
                std::uint64_t r = rank_sorted_copy(tgt);
                const std::uint64_t* src = &win_rob_bits_[r * words];
                for (int w = 0; w < words; ++w) row[static_cast<std::size_t>(w)] |= src[w];
                int j = k - 1;
                for (; j >= 0; --j) {
                    if (++odo[static_cast<std::size_t>(j)] <
                        static_cast<int>(nbr_list_[cpos[j]].size())) break;
                    odo[static_cast<std::size_t>(j)] = 0;
                }
                if (j < 0) break;
            }
            for (int w = 0; w < words; ++w) {
                std::uint64_t fresh = row[static_cast<std::size_t>(w)] & ~wc[w];
                if (!fresh) continue;
                changed = true;
                wc[w] = row[static_cast<std::size_t>(w)];
                if (has_steps)
                    while (fresh) {
                        int b = std::countr_zero(fresh);
                        fresh &= fresh - 1;
                        steps_cop_[mi * V + static_cast<std::uint64_t>(w * 64 + b)] = gen_steps;
                    }
            }
        }
        // Robber half: a robber-to-move position wins for the cops if every
        // move in the robber's closed neighborhood lands in a winning
        // cop-to-move position.
        for (std::uint64_t mi = 0; mi < M; ++mi) {
            std::uint64_t* wr = &win_rob_bits_[mi * words];
            if (row_full(wr)) continue;
            const std::uint64_t* wc = &win_cop_bits_[mi * words];
            for (int r = 0; r < V; ++r) {
                if ((wr[r >> 6] >> (r & 63)) & 1u) continue;
                const std::uint64_t* nm = &nbr_mask_[static_cast<std::size_t>(r) * words];
                bool subset = true;
                for (int w = 0; w < words && subset; ++w)
                    if (nm[w] & ~wc[w]) subset = false;
                if (subset) {
                    wr[r >> 6] |= std::uint64_t{1} << (r & 63);
                    if (has_steps) steps_rob_[mi * V + static_cast<std::uint64_t>(r)] = gen_steps;
                    changed = true;
                }
            }
        }
        return changed;
    }

    // --- queries ----------------------------------------------------------

    std::uint64_t rank(const std::vector<int>& cops_sorted) const {
        std::uint64_t r = 0;
        for (int i = 0; i < k; ++i)
            r += rank_tab_[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(cops_sorted[static_cast<std::size_t>(i)])];
        return r;
    }

    bool win(const std::vector<int>& cops_sorted, int robber, bool cop_to_move) const {
        std::uint64_t mi = rank(cops_sorted);
        const std::uint64_t* w = cop_to_move ? &win_cop_bits_[mi * words] : &win_rob_bits_[mi * words];
        return (w[robber >> 6] >> (robber & 63)) & 1u;
    }

    std::uint16_t steps(const std::vector<int>& cops_sorted, int robber, bool cop_to_move) const {
        std::uint64_t mi = rank(cops_sorted);
        const auto& arr = cop_to_move ? steps_cop_ : steps_rob_;
        return arr[mi * V + static_cast<std::uint64_t>(robber)];
    }

    // Lexicographically smallest cop multiset winning against every robber
    // placement; empty if the k cops lose.
    std::vector<int> best_placement() const {
        std::vector<int> best;
        for (std::uint64_t mi = 0; mi < M; ++mi) {
            if (!row_full(&win_cop_bits_[mi * words])) continue;
            std::vector<int> cand(static_cast<std::size_t>(k));
            for (int i = 0; i < k; ++i) cand[static_cast<std::size_t>(i)] = decoded_[mi * k + static_cast<std::uint64_t>(i)];
            if (best.empty() || cand < best) best = cand;
        }
        return best;
    }

    const std::vector<int>& closed_neighborhood(int v) const { return nbr_list_[static_cast<std::size_t>(v)]; }

    bool occupied(const std::vector<int>& cops_sorted, int robber) const {
        return std::binary_search(cops_sorted.begin(), cops_sorted.end(), robber);
    }

    // Line-oriented debugging dump of one position.
    std::string dump_position(const GamePosition& pos) const {
        std::string s = "pos=";
        for (std::size_t i = 0; i < pos.cops.size(); ++i)
            s += (i ? "," : "") + std::to_string(pos.cops[i]);
        s += "/" + std::to_string(pos.robber) + "/" + (pos.cop_to_move ? std::string("cop") : std::string("robber"));
        bool w = win(pos.cops, pos.robber, pos.cop_to_move);
        s += " win=" + std::to_string(w ? 1 : 0);
        s += " steps=" + std::to_string(w && has_steps ? steps(pos.cops, pos.robber, pos.cop_to_move) : 0);
        return s;
    }

private:
    std::vector<std::uint64_t> win_cop_bits_, win_rob_bits_;
    std::vector<std::uint16_t> steps_cop_, steps_rob_;
    std::vector<std::uint16_t> decoded_;                    // M*k sorted cop positions
    std::vector<std::uint64_t> nbr_mask_;                   // V*words closed-neighborhood bitmasks
    std::vector<std::vector<int>> nbr_list_;                // closed neighborhoods, sorted
    std::vector<std::vector<std::uint64_t>> rank_tab_;      // [i][v] = C(v+i-1, i)

    bool row_full(const std::uint64_t* row) const {
        for (int w = 0; w < words - 1; ++w)
            if (row[w] != ~std::uint64_t{0}) return false;
        std::uint64_t last = (V & 63) ? ((std::uint64_t{1} << (V & 63)) - 1) : ~std::uint64_t{0};
        return row[words - 1] == last;
    }

    std::uint64_t rank_sorted_copy(std::vector<std::uint16_t>& t) const {
        // insertion sort; k is tiny
        for (std::size_t i = 1; i < t.size(); ++i) {
            std::uint16_t x = t[i];
            std::size_t j = i;
            for (; j > 0 && t[j - 1] > x; --j) t[j] = t[j - 1];
            t[j] = x;
        }
        std::uint64_t r = 0;
        for (std::size_t i = 0; i < t.size(); ++i) r += rank_tab_[i + 1][t[i]];
        return r;
    }

    void init(const LabeledGraph& g, int kk, const SolverOptions& opt) {
        V = g.num_vertices();
        k = kk;
        words = (V + 63) / 64;
        has_steps = opt.compute_steps;
        rank_tab_.assign(static_cast<std::size_t>(k) + 1,
                         std::vector<std::uint64_t>(static_cast<std::size_t>(V) + 1, 0));
        for (int v = 0; v <= V; ++v) rank_tab_[0][static_cast<std::size_t>(v)] = 1;
        for (int i = 1; i <= k; ++i)
            for (int v = 1; v <= V; ++v)
                rank_tab_[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)] =
                    rank_tab_[static_cast<std::size_t>(i)][static_cast<std::size_t>(v - 1)] +
                    rank_tab_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(v)];
        M = rank_tab_[static_cast<std::size_t>(k)][static_cast<std::size_t>(V)];

        nbr_list_.resize(static_cast<std::size_t>(V));
        nbr_mask_.assign(static_cast<std::size_t>(V) * static_cast<std::size_t>(words), 0);
        for (int v = 0; v < V; ++v) {
            nbr_list_[static_cast<std::size_t>(v)] = g.closed_neighborhood(v);
            for (int u : nbr_list_[static_cast<std::size_t>(v)])
                nbr_mask_[static_cast<std::size_t>(v) * words + static_cast<std::size_t>(u >> 6)] |=
                    std::uint64_t{1} << (u & 63);
        }

        decoded_.assign(M * static_cast<std::uint64_t>(k), 0);
        std::vector<int> cur(static_cast<std::size_t>(k), 0);
        std::uint64_t mi = 0;
        enumerate_multisets(cur, k - 1, V - 1, mi);

        win_cop_bits_.assign(M * static_cast<std::uint64_t>(words), 0);
        win_rob_bits_.assign(M * static_cast<std::uint64_t>(words), 0);
        if (has_steps) {
            steps_cop_.assign(M * static_cast<std::uint64_t>(V), kMaxSteps);
            steps_rob_.assign(M * static_cast<std::uint64_t>(V), kMaxSteps);
        }
        // Seed capture states (robber on a cop) as generation-0 wins for both
        // side-to-move variants.
        for (std::uint64_t m = 0; m < M; ++m)
            for (int i = 0; i < k; ++i) {
                int v = decoded_[m * k + static_cast<std::uint64_t>(i)];
                win_cop_bits_[m * words + static_cast<std::uint64_t>(v >> 6)] |= std::uint64_t{1} << (v & 63);
                win_rob_bits_[m * words + static_cast<std::uint64_t>(v >> 6)] |= std::uint64_t{1} << (v & 63);
                if (has_steps) {
                    steps_cop_[m * V + static_cast<std::uint64_t>(v)] = 0;
                    steps_rob_[m * V + static_cast<std::uint64_t>(v)] = 0;
                }
            }
    }

    // Fill decoded_ in rank order: positions are chosen highest-index cop
    // first, so the resulting sequence is exactly rank 0, 1, 2, ...
    void enumerate_multisets(std::vector<int>& cur, int slot, int maxv, std::uint64_t& mi) {
        if (slot < 0) {
            for (int i = 0; i < k; ++i)
                decoded_[mi * k + static_cast<std::uint64_t>(i)] = static_cast<std::uint16_t>(cur[static_cast<std::size_t>(i)]);
            ++mi;
            return;
        }
        for (int v = 0; v <= maxv; ++v) {
            cur[static_cast<std::size_t>(slot)] = v;
            enumerate_multisets(cur, slot - 1, v, mi);
        }
    }
};

// Decide whether k cops win on g; the returned table also powers optimal-move
// extraction for both sides.
inline SolveTable cop_win_k(const LabeledGraph& g, int k, const SolverOptions& opt = {}) {
    return SolveTable::solve(g, k, opt);
}

// Smallest k <= k_max with a cop win, scanning upward (the game is monotone in
// the number of cops); nullopt if even k_max cops lose.
inline std::optional<int> cop_number_exact(const LabeledGraph& g, int k_max,
                                           const SolverOptions& opt = {}) {
    for (int k = 1; k <= k_max; ++k)
        if (cop_win_k(g, k, opt).cop_win_verdict) return k;
    return std::nullopt;
}

// A joint cop move that strictly decreases the remaining capture distance.
// Ties go to the lexicographically smallest target multiset.
inline std::vector<int> optimal_cop_move(const SolveTable& t, const GamePosition& pos) {
    if (!pos.cop_to_move) throw PreconditionError("optimal_cop_move needs a cop-to-move position");
    if (!t.win(pos.cops, pos.robber, true))
        throw PreconditionError("optimal_cop_move called on a losing position");
    int k = t.k;
    std::vector<int> odo(static_cast<std::size_t>(k), 0), tgt(static_cast<std::size_t>(k));
    std::vector<int> best;
    std::uint32_t best_value = 0xFFFFFFFFu;
    while (true) {
        for (int j = 0; j < k; ++j)
            tgt[static_cast<std::size_t>(j)] =
                t.closed_neighborhood(pos.cops[static_cast<std::size_t>(j)])[static_cast<std::size_t>(odo[static_cast<std::size_t>(j)])];
        std::vector<int> sorted = tgt;
        std::sort(sorted.begin(), sorted.end());
        std::uint32_t value;
        if (t.occupied(sorted, pos.robber)) value = 1;
        else if (t.win(sorted, pos.robber, false))
            value = 1u + t.steps(sorted, pos.robber, false);
        else value = 0xFFFFFFFFu;
        if (value < best_value || (value == best_value && !best.empty() && sorted < best)) {
            best_value = value;
            best = sorted;
        }
        int j = k - 1;
        for (; j >= 0; --j) {
            std::size_t lim = t.closed_neighborhood(pos.cops[static_cast<std::size_t>(j)]).size();
            if (static_cast<std::size_t>(++odo[static_cast<std::size_t>(j)]) < lim) break;
            odo[static_cast<std::size_t>(j)] = 0;
        }
        if (j < 0) break;
    }
    return best;
}

// The robber's best reply: the smallest safe vertex if one exists, otherwise
// the move that survives longest (smallest index on ties).  Staying put is
// always among the candidates.
inline int optimal_robber_move(const SolveTable& t, const GamePosition& pos) {
    if (pos.cop_to_move) throw PreconditionError("optimal_robber_move needs a robber-to-move position");
    int best = -1;
    std::uint32_t best_steps = 0;
    for (int r : t.closed_neighborhood(pos.robber)) {
        if (!t.win(pos.cops, r, true)) return r; // safe vertices in index order
    }
    for (int r : t.closed_neighborhood(pos.robber)) {
        std::uint32_t s = t.occupied(pos.cops, r) ? 0 : t.steps(pos.cops, r, true);
        if (best < 0 || s > best_steps) {
            best = r;
            best_steps = s;
        }
    }
    return best;
}

} // namespace copcubes

#endif
