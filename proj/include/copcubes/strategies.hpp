#ifndef COPCUBES_STRATEGIES_HPP
#define COPCUBES_STRATEGIES_HPP

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "copcubes/distance.hpp"
#include "copcubes/generators.hpp"
#include "copcubes/solver.hpp"

namespace copcubes {

// ---------------------------------------------------------------------------
// Simulation plumbing
// ---------------------------------------------------------------------------

// Shared per-simulation context: the graph, its distance matrix, and a single
// seeded generator.  All randomized strategies draw from the same generator in
// call order, which makes whole simulations reproducible from one seed.
class SimContext {
public:
    const LabeledGraph& g;
    DistanceMatrix dist;
    std::mt19937_64 rng;

    SimContext(const LabeledGraph& graph, std::uint64_t seed)
        : g(graph), dist(all_pairs_distances(graph)), rng(seed) {}

    int rand_index(int m) { return static_cast<int>(rng() % static_cast<std::uint64_t>(m)); }
};

class CopStrategy {
public:
    virtual ~CopStrategy() = default;
    virtual std::string name() const = 0;
    virtual int cop_count() const = 0;
    virtual std::vector<int> place(SimContext& ctx) = 0;
    // robber_prev is the robber's position before its latest move (equal to
    // robber right after placement); strategies that react to the robber's
    // last move derive it from the pair.
    virtual std::vector<int> step(SimContext& ctx, const std::vector<int>& cops, int robber,
                                  int robber_prev) = 0;
    virtual std::string note() const { return "-"; }
};

class RobberStrategy {
public:
    virtual ~RobberStrategy() = default;
    virtual std::string name() const = 0;
    virtual int place(SimContext& ctx, const std::vector<int>& cops) = 0;
    virtual int step(SimContext& ctx, const std::vector<int>& cops, int robber) = 0;
};

struct TraceRound {
    int round = 0;
    std::vector<int> cops;
    int robber = 0;
    std::string note;
};

struct GameTrace {
    std::vector<TraceRound> rounds; // entry 0 records the placements
    bool captured = false;
    int outcome_round = 0;          // capture round, or max_rounds when survived
    int max_rounds = 0;

    std::string serialize(const LabeledGraph& g) const {
        std::string out;
        for (const TraceRound& r : rounds) {
            out += "round=" + std::to_string(r.round) + " cops=";
            for (std::size_t i = 0; i < r.cops.size(); ++i)
                out += (i ? "," : "") + g.label_string(r.cops[i]);
            out += " robber=" + g.label_string(r.robber);
            out += " note=" + (r.note.empty() ? std::string("-") : r.note) + "\n";
        }
        out += captured ? "outcome=captured:" + std::to_string(outcome_round)
                        : "outcome=survived:" + std::to_string(max_rounds);
        out += "\n";
        return out;
    }
};

inline int default_max_rounds(const LabeledGraph& g) { return 50 * g.num_vertices(); }

// ---------------------------------------------------------------------------
// Distance-2 evasion robber
// ---------------------------------------------------------------------------

// A vertex is safe when it is neither a cop vertex nor adjacent to one.
inline bool distance_two_from_all(const LabeledGraph& g, const std::vector<int>& cops, int v) {
    for (int c : cops)
        if (v == c || g.has_edge(v, c)) return false;
    return true;
}

// Lexicographically smallest vertex at distance >= 2 from every cop.  With few
// enough cops (at most half the minimum degree, rounded up, minus one) on a
// graph whose labels form an isometric subcube, such a vertex always exists.
inline int robber_place(const LabeledGraph& g, const std::vector<int>& cops) {
    for (int v = 0; v < g.num_vertices(); ++v)
        if (distance_two_from_all(g, cops, v)) return v;
    throw PreconditionError("no vertex at distance >= 2 from every cop; too many cops "
                            "or the graph is not a verified partial cube");
}

// Smallest move (stay included) keeping distance >= 2 from every cop.
inline int robber_step(const LabeledGraph& g, const std::vector<int>& cops, int robber) {
    for (int v : g.closed_neighborhood(robber))
        if (distance_two_from_all(g, cops, v)) return v;
    throw PreconditionError("evasion robber has no move at distance >= 2 from every cop");
}

class EvasionRobber : public RobberStrategy {
public:
    std::string name() const override { return "thm31-evasion"; }
    int place(SimContext& ctx, const std::vector<int>& cops) override {
        return robber_place(ctx.g, cops);
    }
    int step(SimContext& ctx, const std::vector<int>& cops, int robber) override {
        return robber_step(ctx.g, cops, robber);
    }
};

// ---------------------------------------------------------------------------
// Baseline strategies
// ---------------------------------------------------------------------------

class GreedyCops : public CopStrategy {
public:
    explicit GreedyCops(int k) : k_(k) {}
    std::string name() const override { return "greedy"; }
    int cop_count() const override { return k_; }
    std::vector<int> place(SimContext&) override { return std::vector<int>(static_cast<std::size_t>(k_), 0); }
    std::vector<int> step(SimContext& ctx, const std::vector<int>& cops, int robber, int) override {
        std::vector<int> out;
        out.reserve(cops.size());
        for (int c : cops) {
            int best = c;
            int best_d = ctx.dist.at(c, robber);
            for (int v : ctx.g.closed_neighborhood(c)) {
                int d = ctx.dist.at(v, robber);
                if (d < best_d) {
                    best = v;
                    best_d = d;
                }
            }
            out.push_back(best);
        }
        return out;
    }

private:
    int k_;
};

class RandomCops : public CopStrategy {
public:
    explicit RandomCops(int k) : k_(k) {}
    std::string name() const override { return "random"; }
    int cop_count() const override { return k_; }
    std::vector<int> place(SimContext& ctx) override {
        std::vector<int> out;
        for (int i = 0; i < k_; ++i) out.push_back(ctx.rand_index(ctx.g.num_vertices()));
        return out;
    }
    std::vector<int> step(SimContext& ctx, const std::vector<int>& cops, int, int) override {
        std::vector<int> out;
        for (int c : cops) {
            const std::vector<int>& nb = ctx.g.closed_neighborhood(c);
            out.push_back(nb[static_cast<std::size_t>(ctx.rand_index(static_cast<int>(nb.size())))]);
        }
        return out;
    }

private:
    int k_;
};

class RandomRobber : public RobberStrategy {
public:
    std::string name() const override { return "random"; }
    int place(SimContext& ctx, const std::vector<int>& cops) override {
        std::vector<int> free;
        for (int v = 0; v < ctx.g.num_vertices(); ++v)
            if (std::find(cops.begin(), cops.end(), v) == cops.end()) free.push_back(v);
        if (free.empty()) return ctx.rand_index(ctx.g.num_vertices());
        return free[static_cast<std::size_t>(ctx.rand_index(static_cast<int>(free.size())))];
    }
    int step(SimContext& ctx, const std::vector<int>&, int robber) override {
        const std::vector<int>& nb = ctx.g.closed_neighborhood(robber);
        return nb[static_cast<std::size_t>(ctx.rand_index(static_cast<int>(nb.size())))];
    }
};

class GreedyEvaderRobber : public RobberStrategy {
public:
    std::string name() const override { return "greedy-evader"; }
    int place(SimContext& ctx, const std::vector<int>& cops) override {
        int best = 0, best_d = -1;
        for (int v = 0; v < ctx.g.num_vertices(); ++v) {
            int d = min_cop_distance(ctx, cops, v);
            if (d > best_d) {
                best = v;
                best_d = d;
            }
        }
        return best;
    }
    int step(SimContext& ctx, const std::vector<int>& cops, int robber) override {
        int best = -1, best_d = -1;
        for (int v : ctx.g.closed_neighborhood(robber)) {
            int d = min_cop_distance(ctx, cops, v);
            if (d > best_d) {
                best = v;
                best_d = d;
            }
        }
        return best;
    }

private:
    static int min_cop_distance(SimContext& ctx, const std::vector<int>& cops, int v) {
        int m = ctx.g.num_vertices(); // larger than any finite distance
        for (int c : cops) m = std::min(m, static_cast<int>(ctx.dist.at(v, c)));
        return m;
    }
};

// ---------------------------------------------------------------------------
// Solve-table-backed strategies
// ---------------------------------------------------------------------------

class SolverOptimalCops : public CopStrategy {
public:
    SolverOptimalCops(std::shared_ptr<const SolveTable> table, int k)
        : table_(std::move(table)), k_(k), greedy_(k) {}
    std::string name() const override { return "solver-optimal"; }
    int cop_count() const override { return k_; }

    std::vector<int> place(SimContext&) override {
        std::vector<int> best = table_->best_placement();
        if (best.empty()) best.assign(static_cast<std::size_t>(k_), 0); // losing: park at the first vertex
        return best;
    }

    std::vector<int> step(SimContext& ctx, const std::vector<int>& cops, int robber,
                          int robber_prev) override {
        std::vector<int> sorted = cops;
        std::sort(sorted.begin(), sorted.end());
        if (!table_->win(sorted, robber, true))
            return greedy_.step(ctx, cops, robber, robber_prev); // no winning line: chase greedily
        // Identity-preserving variant of the optimal-move extraction: rank
        // every joint move of this cop tuple and keep the best (value, sorted
        // target, target) triple, so each cop gets a move from its own
        // closed neighborhood.
        std::vector<int> odo(cops.size(), 0), tgt(cops.size()), best;
        std::vector<int> best_sorted;
        std::uint32_t best_value = 0xFFFFFFFFu;
        while (true) {
            for (std::size_t j = 0; j < cops.size(); ++j)
                tgt[j] = ctx.g.closed_neighborhood(cops[j])[static_cast<std::size_t>(odo[j])];
            std::vector<int> s = tgt;
            std::sort(s.begin(), s.end());
            std::uint32_t value;
            if (std::binary_search(s.begin(), s.end(), robber)) value = 1;
            else if (table_->win(s, robber, false)) value = 1u + table_->steps(s, robber, false);
            else value = 0xFFFFFFFFu;
            if (value < best_value || (value == best_value && !best.empty() &&
                                       (s < best_sorted || (s == best_sorted && tgt < best)))) {
                best_value = value;
                best = tgt;
                best_sorted = s;
            }
            int j = static_cast<int>(cops.size()) - 1;
            for (; j >= 0; --j) {
                std::size_t lim = ctx.g.closed_neighborhood(cops[static_cast<std::size_t>(j)]).size();
                if (static_cast<std::size_t>(++odo[static_cast<std::size_t>(j)]) < lim) break;
                odo[static_cast<std::size_t>(j)] = 0;
            }
            if (j < 0) break;
        }
        return best;
    }

private:
    std::shared_ptr<const SolveTable> table_;
    int k_;
    GreedyCops greedy_;
};

class SolverOptimalRobber : public RobberStrategy {
public:
    explicit SolverOptimalRobber(std::shared_ptr<const SolveTable> table)
        : table_(std::move(table)) {}
    std::string name() const override { return "solver-optimal"; }

    int place(SimContext& ctx, const std::vector<int>& cops) override {
        std::vector<int> sorted = cops;
        std::sort(sorted.begin(), sorted.end());
        int best = -1;
        std::uint32_t best_steps = 0;
        for (int v = 0; v < ctx.g.num_vertices(); ++v) {
            if (!table_->win(sorted, v, true)) return v; // smallest safe placement
            std::uint32_t s = table_->occupied(sorted, v) ? 0 : table_->steps(sorted, v, true);
            if (best < 0 || s > best_steps) {
                best = v;
                best_steps = s;
            }
        }
        return best;
    }

    int step(SimContext&, const std::vector<int>& cops, int robber) override {
        std::vector<int> sorted = cops;
        std::sort(sorted.begin(), sorted.end());
        return optimal_robber_move(*table_, GamePosition{sorted, robber, false});
    }

private:
    std::shared_ptr<const SolveTable> table_;
};

// ---------------------------------------------------------------------------
// Block-matching cop strategy
// ---------------------------------------------------------------------------

// Contiguous partition of the n bit positions into blocks of the given width;
// the last block may be shorter.
struct BlockPartition {
    int n = 0, width = 0, k = 0;
    std::vector<int> start, len;

    static BlockPartition make(int n, int width) {
        BlockPartition p;
        p.n = n;
        p.width = width;
        p.k = (n + width - 1) / width;
        for (int i = 0; i < p.k; ++i) {
            p.start.push_back(width * i);
            p.len.push_back(std::min(width, n - width * i));
        }
        return p;
    }

    int block_of_bit(int b) const { return b / width; }
    Label mask(int i) const {
        return ((Label{1} << len[static_cast<std::size_t>(i)]) - 1) << start[static_cast<std::size_t>(i)];
    }
    Label value(Label label, int i) const {
        return (label >> start[static_cast<std::size_t>(i)]) &
               ((Label{1} << len[static_cast<std::size_t>(i)]) - 1);
    }
};

enum class BlockPhase { Phase1, Phase2_1, Phase2_2 };

inline std::string to_string(BlockPhase p) {
    switch (p) {
    case BlockPhase::Phase1: return "phase1";
    case BlockPhase::Phase2_1: return "phase2.1";
    default: return "phase2.2";
    }
}

// Mutable state of the block strategy.  Matching flags are recomputed from the
// positions every round; what persists is the phase latch, per-block activity
// streaks, and the designated endgame block.
struct CopStrategyState {
    const LabeledGraph* g = nullptr;
    BlockPartition part;
    int threshold = 0;               // consecutive same-block robber moves before the endgame
    BlockPhase phase = BlockPhase::Phase1;
    std::vector<int> assignment;     // cop i works block assignment[i] (identity)
    std::vector<int> streak;         // per block
    std::optional<int> unmatched_block; // designated endgame block
    bool endgame_active = false;
    std::vector<int> squad_members;  // the two cops assigned to the endgame
    int endgame_rounds = 0;          // rounds since the endgame was designated
    int activation_cooldown = 0;     // rounds with endgame designation disabled
    std::vector<int> bit_changed;    // round each bit was last flipped by the robber
    std::optional<Label> prev_rob;   // robber label seen at the previous step
    int rounds = 0;
    long long illegal_move_diagnostics = 0; // must stay 0: emitted-move legality violations
    long long fallback_events = 0;          // preferred move was illegal, ladder fell through

    // endgame sub-game cache keyed by (block length, left context bit, right context bit)
    std::map<std::tuple<int, int, int>, std::pair<std::shared_ptr<const LabeledGraph>,
                                                  std::shared_ptr<const SolveTable>>>
        endgame_cache;

    bool matched(Label cop_label, Label robber_label, int block) const {
        return part.value(cop_label, block) == part.value(robber_label, block);
    }
};

struct BlockStrategyConfig {
    int width = 3;
    int phase2_threshold = 0; // 0 means the default of 3*n
};

// Validates that g is the Fibonacci cube of its dimension and builds a fresh
// strategy state.  Width 3 needs n >= 6, width 4 needs n >= 9.
inline CopStrategyState make_block_state(const LabeledGraph& g, const BlockStrategyConfig& cfg) {
    if (cfg.width != 3 && cfg.width != 4)
        throw PreconditionError("block strategy width must be 3 or 4");
    int n = g.dimension;
    if ((cfg.width == 3 && n < 6) || (cfg.width == 4 && n < 9))
        throw PreconditionError("block strategy width " + std::to_string(cfg.width) +
                                " needs dimension >= " + (cfg.width == 3 ? std::string("6") : std::string("9")));
    LabeledGraph fib = gen_fibonacci_cube(n);
    if (g.labels != fib.labels || g.mode != GraphMode::InducedSubcube)
        throw PreconditionError("block strategy requires the Fibonacci cube of dimension " +
                                std::to_string(n));
    CopStrategyState st;
    st.g = &g;
    st.part = BlockPartition::make(n, cfg.width);
    st.threshold = cfg.phase2_threshold > 0 ? cfg.phase2_threshold : 3 * n;
    st.assignment.resize(static_cast<std::size_t>(st.part.k));
    for (int i = 0; i < st.part.k; ++i) st.assignment[static_cast<std::size_t>(i)] = i;
    st.streak.assign(static_cast<std::size_t>(st.part.k), 0);
    st.bit_changed.assign(static_cast<std::size_t>(n), std::numeric_limits<int>::min());
    return st;
}

namespace detail {

// Probe bit for a robber block value two bits above an all-zero cop block:
// width 3 has only 101 (add the third position); width 4 answers 0101/1001
// with the fourth position and 1010 with the first.
inline int probe_bit(int block_len, Label robber_value) {
    if (block_len == 3 && robber_value == 0b101) return 2;
    if (block_len == 4) {
        if (robber_value == 0b1010 || robber_value == 0b1001) return 3; // strings 0101 / 1001
        if (robber_value == 0b0101) return 0;                           // string 1010
    }
    return -1;
}

// Among the set bits of `addable`, the one whose addition gives the
// lexicographically smallest label string.  Bit 0 is the first character, so
// setting a high bit perturbs the string later than setting a low bit: the
// smallest result adds the highest candidate bit.
inline int lex_min_bit(Label addable) { return std::bit_width(addable) - 1; }

// Bits string-adjacent to the given one (the no-11 constraint couples them).
inline Label neighbor_mask(int bit, int n) {
    Label m = 0;
    if (bit > 0) m |= Label{1} << (bit - 1);
    if (bit + 1 < n) m |= Label{1} << (bit + 1);
    return m;
}

inline bool legal_label(const LabeledGraph& g, Label cand) {
    return !has_adjacent_ones(cand) && g.vertex_of(cand) >= 0;
}

inline bool closed_adjacent(const LabeledGraph& g, int u, int v) {
    return u == v || g.has_edge(u, v);
}

} // namespace detail

// One joint cop move of the block strategy.  robber_last_move names the block
// the robber changed on its latest move (nullopt for a stay); the exact bit
// is recovered from the robber label remembered in the state.  Rules, in
// priority order per cop: capture; phase-1 duty on the assigned block alone
// (mirror a flip there, otherwise close that block's differences, all other
// bits staying zero); endgame play on the designated block (sub-game moves
// for the squad, parking at the all-zero block value for the rest); and in
// phase 2 a response ladder over blocks, the robber's block first -- mirror
// a one-bit difference, approach a two-bit value from the all-zero block
// through its probe vertex, walk a failed probe back toward all-zero.
// Outside transient probes a cop only ever holds bits the robber holds, so
// the robber's own no-11 constraint keeps every addition legal; each cop
// then makes net progress on some block every round, and the only dance
// that starves them all is confined to one block, where the endgame squad
// settles it.
inline std::vector<int> block_cop_strategy_step(const LabeledGraph& g, CopStrategyState& st,
                                                const std::vector<int>& cops, int robber,
                                                std::optional<int> robber_last_move) {
    const BlockPartition& part = st.part;
    const int k = part.k;
    if (static_cast<int>(cops.size()) != k)
        throw PreconditionError("block strategy expects " + std::to_string(k) + " cops");
    ++st.rounds;
    const Label rob = g.labels[static_cast<std::size_t>(robber)];
    // The robber's latest flip: block index from the caller, exact bit from
    // the label remembered at the previous step (the label wins when both
    // are available).
    int hot_bit = -1;
    int hot = robber_last_move && *robber_last_move >= 0 && *robber_last_move < k
                  ? *robber_last_move
                  : -1;
    if (st.prev_rob) {
        Label d = rob ^ *st.prev_rob;
        hot = -1;
        if (d != 0 && std::popcount(d) == 1) {
            hot_bit = std::countr_zero(d);
            hot = part.block_of_bit(hot_bit);
        }
    }
    st.prev_rob = rob;
    const Label hot_mask = hot_bit >= 0 ? Label{1} << hot_bit : 0;
    if (hot_bit >= 0) st.bit_changed[static_cast<std::size_t>(hot_bit)] = st.rounds;
    // Bits the robber flipped this round or the last: transient differences,
    // left to the mirror rule by phase-1 duty and endgame repairs.
    Label window = 0;
    for (int b = 0; b < part.n; ++b)
        if (st.bit_changed[static_cast<std::size_t>(b)] >= st.rounds - 1)
            window |= Label{1} << b;

    // Streak accounting: consecutive robber moves on one block.
    for (int j = 0; j < k; ++j) {
        int& s = st.streak[static_cast<std::size_t>(j)];
        s = (hot == j) ? s + 1 : 0;
    }

    auto qualifies = [&](int i, int e) {
        Label c = g.labels[static_cast<std::size_t>(cops[static_cast<std::size_t>(i)])];
        return ((c ^ rob) & ~part.mask(e)) == 0;
    };
    auto off_gap = [&](int i, int e) {
        Label c = g.labels[static_cast<std::size_t>(cops[static_cast<std::size_t>(i)])];
        return std::popcount((c ^ rob) & ~part.mask(e));
    };
    auto activate = [&](int e, std::vector<int> members) {
        st.unmatched_block = e;
        st.endgame_active = true;
        st.squad_members = std::move(members);
        st.endgame_rounds = 0;
    };

    // Endgame designation is latched: once a block is excluded, the squad keeps
    // working it until capture or until the endgame budget runs out.  After the
    // budget expires, designation rests for a window so the cops attack the
    // stale differences on the previously excluded block directly.
    if (st.endgame_active && ++st.endgame_rounds > st.threshold) {
        st.endgame_active = false;
        st.squad_members.clear();
        st.unmatched_block.reset();
        st.endgame_rounds = 0;
        st.activation_cooldown = st.threshold;
    } else if (st.activation_cooldown > 0) {
        --st.activation_cooldown;
    }
    if (st.endgame_active && hot >= 0 && hot != *st.unmatched_block &&
        st.streak[static_cast<std::size_t>(hot)] >= 5) {
        // The robber has settled on a different block: move the endgame there
        // at once instead of waiting out the budget.
        std::vector<int> order;
        for (int i = 0; i < k; ++i) order.push_back(i);
        std::stable_sort(order.begin(), order.end(),
                         [&](int x, int y) { return off_gap(x, hot) < off_gap(y, hot); });
        activate(hot, {order[0], order[1]});
    }
    if (!st.endgame_active && st.activation_cooldown == 0) {
        // Two cops matching the robber everywhere except one block start the
        // endgame there at once; the hot block gets first consideration.
        for (int t = -1; t < k && !st.endgame_active; ++t) {
            int e = t < 0 ? hot : t;
            if (e < 0 || (t >= 0 && e == hot)) continue;
            std::vector<int> q;
            for (int i = 0; i < k; ++i)
                if (qualifies(i, e)) q.push_back(i);
            if (q.size() >= 2) activate(e, {q[0], q[1]});
        }
        if (!st.endgame_active && hot >= 0 &&
            st.streak[static_cast<std::size_t>(hot)] >= st.threshold) {
            // A committed robber designates its block; the two cops nearest to
            // matching everywhere else form the squad.
            std::vector<int> order;
            for (int i = 0; i < k; ++i) order.push_back(i);
            std::stable_sort(order.begin(), order.end(),
                             [&](int x, int y) { return off_gap(x, hot) < off_gap(y, hot); });
            activate(hot, {order[0], order[1]});
        }
    }
    const int E = st.endgame_active ? *st.unmatched_block : -1;

    // Endgame squad: once both members match the robber outside the excluded
    // block they play the projected two-cop game there; a member knocked off
    // its match repairs that first.
    const std::vector<int>& squad = st.squad_members;
    std::vector<Label> squad_target_labels;
    // A member may carry one off-block difference and still play: with the
    // seam bits intact the lifted move stays legal, and chasing a toggled bit
    // move for move would stall the sub-game forever.  Once the projections
    // coincide a one-bit difference is adjacency, which rule 1 converts.
    auto playable = [&](int i, int e) {
        Label c = g.labels[static_cast<std::size_t>(cops[static_cast<std::size_t>(i)])];
        Label gap = (c ^ rob) & ~part.mask(e);
        if (!gap) return true;
        if (std::popcount(gap) > 1) return false;
        int bit = std::countr_zero(gap);
        int startb = part.start[static_cast<std::size_t>(e)];
        int len = part.len[static_cast<std::size_t>(e)];
        return bit != startb - 1 && bit != startb + len;
    };
    if (E >= 0) {
        if (squad.size() == 2 && playable(squad[0], E) && playable(squad[1], E)) {
            int len = part.len[static_cast<std::size_t>(E)], startb = part.start[static_cast<std::size_t>(E)];
            int a = startb > 0 ? static_cast<int>((rob >> (startb - 1)) & 1) : 0;
            int b = startb + len < part.n ? static_cast<int>((rob >> (startb + len)) & 1) : 0;
            auto key = std::make_tuple(len, a, b);
            auto it = st.endgame_cache.find(key);
            if (it == st.endgame_cache.end()) {
                // Legal block values under the boundary context, in label order.
                std::vector<Label> labels;
                for (Label s = 0; s < (Label{1} << len); ++s) {
                    Label m = bit_reverse(s, len);
                    if (has_adjacent_ones(m)) continue;
                    if (a && (m & 1)) continue;
                    if (b && ((m >> (len - 1)) & 1)) continue;
                    labels.push_back(m);
                }
                auto hg = std::make_shared<const LabeledGraph>(
                    LabeledGraph::induced_subcube(len, labels));
                auto ht = std::make_shared<const SolveTable>(cop_win_k(*hg, 2));
                it = st.endgame_cache.emplace(key, std::make_pair(hg, ht)).first;
            }
            const LabeledGraph& hg = *it->second.first;
            const SolveTable& ht = *it->second.second;
            Label cA = g.labels[static_cast<std::size_t>(cops[static_cast<std::size_t>(squad[0])])];
            Label cB = g.labels[static_cast<std::size_t>(cops[static_cast<std::size_t>(squad[1])])];
            int hA = hg.vertex_of(part.value(cA, E));
            int hB = hg.vertex_of(part.value(cB, E));
            int hr = hg.vertex_of(part.value(rob, E));
            if (hA < 0 || hB < 0 || hr < 0)
                throw StrategyError("blocks" + std::to_string(part.width) +
                                    ": endgame projection left the context graph");
            std::vector<int> hc{std::min(hA, hB), std::max(hA, hB)};
            if (!ht.win(hc, hr, true))
                throw StrategyError("blocks" + std::to_string(part.width) +
                                    ": endgame position unexpectedly lost");
            std::vector<int> tg = optimal_cop_move(ht, GamePosition{hc, hr, true});
            int tA, tB;
            if (detail::closed_adjacent(hg, hA, tg[0]) && detail::closed_adjacent(hg, hB, tg[1])) {
                tA = tg[0];
                tB = tg[1];
            } else {
                tA = tg[1];
                tB = tg[0];
            }
            Label lm = part.mask(E);
            squad_target_labels = {
                (cA & ~lm) | (hg.labels[static_cast<std::size_t>(tA)] << startb),
                (cB & ~lm) | (hg.labels[static_cast<std::size_t>(tB)] << startb)};
        }
    }

    const Label mask_e = E >= 0 ? part.mask(E) : Label{0};

    std::vector<int> out(cops.begin(), cops.end());
    bool captured = false;
    for (int i = 0; i < k; ++i) {
        const int cv = cops[static_cast<std::size_t>(i)];
        const Label c = g.labels[static_cast<std::size_t>(cv)];

        if (captured) continue; // partner already captured: everyone else stays

        // 1. capture
        if (detail::closed_adjacent(g, cv, robber)) {
            out[static_cast<std::size_t>(i)] = robber;
            captured = true;
            continue;
        }

        auto emit_label = [&](Label nl) { out[static_cast<std::size_t>(i)] = g.vertex_of(nl); };

        // Single-bit step toward the robber: add the chosen needed bit, or --
        // when an adjacent leftover cop bit blocks the addition -- remove that
        // blocker instead (it is never a robber bit, so removal is progress).
        auto add_or_unblock = [&](int bit) {
            Label nl = c | (Label{1} << bit);
            if (detail::legal_label(g, nl)) {
                emit_label(nl);
                return;
            }
            ++st.fallback_events;
            Label blockers = c & detail::neighbor_mask(bit, part.n);
            emit_label(c & ~(Label{1} << std::countr_zero(blockers)));
        };
        // Bit choice within a block: the safe approach vertex for a two-bit
        // target, otherwise the lexicographically smallest resulting label.
        auto choose_bit = [&](int j, Label add) {
            if (std::popcount(add) >= 2) {
                int p = detail::probe_bit(part.len[static_cast<std::size_t>(j)], part.value(rob, j));
                if (p >= 0) return part.start[static_cast<std::size_t>(j)] + p;
            }
            return detail::lex_min_bit(add);
        };
        // Response ladder over blocks, the robber's block first.  A one-bit
        // difference is flipped outright: answered in the same round, a flip
        // costs the robber his whole move to undo, and one he leaves alone
        // is closed for good.  Against a two-bit value the all-zero cop
        // moves to the probe vertex and completes the match a round later; a
        // probe the robber dodged is walked back toward all-zero.  Returns
        // whether a move was emitted.
        auto respond = [&](int skip) -> bool {
            for (int t = -1; t < k; ++t) {
                int m = t < 0 ? hot : t;
                if (m < 0 || m == skip || (t >= 0 && m == hot)) continue;
                Label dm = (c ^ rob) & part.mask(m);
                if (!dm) continue;
                if (std::popcount(dm) == 1) {
                    if (rob & dm) add_or_unblock(std::countr_zero(dm));
                    else emit_label(c & ~dm);
                    return true;
                }
                if ((c & part.mask(m)) == 0) {
                    int p = detail::probe_bit(part.len[static_cast<std::size_t>(m)],
                                              part.value(rob, m));
                    if (p >= 0) {
                        add_or_unblock(part.start[static_cast<std::size_t>(m)] + p);
                        return true;
                    }
                    continue;
                }
                Label stray = (c & ~rob) & part.mask(m);
                if (stray) {
                    emit_label(c & ~(Label{1} << std::countr_zero(stray)));
                    return true;
                }
            }
            return false;
        };

        // 2. phase-1 mirror: a robber flip on this cop's assigned block,
        //    where that flip is the only in-block difference, is answered by
        //    the same flip in the same round.  The owner keeps its block
        //    matched move for move, so a dance there costs the robber his
        //    move while every other cop keeps working its own block.
        if (st.phase == BlockPhase::Phase1) {
            const int own = st.assignment[static_cast<std::size_t>(i)];
            if (hot_bit >= 0 && hot == own && hot != E &&
                ((c ^ rob) & part.mask(own)) == hot_mask) {
                if (rob & hot_mask) add_or_unblock(hot_bit);
                else emit_label(c & ~hot_mask);
                continue;
            }
        }

        // 3. endgame squad move: play the sub-game when synced; until then
        //    restore the match outside the excluded block with the response
        //    ladder (chasing the robber's churn one round behind would be a
        //    treadmill he sustains for free)
        if (squad.size() == 2 && (i == squad[0] || i == squad[1])) {
            if (!squad_target_labels.empty()) {
                emit_label(squad_target_labels[i == squad[0] ? 0 : 1]);
                continue;
            }
            if (respond(E)) continue;
            continue; // matched off-block; waiting for the partner
        }

        // 4. endgame bystander: park at the all-zero value on the excluded
        //    block.  A parked cop matching everywhere else captures by rule 1
        //    whenever the robber's dance brings his block value within one
        //    bit of all-zero, which a value-changing walk cannot avoid.
        if (E >= 0) {
            Label inside = c & mask_e;
            if (inside) {
                emit_label(c & ~(Label{1} << std::countr_zero(inside)));
                continue;
            }
        }

        if (st.phase == BlockPhase::Phase1) {
            // 5. phase-1 duty: work only the assigned block -- drop a
            //    leftover bit the robber has moved off, else close his block
            //    value one bit at a time, approaching a two-bit value
            //    through its probe vertex.  Bits flipped within the last two
            //    rounds are left to the mirror rule.
            const int own = st.assignment[static_cast<std::size_t>(i)];
            Label work = part.mask(own) & ~window & ~mask_e;
            Label stray = (c & ~rob) & work;
            if (stray) {
                emit_label(c & ~(Label{1} << std::countr_zero(stray)));
                continue;
            }
            Label add = (rob & ~c) & work;
            if (add) {
                add_or_unblock(choose_bit(own, add));
                continue;
            }
        } else {
            // 6. phase-2 response ladder off the excluded block.  Outside
            //    transient probes a cop only ever holds bits the robber
            //    holds, so the robber's own no-11 constraint keeps every
            //    addition legal, and each cop makes net progress on some
            //    block every round; the only dance that starves them all is
            //    confined to one block, which the endgame squad settles.
            if (respond(E)) continue;
        }

        // 7. stay
        out[static_cast<std::size_t>(i)] = cv;
    }

    // Emitted-move legality audit: single-bit (or stay/capture) moves onto
    // existing vertices only.
    for (int i = 0; i < k; ++i) {
        int from = cops[static_cast<std::size_t>(i)], to = out[static_cast<std::size_t>(i)];
        bool ok = to >= 0 && to < g.num_vertices() && detail::closed_adjacent(g, from, to);
        if (!ok) {
            ++st.illegal_move_diagnostics;
            throw StrategyError("blocks" + std::to_string(part.width) +
                                " emitted an illegal move for cop " + std::to_string(i));
        }
    }

    // Phase note: endgame play reports phase 2.1; otherwise phase 2.2 once
    // every cop has matched its own block (latched).
    if (st.endgame_active) {
        st.phase = BlockPhase::Phase2_1;
    } else if (st.phase != BlockPhase::Phase1) {
        st.phase = BlockPhase::Phase2_2;
    } else {
        bool all = true;
        for (int i = 0; i < k && all; ++i)
            all = st.matched(g.labels[static_cast<std::size_t>(out[static_cast<std::size_t>(i)])], rob,
                             st.assignment[static_cast<std::size_t>(i)]);
        if (all) st.phase = BlockPhase::Phase2_2;
    }
    return out;
}

class BlockCops : public CopStrategy {
public:
    BlockCops(const LabeledGraph& g, const BlockStrategyConfig& cfg)
        : g_(g), cfg_(cfg), state_(make_block_state(g, cfg)) {}

    std::string name() const override { return "blocks" + std::to_string(cfg_.width); }
    int cop_count() const override { return state_.part.k; }
    const CopStrategyState& state() const { return state_; }

    std::vector<int> place(SimContext& ctx) override {
        if (ctx.g.num_vertices() != g_.num_vertices())
            throw PreconditionError("block strategy bound to a different graph");
        state_ = make_block_state(g_, cfg_); // fresh state per game
        int zero = g_.vertex_of(0);
        return std::vector<int>(static_cast<std::size_t>(state_.part.k), zero);
    }

    std::vector<int> step(SimContext&, const std::vector<int>& cops, int robber,
                          int robber_prev) override {
        std::optional<int> moved;
        Label d = g_.labels[static_cast<std::size_t>(robber)] ^
                  g_.labels[static_cast<std::size_t>(robber_prev)];
        if (d != 0) moved = state_.part.block_of_bit(std::countr_zero(d));
        return block_cop_strategy_step(g_, state_, cops, robber, moved);
    }

    std::string note() const override { return to_string(state_.phase); }

private:
    const LabeledGraph& g_;
    BlockStrategyConfig cfg_;
    CopStrategyState state_;
};

// ---------------------------------------------------------------------------
// Simulation harness
// ---------------------------------------------------------------------------

// Plays one full game: cop placement, robber placement, then alternating
// cop-joint-move / robber-move rounds with capture checks after each side.
// Every emitted move is validated; a strategy emitting an illegal move aborts
// the simulation with a diagnostic naming it.
inline GameTrace simulate(const LabeledGraph& g, CopStrategy& cops_strategy,
                          RobberStrategy& robber_strategy, int max_rounds = -1,
                          std::uint64_t seed = 0) {
    SimContext ctx(g, seed);
    if (max_rounds < 0) max_rounds = default_max_rounds(g);
    GameTrace trace;
    trace.max_rounds = max_rounds;

    auto check_vertex = [&](int v, const std::string& who) {
        if (v < 0 || v >= g.num_vertices())
            throw StrategyError("illegal vertex emitted by " + who);
    };

    std::vector<int> cops = cops_strategy.place(ctx);
    if (static_cast<int>(cops.size()) != cops_strategy.cop_count())
        throw StrategyError("illegal placement size emitted by " + cops_strategy.name());
    for (int c : cops) check_vertex(c, cops_strategy.name());
    int robber = robber_strategy.place(ctx, cops);
    check_vertex(robber, robber_strategy.name());
    trace.rounds.push_back(TraceRound{0, cops, robber, cops_strategy.note()});
    if (std::find(cops.begin(), cops.end(), robber) != cops.end()) {
        trace.captured = true;
        trace.outcome_round = 0;
        return trace;
    }

    int robber_prev = robber;
    for (int r = 1; r <= max_rounds; ++r) {
        std::vector<int> next = cops_strategy.step(ctx, cops, robber, robber_prev);
        if (next.size() != cops.size())
            throw StrategyError("illegal joint move size emitted by " + cops_strategy.name());
        for (std::size_t i = 0; i < next.size(); ++i) {
            check_vertex(next[i], cops_strategy.name());
            if (next[i] != cops[i] && !g.has_edge(next[i], cops[i]))
                throw StrategyError("illegal move emitted by " + cops_strategy.name());
        }
        cops = next;
        if (std::find(cops.begin(), cops.end(), robber) != cops.end()) {
            trace.rounds.push_back(TraceRound{r, cops, robber, cops_strategy.note()});
            trace.captured = true;
            trace.outcome_round = r;
            return trace;
        }
        int rn = robber_strategy.step(ctx, cops, robber);
        check_vertex(rn, robber_strategy.name());
        if (rn != robber && !g.has_edge(rn, robber))
            throw StrategyError("illegal move emitted by " + robber_strategy.name());
        robber_prev = robber;
        robber = rn;
        trace.rounds.push_back(TraceRound{r, cops, robber, cops_strategy.note()});
        if (std::find(cops.begin(), cops.end(), robber) != cops.end()) {
            trace.captured = true;
            trace.outcome_round = r;
            return trace;
        }
    }
    trace.outcome_round = max_rounds;
    return trace;
}

// ---------------------------------------------------------------------------
// Strategy factories (CLI names)
// ---------------------------------------------------------------------------

inline std::unique_ptr<CopStrategy> make_cop_strategy(const std::string& name,
                                                      const LabeledGraph& g, int k,
                                                      const SolverOptions& opt = {}) {
    if (name == "greedy") return std::make_unique<GreedyCops>(k);
    if (name == "random") return std::make_unique<RandomCops>(k);
    if (name == "solver-optimal") {
        auto table = std::make_shared<const SolveTable>(cop_win_k(g, k, opt));
        return std::make_unique<SolverOptimalCops>(table, k);
    }
    if (name == "blocks3" || name == "blocks4") {
        BlockStrategyConfig cfg;
        cfg.width = name == "blocks3" ? 3 : 4;
        auto s = std::make_unique<BlockCops>(g, cfg);
        if (k > 0 && k != s->cop_count())
            throw PreconditionError(name + " uses " + std::to_string(s->cop_count()) +
                                    " cops on this graph, not " + std::to_string(k));
        return s;
    }
    throw PreconditionError("unknown cop strategy: " + name);
}

inline std::unique_ptr<RobberStrategy> make_robber_strategy(const std::string& name,
                                                            const LabeledGraph& g, int k,
                                                            const SolverOptions& opt = {}) {
    if (name == "thm31-evasion") return std::make_unique<EvasionRobber>();
    if (name == "random") return std::make_unique<RandomRobber>();
    if (name == "greedy-evader") return std::make_unique<GreedyEvaderRobber>();
    if (name == "solver-optimal") {
        if (k < 1) throw PreconditionError("solver-optimal robber needs at least one cop");
        auto table = std::make_shared<const SolveTable>(cop_win_k(g, k, opt));
        return std::make_unique<SolverOptimalRobber>(table);
    }
    throw PreconditionError("unknown robber strategy: " + name);
}

} // namespace copcubes

#endif
