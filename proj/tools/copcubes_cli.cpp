// Command-line front end: graph generation, structural verification, exact
// solving, strategy simulation, bounds reports, and the conjecture probe.
//
// Exit codes: 0 success, 2 false verdict or conjecture violation,
// 3 precondition/format error, 4 resource cap, 1 anything else.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "copcubes/bounds.hpp"
#include "copcubes/conjecture.hpp"
#include "copcubes/generators.hpp"
#include "copcubes/io.hpp"
#include "copcubes/solver.hpp"
#include "copcubes/strategies.hpp"
#include "copcubes/verify.hpp"

namespace {

using namespace copcubes;

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
}

LabeledGraph generate_family(const std::string& family, int n) {
    if (family == "hypercube") return gen_hypercube(n);
    if (family == "fibonacci") return gen_fibonacci_cube(n);
    if (family == "lucas") {
        if (n < 1) throw PreconditionError("lucas family needs n >= 1");
        return gen_lucas_cube(n);
    }
    if (family == "path") return gen_path(n);
    throw PreconditionError("unknown family: " + family);
}

struct Args {
    std::string family, in_path, out_path, cops_name, robber_name, witness_path;
    std::vector<std::string> checks;
    int n = 0, k_max = 8, bounds_k_max = -1, k = -1, rounds = -1, n_max = 0, k_budget = 0;
    std::uint64_t seed = 0;
    bool exact = false;
};

int cmd_generate(const Args& a) {
    LabeledGraph g = generate_family(a.family, a.n);
    write_output(a.out_path, write_cubegraph(g));
    return 0;
}

int cmd_verify(const Args& a) {
    LabeledGraph g = read_cubegraph_file(a.in_path);
    std::string out;
    bool all_true = true;
    for (const std::string& c : a.checks) {
        CheckReport rep;
        if (c == "partial-cube") rep = verify_isometric_in_hypercube(g);
        else if (c == "median") rep = is_median(g);
        else if (c == "lemma31") rep = check_lemma31(g);
        else if (c == "two-ball") rep = two_ball_center(g);
        else throw PreconditionError("unknown check: " + c);
        out += c + ": " + rep.serialize() + "\n";
        all_true = all_true && rep.verdict;
    }
    write_output(a.out_path, out);
    return all_true ? 0 : 2;
}

int cmd_solve(const Args& a) {
    LabeledGraph g = read_cubegraph_file(a.in_path);
    std::optional<int> c = cop_number_exact(g, a.k_max);
    write_output(a.out_path, c ? "cop_number=" + std::to_string(*c) + "\n"
                               : std::string("cop_number=exceeds\n"));
    return 0;
}

int cmd_simulate(const Args& a) {
    LabeledGraph g = read_cubegraph_file(a.in_path);
    int k = a.k;
    if (k < 0) {
        if (a.cops_name == "blocks3") k = (g.dimension + 2) / 3;
        else if (a.cops_name == "blocks4") k = (g.dimension + 3) / 4;
        else throw PreconditionError("--k is required for cop strategy " + a.cops_name);
    }
    std::unique_ptr<CopStrategy> cops = make_cop_strategy(a.cops_name, g, k);
    std::unique_ptr<RobberStrategy> robber = make_robber_strategy(a.robber_name, g, k);
    GameTrace trace = simulate(g, *cops, *robber, a.rounds, a.seed);
    write_output(a.out_path, trace.serialize(g));
    return 0;
}

int cmd_bounds(const Args& a) {
    BoundsFamily fam;
    if (a.family == "fibonacci") fam = BoundsFamily::Fibonacci;
    else if (a.family == "lucas") fam = BoundsFamily::Lucas;
    else if (a.family == "hypercube") fam = BoundsFamily::Hypercube;
    else throw PreconditionError("unknown family: " + a.family);
    if (fam == BoundsFamily::Lucas && a.n < 1)
        throw PreconditionError("lucas family needs n >= 1");
    BoundsReport rep = bounds_report(fam, a.n, a.exact, a.bounds_k_max);
    write_output(a.out_path, rep.serialize() + "\n");
    return 0;
}

int cmd_probe(const Args& a) {
    ConjectureReport rep = probe_conjecture(a.n_max, a.k_budget);
    write_output(a.out_path, rep.serialize());
    if (rep.violations() > 0) {
        std::string w;
        for (const ConjectureRow& r : rep.rows)
            if (!r.ok()) w += r.serialize() + "\n";
        std::ofstream out(a.witness_path, std::ios::binary);
        if (out) out << w;
        return 2;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cops-and-robbers toolkit for hypercube-embedded graphs"};
    app.require_subcommand(1);
    Args a;

    CLI::App* gen = app.add_subcommand("generate", "write a graph file for a family member");
    gen->add_option("--family", a.family, "hypercube | fibonacci | lucas | path")->required();
    gen->add_option("--n", a.n, "dimension (path: vertex count)")->required();
    gen->add_option("--out", a.out_path, "output file (default: stdout)");

    CLI::App* ver = app.add_subcommand("verify", "run structural checks on a graph file");
    ver->add_option("--in", a.in_path, "graph file")->required();
    ver->add_option("--checks", a.checks,
                    "subset of partial-cube,median,lemma31,two-ball (default: all)")
        ->delimiter(',');
    ver->add_option("--out", a.out_path, "output file (default: stdout)");

    CLI::App* sol = app.add_subcommand("solve", "exact cop number by backward induction");
    sol->add_option("--in", a.in_path, "graph file")->required();
    sol->add_option("--k-max", a.k_max, "largest cop count to try (default 8)");
    sol->add_option("--out", a.out_path, "output file (default: stdout)");

    CLI::App* sim = app.add_subcommand("simulate", "play one cops-vs-robber game");
    sim->add_option("--in", a.in_path, "graph file")->required();
    sim->add_option("--cops", a.cops_name, "greedy | random | solver-optimal | blocks3 | blocks4")
        ->required();
    sim->add_option("--robber", a.robber_name,
                    "thm31-evasion | random | greedy-evader | solver-optimal")
        ->required();
    sim->add_option("--k", a.k, "cop count (blocks strategies derive it)");
    sim->add_option("--rounds", a.rounds, "round cutoff (default: 50 * |V|)");
    sim->add_option("--seed", a.seed, "random seed (default 0)");
    sim->add_option("--out", a.out_path, "trace file (default: stdout)");

    CLI::App* bnd = app.add_subcommand("bounds", "closed-form bounds report for a family member");
    bnd->add_option("--family", a.family, "hypercube | fibonacci | lucas")->required();
    bnd->add_option("--n", a.n, "dimension")->required();
    bnd->add_flag("--exact", a.exact, "also compute the exact value with the solver");
    bnd->add_option("--k-max", a.bounds_k_max,
                    "cop-count ceiling for --exact (default: the reported upper bound)");
    bnd->add_option("--out", a.out_path, "output file (default: stdout)");

    CLI::App* prb = app.add_subcommand("probe-conjecture",
                                       "exhaustively test c <= ceil((n+1)/2) on small subcubes");
    prb->add_option("--n-max", a.n_max, "largest hypercube dimension (<= 4)")->required();
    prb->add_option("--k-budget", a.k_budget, "cap on cop counts (0 = none)");
    prb->add_option("--out", a.out_path, "table file (default: stdout)");
    prb->add_option("--witness", a.witness_path, "violation witness file")
        ->default_val("conjecture-violations.txt");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 3;
    }

    if (a.checks.empty()) a.checks = {"partial-cube", "median", "lemma31", "two-ball"};

    try {
        if (gen->parsed()) return cmd_generate(a);
        if (ver->parsed()) return cmd_verify(a);
        if (sol->parsed()) return cmd_solve(a);
        if (sim->parsed()) return cmd_simulate(a);
        if (bnd->parsed()) return cmd_bounds(a);
        if (prb->parsed()) return cmd_probe(a);
        return 3;
    } catch (const ResourceCapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const PreconditionError& e) { // FormatError included
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
