#ifndef COPCUBES_BOUNDS_HPP
#define COPCUBES_BOUNDS_HPP

#include <optional>
#include <string>

#include "copcubes/generators.hpp"
#include "copcubes/solver.hpp"
#include "copcubes/verify.hpp"

namespace copcubes {

// --- closed-form bound calculators ---------------------------------------

// Half the minimum degree, rounded up; valid only on graphs whose labels give
// an isometric hypercube embedding (that hypothesis is checked, not assumed).
inline int lower_bound_partial_cube(const LabeledGraph& g) {
    CheckReport iso = verify_isometric_in_hypercube(g);
    if (!iso.verdict)
        throw PreconditionError("lower bound needs an isometric subcube; check failed with " +
                                iso.serialize());
    return (min_degree(g) + 1) / 2;
}

// floor((n+5)/6): the degree-based lower bound specialized to the Fibonacci
// and Lucas cubes of dimension n.
inline int fib_lucas_lower(int n) {
    if (n < 1) throw PreconditionError("fib_lucas_lower is defined for n >= 1");
    return (n + 5) / 6;
}

// ceil((n+1)/2): the upper bound for median graphs embedded in dimension n.
inline int median_upper(int n) {
    if (n < 0) throw PreconditionError("median_upper needs n >= 0");
    return (n + 2) / 2;
}

// Best closed-form upper bound for the n-dimensional Fibonacci cube: exact
// small values through n = 5, then ceil(n/3), then ceil(n/4) from n = 9 on.
inline int fibonacci_upper(int n) {
    if (n < 0) throw PreconditionError("fibonacci_upper needs n >= 0");
    if (n <= 2) return 1;
    if (n <= 5) return 2;
    if (n <= 8) return (n + 2) / 3;
    return (n + 3) / 4;
}

// ceil(n/4) for the n-dimensional Lucas cube; only established for n >= 9.
inline int lucas_upper(int n) {
    if (n < 9) throw PreconditionError("lucas_upper is defined for n >= 9");
    return (n + 3) / 4;
}

// --- aggregated report ----------------------------------------------------

struct Bound {
    int value = 0;
    std::string source;
};

struct BoundsReport {
    Bound lower;
    std::optional<Bound> upper;
    std::optional<int> exact;

    std::string serialize() const {
        std::string s = "lower=" + std::to_string(lower.value) + "(" + lower.source + ")";
        s += " upper=";
        s += upper ? std::to_string(upper->value) + "(" + upper->source + ")" : std::string("none");
        s += " exact=";
        s += exact ? std::to_string(*exact) : std::string("none");
        return s;
    }

    void assert_consistent() const {
        bool ok = true;
        if (upper && lower.value > upper->value) ok = false;
        if (exact && (lower.value > *exact || (upper && *exact > upper->value))) ok = false;
        if (!ok) throw std::logic_error("inconsistent bounds report: " + serialize());
    }
};

enum class BoundsFamily { Fibonacci, Lucas, Hypercube };

namespace detail {

inline void raise_lower(Bound& acc, int value, const std::string& source) {
    if (value > acc.value) acc = Bound{value, source};
}

inline void drop_upper(std::optional<Bound>& acc, int value, const std::string& source) {
    if (!acc || value < acc->value) acc = Bound{value, source};
}

inline std::string fibonacci_upper_source(int n) {
    if (n <= 5) return "small-case";
    if (n <= 8) return "block-width-3";
    return "block-width-4";
}

} // namespace detail

// Best-known bounds for a generated family member; with_exact additionally
// runs the solver up to k_max cops (k_max < 0 means "derive a ceiling from
// the reported upper bound").
inline BoundsReport bounds_report(BoundsFamily family, int n, bool with_exact = false,
                                  int k_max = -1, const SolverOptions& opt = {}) {
    if (n < 0) throw PreconditionError("bounds_report needs n >= 0");
    BoundsReport rep;
    rep.lower = Bound{0, ""};
    switch (family) {
    case BoundsFamily::Fibonacci:
        if (n >= 1) detail::raise_lower(rep.lower, fib_lucas_lower(n), "dimension-sixth");
        detail::drop_upper(rep.upper, fibonacci_upper(n), detail::fibonacci_upper_source(n));
        detail::drop_upper(rep.upper, median_upper(n), "median-dimension");
        break;
    case BoundsFamily::Lucas:
        if (n >= 1) detail::raise_lower(rep.lower, fib_lucas_lower(n), "dimension-sixth");
        if (n >= 9) detail::drop_upper(rep.upper, lucas_upper(n), "block-width-4");
        break;
    case BoundsFamily::Hypercube:
        detail::raise_lower(rep.lower, (n + 1) / 2, "min-degree");
        detail::drop_upper(rep.upper, median_upper(n), "median-dimension");
        break;
    }
    detail::raise_lower(rep.lower, 1, "trivial"); // one cop is always needed
    if (with_exact) {
        int ceiling = k_max >= 1 ? k_max : (rep.upper ? rep.upper->value : median_upper(n));
        LabeledGraph g = family == BoundsFamily::Fibonacci  ? gen_fibonacci_cube(n)
                         : family == BoundsFamily::Lucas    ? gen_lucas_cube(n)
                                                            : gen_hypercube(n);
        rep.exact = cop_number_exact(g, ceiling, opt);
    }
    rep.assert_consistent();
    return rep;
}

// Best-known bounds for an arbitrary labeled graph: degree lower bound (after
// the isometry check) and the dimension upper bound when the graph is median.
inline BoundsReport bounds_report(const LabeledGraph& g, bool with_exact = false,
                                  int k_max = -1, const SolverOptions& opt = {}) {
    BoundsReport rep;
    rep.lower = Bound{0, ""};
    detail::raise_lower(rep.lower, lower_bound_partial_cube(g), "min-degree");
    detail::raise_lower(rep.lower, 1, "trivial");
    if (is_median(g).verdict)
        detail::drop_upper(rep.upper, median_upper(g.dimension), "median-dimension");
    if (with_exact) {
        int ceiling = k_max >= 1 ? k_max : (rep.upper ? rep.upper->value : median_upper(g.dimension));
        rep.exact = cop_number_exact(g, ceiling, opt);
    }
    rep.assert_consistent();
    return rep;
}

} // namespace copcubes

#endif
