#include <catch2/catch_amalgamated.hpp>

#include <optional>
#include <vector>

#include "copcubes/bounds.hpp"
#include "copcubes/errors.hpp"
#include "copcubes/generators.hpp"

using namespace copcubes;

namespace {

// Five labels on a path whose endpoints are Hamming-close but path-far.
LabeledGraph bent_path() {
    std::vector<Label> labels = {parse_label("000"), parse_label("001"), parse_label("011"),
                                 parse_label("111"), parse_label("110")};
    return LabeledGraph::explicit_edges(3, std::move(labels), {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
}

} // namespace

// ---------------------------------------------------------------------------
// closed-form bound values
// ---------------------------------------------------------------------------

TEST_CASE("degree lower bound on partial cubes") {
    REQUIRE(lower_bound_partial_cube(gen_hypercube(5)) == 3);
    REQUIRE(lower_bound_partial_cube(gen_hypercube(1)) == 1);
    REQUIRE(lower_bound_partial_cube(gen_path(6)) == 1);
    REQUIRE(lower_bound_partial_cube(gen_fibonacci_cube(9)) == 2);
    REQUIRE(lower_bound_partial_cube(gen_lucas_cube(9)) == 2);
    REQUIRE_THROWS_AS(lower_bound_partial_cube(bent_path()), PreconditionError);
}

TEST_CASE("dimension-based lower bound for fibonacci-like cubes") {
    REQUIRE(fib_lucas_lower(1) == 1);
    REQUIRE(fib_lucas_lower(6) == 1);
    REQUIRE(fib_lucas_lower(7) == 2);
    REQUIRE(fib_lucas_lower(12) == 2);
    REQUIRE(fib_lucas_lower(13) == 3);
    REQUIRE_THROWS_AS(fib_lucas_lower(0), PreconditionError);
}

TEST_CASE("median-graph dimension upper bound") {
    REQUIRE(median_upper(0) == 1);
    REQUIRE(median_upper(3) == 2);
    REQUIRE(median_upper(8) == 5);
    REQUIRE_THROWS_AS(median_upper(-1), PreconditionError);
}

TEST_CASE("piecewise fibonacci upper bound") {
    REQUIRE(fibonacci_upper(0) == 1);
    REQUIRE(fibonacci_upper(2) == 1);
    REQUIRE(fibonacci_upper(3) == 2);
    REQUIRE(fibonacci_upper(5) == 2);
    REQUIRE(fibonacci_upper(6) == 2);
    REQUIRE(fibonacci_upper(7) == 3);
    REQUIRE(fibonacci_upper(8) == 3);
    REQUIRE(fibonacci_upper(9) == 3);
    REQUIRE(fibonacci_upper(12) == 3);
    REQUIRE(fibonacci_upper(13) == 4);
}

TEST_CASE("lucas upper bound applies from dimension nine upward") {
    REQUIRE(lucas_upper(9) == 3);
    REQUIRE(lucas_upper(16) == 4);
    REQUIRE(lucas_upper(100) == 25);
    REQUIRE_THROWS_AS(lucas_upper(8), PreconditionError);
}

// ---------------------------------------------------------------------------
// arithmetic identities behind the closed forms
// ---------------------------------------------------------------------------

TEST_CASE("the dimension-sixth bound equals half the minimum degree, rounded up") {
    // min degree of both cube families is floor((n+2)/3)
    for (int n = 1; n <= 1000000; ++n) {
        int half_delta = ((n + 2) / 3 + 1) / 2;
        REQUIRE((n + 5) / 6 == half_delta);
    }
}

TEST_CASE("the fibonacci upper bound never decreases") {
    for (int n = 0; n < 10000; ++n) REQUIRE(fibonacci_upper(n) <= fibonacci_upper(n + 1));
}

// ---------------------------------------------------------------------------
// aggregated reports
// ---------------------------------------------------------------------------

TEST_CASE("fibonacci report picks the best sources") {
    REQUIRE(bounds_report(BoundsFamily::Fibonacci, 12).serialize() ==
            "lower=2(dimension-sixth) upper=3(block-width-4) exact=none");
    REQUIRE(bounds_report(BoundsFamily::Fibonacci, 7).serialize() ==
            "lower=2(dimension-sixth) upper=3(block-width-3) exact=none");
    REQUIRE(bounds_report(BoundsFamily::Fibonacci, 0).serialize() ==
            "lower=1(trivial) upper=1(small-case) exact=none");
    // in low dimensions the median bound can beat the piecewise one: never here
    REQUIRE(bounds_report(BoundsFamily::Fibonacci, 5).serialize() ==
            "lower=1(dimension-sixth) upper=2(small-case) exact=none");
}

TEST_CASE("fibonacci report with the solver runs agrees with the small cop numbers") {
    BoundsReport rep = bounds_report(BoundsFamily::Fibonacci, 5, true, 3);
    REQUIRE(rep.serialize() == "lower=1(dimension-sixth) upper=2(small-case) exact=2");
}

TEST_CASE("lucas reports carry no closed-form upper bound below dimension nine") {
    REQUIRE(bounds_report(BoundsFamily::Lucas, 2).serialize() ==
            "lower=1(dimension-sixth) upper=none exact=none");
    REQUIRE(bounds_report(BoundsFamily::Lucas, 9).serialize() ==
            "lower=2(dimension-sixth) upper=3(block-width-4) exact=none");
    BoundsReport rep = bounds_report(BoundsFamily::Lucas, 8, true, 3);
    REQUIRE(rep.serialize() == "lower=2(dimension-sixth) upper=none exact=3");
}

TEST_CASE("hypercube report") {
    REQUIRE(bounds_report(BoundsFamily::Hypercube, 3).serialize() ==
            "lower=2(min-degree) upper=2(median-dimension) exact=none");
    BoundsReport rep = bounds_report(BoundsFamily::Hypercube, 3, true);
    REQUIRE(rep.exact == 2);
}

TEST_CASE("reports for arbitrary labeled graphs") {
    BoundsReport rep = bounds_report(gen_path(5));
    REQUIRE(rep.serialize() == "lower=1(min-degree) upper=3(median-dimension) exact=none");
    BoundsReport pe = bounds_report(gen_path(5), true, 2);
    REQUIRE(pe.exact == 1);
}

TEST_CASE("reports stay internally consistent across the small range") {
    for (int n = 0; n <= 14; ++n) {
        BoundsReport f = bounds_report(BoundsFamily::Fibonacci, n);
        REQUIRE(f.lower.value <= f.upper->value);
        BoundsReport h = bounds_report(BoundsFamily::Hypercube, n);
        REQUIRE(h.lower.value <= h.upper->value);
    }
    for (int n = 0; n <= 6; ++n) {
        BoundsReport fe = bounds_report(BoundsFamily::Fibonacci, n, true, 3);
        REQUIRE(fe.exact.has_value());
        REQUIRE(fe.lower.value <= *fe.exact);
        REQUIRE(*fe.exact <= fe.upper->value);
    }
}
