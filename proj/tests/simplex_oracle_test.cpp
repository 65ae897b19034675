#include <doctest.h>

#include "persuasion/construct.hpp"
#include "persuasion/evaluate.hpp"
#include "persuasion/families.hpp"
#include "persuasion/json_io.hpp"
#include "persuasion/oracle.hpp"
#include "persuasion/sampling.hpp"
#include "persuasion/simplex.hpp"

using namespace persuasion;

TEST_CASE("simplex basics") {
    {  // max q1 subject to q1 <= 1/2
        LinearProgram lp;
        lp.num_vars = 1;
        lp.objective = {Rational(1)};
        lp.ub_rows = {{Rational(1)}};
        lp.ub_rhs = {Rational(1, 2)};
        auto sol = simplex_solve(lp);
        CHECK(sol.value == Rational(1, 2));
        CHECK(sol.x[0] == Rational(1, 2));
    }
    {  // equality constraints via two-phase
        LinearProgram lp;
        lp.num_vars = 2;
        lp.objective = {Rational(3), Rational(1)};
        lp.eq_rows = {{Rational(1), Rational(1)}};
        lp.eq_rhs = {Rational(1)};
        auto sol = simplex_solve(lp);
        CHECK(sol.value == Rational(3));
        CHECK(sol.x[0] == Rational(1));
    }
    {  // infeasible: x <= -1 with x >= 0
        LinearProgram lp;
        lp.num_vars = 1;
        lp.objective = {Rational(0)};
        lp.ub_rows = {{Rational(1)}};
        lp.ub_rhs = {Rational(-1)};
        CHECK_THROWS_AS(simplex_solve(lp), Error);
    }
    {  // unbounded
        LinearProgram lp;
        lp.num_vars = 1;
        lp.objective = {Rational(1)};
        try {
            simplex_solve(lp);
            FAIL("expected Unbounded");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::unbounded);
        }
    }
    {  // degenerate with redundant rows still terminates
        LinearProgram lp;
        lp.num_vars = 2;
        lp.objective = {Rational(1), Rational(1)};
        lp.ub_rows = {{Rational(1), Rational(1)}, {Rational(1), Rational(1)}, {Rational(2), Rational(2)}};
        lp.ub_rhs = {Rational(1), Rational(1), Rational(2)};
        lp.eq_rows = {{Rational(1), Rational(-1)}};
        lp.eq_rhs = {Rational(0)};
        auto sol = simplex_solve(lp);
        CHECK(sol.value == Rational(1));
    }
}

TEST_CASE("anchored oracle closed-form cross-checks") {
    // 3 receivers, quota 2, prior 1/4: the private bound (5/2)(1/4) = 5/8 is reached
    Instance empty3 = validate_instance(make_empty(3), Rational(1, 4), 2);
    auto res = anchored_optimal(empty3);
    CHECK(res.lower_bound == Rational(5, 8));
    CHECK(res.upper_bound == Rational(5, 8));
    CHECK(res.exact);

    Instance empty9 = validate_instance(make_empty(9), Rational(1, 3), 5);
    auto res9 = anchored_optimal(empty9);
    CHECK(res9.lower_bound == Rational(14, 15));
    CHECK(res9.exact);

    // merging reduces the complete network to one receiver: public is optimal
    Instance complete5 = validate_instance(make_complete(5), Rational(1, 4), 3);
    auto resc = anchored_optimal(complete5);
    CHECK(resc.lower_bound == Rational(1, 2));

    Instance big = validate_instance(make_empty(11), Rational(1, 4), 6);
    CHECK_THROWS_AS(anchored_optimal(big), Error);
}

TEST_CASE("anchored oracle finds the communicating-pairs optimum") {
    Network pairs = make_pairs(9, {{0, 1}, {2, 3}, {4, 5}, {7, 8}});
    Instance inst = validate_instance(pairs, Rational(1, 3), 5);
    auto res = anchored_optimal(inst);
    CHECK(res.lower_bound == Rational(8, 9));
    CHECK(res.upper_bound == Rational(14, 15));
    CHECK_FALSE(res.exact);

    auto rep = evaluate(res.witness, pairs, inst);
    CHECK(rep.value == Rational(8, 9));
    CHECK(rep.x_given_x == Rational(1));
    CHECK(rep.x_given_y == Rational(5, 6));
}

TEST_CASE("anchored oracle certifies domination-free circles") {
    for (int n : {6, 7}) {
        Instance inst = validate_instance(make_circle(n), Rational(1, 4), simple_majority(n));
        REQUIRE(inst.k <= n - 3);
        auto res = anchored_optimal(inst);
        CHECK(res.lower_bound == v_upper(inst));
        CHECK(res.exact);
    }
}

TEST_CASE("anchored witnesses are genuine and within bounds") {
    Rng rng(61);
    for (int t = 0; t < 15; ++t) {
        const int n = rng.in(2, 7);
        const int k = rng.in(simple_majority(n), n);
        Network g = sampling::any_network(rng, n);
        Instance inst = validate_instance(g, Rational(1, 4), k);
        auto res = anchored_optimal(inst);
        CHECK(evaluate(res.witness, g, inst).value == res.lower_bound);
        CHECK(res.lower_bound >= v_public(inst));
        CHECK(res.lower_bound <= v_upper(inst));
        if (dominating_pairs(g).empty() && (k <= n - 3 || g.edges.empty()))
            CHECK(res.lower_bound == v_upper(inst));
    }
}

TEST_CASE("exhaustive oracle on tiny instances") {
    Instance empty3 = validate_instance(make_empty(3), Rational(1, 4), 2);
    auto res = exhaustive_optimal(empty3);
    CHECK(res.lower_bound == Rational(5, 8));
    CHECK(res.upper_bound == Rational(5, 8));
    CHECK(res.exact);

    Instance complete3 = validate_instance(make_complete(3), Rational(1, 4), 2);
    auto resc = exhaustive_optimal(complete3);
    CHECK(resc.lower_bound == Rational(1, 2));
    CHECK(resc.exact);

    // a two-member clique plus an isolated receiver: public is already optimal
    Network clique_iso = Network::make(3, {{0, 1}});
    Instance ci = validate_instance(clique_iso, Rational(1, 4), 2);
    auto resi = exhaustive_optimal(ci);
    CHECK(resi.lower_bound == Rational(1, 2));
    CHECK(resi.exact);

    // exhaustive covers a superset of anchored experiments
    for (auto* inst : {&empty3, &complete3, &ci})
        CHECK(exhaustive_optimal(*inst).lower_bound >= anchored_optimal(*inst).lower_bound);

    Instance big = validate_instance(make_empty(5), Rational(1, 4), 3);
    CHECK_THROWS_AS(exhaustive_optimal(big), Error);
    Instance star4 = validate_instance(make_star(4), Rational(1, 4), 3);
    try {
        exhaustive_optimal(star4);  // assignment space 2^28 exceeds the cap
        FAIL("expected TooLarge");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::too_large);
    }
}

TEST_CASE("oracle determinism") {
    Network pairs = make_pairs(6, {{0, 1}, {2, 3}});
    Instance inst = validate_instance(pairs, Rational(1, 4), 4);
    auto a = anchored_optimal(inst);
    auto b = anchored_optimal(inst);
    CHECK(a.lower_bound == b.lower_bound);
    CHECK(experiment_to_json(a.witness).dump() == experiment_to_json(b.witness).dump());
}
