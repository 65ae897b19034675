#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>

#include "persuasion/construct.hpp"
#include "persuasion/domination.hpp"
#include "persuasion/evaluate.hpp"
#include "persuasion/families.hpp"

using namespace persuasion;

TEST_CASE("canonical private experiment") {
    Instance inst = validate_instance(make_empty(9), Rational(1, 3), 5);
    auto ce = empty_optimal(inst);
    CHECK(ce.claimed_value == Rational(14, 15));
    CHECK(ce.experiment.rows.size() == 1u + 126u + 1u);  // all-x, C(9,5) subsets, all-y

    // every Y-branch subset signal is sent with equal probability
    Rational each = v_tilde(inst) / Rational(126);
    for (const auto& row : ce.experiment.rows) {
        long xs = std::count(row.s.begin(), row.s.end(), msg_x);
        if (xs == 5) CHECK(row.p_y == each);
    }

    auto rep = evaluate(ce.experiment, make_empty(9), inst);
    for (std::size_t r = 0; r < ce.experiment.rows.size(); ++r)
        for (int i = 0; i < 9; ++i)
            if (ce.experiment.rows[r].s[i] == msg_x)
                CHECK(rep.rows[r].posterior_x[i] == Rational(1, 2));
}

TEST_CASE("canonical private experiment when the quota is everyone") {
    Instance inst = validate_instance(make_empty(5), Rational(1, 4), 5);
    auto ce = empty_optimal(inst);
    CHECK(ce.claimed_value == Rational(1, 2));  // collapses to the public split
    CHECK(ce.experiment.rows.size() == 2);
}

TEST_CASE("public experiment") {
    Instance complete9 = validate_instance(make_complete(9), Rational(1, 3), 5);
    auto pub = public_optimal(complete9);
    CHECK(pub.claimed_value == Rational(2, 3));

    Instance circle9 = validate_instance(make_circle(9), Rational(1, 3), 5);
    CHECK(public_optimal(circle9).claimed_value == Rational(2, 3));

    auto rep = evaluate(pub.experiment, complete9.network, complete9);
    int all_x_row = pub.experiment.find_row(SignalVec(9, msg_x));
    for (int i = 0; i < 9; ++i) CHECK(rep.rows[all_x_row].posterior_x[i] == Rational(1, 2));
}

TEST_CASE("circle block construction") {
    Instance inst = validate_instance(make_circle(9), Rational(1, 3), 5);
    auto ce = circle_block(inst);
    CHECK(ce.claimed_value == Rational(14, 15));
    CHECK(ce.experiment.rows.size() == 11);

    // block rows carry a y-pair at consecutive positions, mass (9/10)/9 each
    int block_rows = 0;
    for (const auto& row : ce.experiment.rows) {
        long ys = std::count(row.s.begin(), row.s.end(), msg_y);
        if (ys != 2) continue;
        ++block_rows;
        CHECK(row.p_y == Rational(1, 10));
        int first = -1;
        for (int i = 0; i < 9; ++i)
            if (row.s[i] == msg_y && row.s[(i + 8) % 9] == msg_x) first = i;
        REQUIRE(first >= 0);
        CHECK(row.s[(first + 1) % 9] == msg_y);
    }
    CHECK(block_rows == 9);

    // interior all-x windows sit at posterior exactly 1/2; exactly k receivers
    // are persuaded by each block signal
    auto rep = evaluate(ce.experiment, inst.network, inst);
    for (std::size_t r = 0; r < ce.experiment.rows.size(); ++r) {
        const auto& s = ce.experiment.rows[r].s;
        if (std::count(s.begin(), s.end(), msg_y) != 2) continue;
        int persuaded = 0;
        for (int i = 0; i < 9; ++i) {
            bool window_clear = s[i] == msg_x && s[(i + 1) % 9] == msg_x && s[(i + 8) % 9] == msg_x;
            if (window_clear) {
                CHECK(rep.rows[r].posterior_x[i] == Rational(1, 2));
                ++persuaded;
            } else {
                CHECK(rep.rows[r].posterior_x[i] == Rational(0));
            }
        }
        CHECK(persuaded == 5);
        CHECK(rep.rows[r].outcome == Outcome::x);
    }
}

TEST_CASE("circle block rotation closure") {
    Instance inst = validate_instance(make_circle(8), Rational(1, 4), 4);
    auto ce = circle_block(inst);
    // rotating every signal by one position permutes the support and keeps masses
    std::map<SignalVec, std::pair<Rational, Rational>> orig;
    for (const auto& row : ce.experiment.rows) orig[row.s] = {row.p_x, row.p_y};
    for (const auto& row : ce.experiment.rows) {
        SignalVec rot(8);
        for (int i = 0; i < 8; ++i) rot[(i + 1) % 8] = row.s[i];
        REQUIRE(orig.count(rot));
        CHECK(orig[rot].first == row.p_x);
        CHECK(orig[rot].second == row.p_y);
    }
}

TEST_CASE("circle block preconditions") {
    Instance too_big = validate_instance(make_circle(8), Rational(1, 4), 6);
    CHECK_THROWS_AS(circle_block(too_big), Error);
    try {
        circle_block(too_big);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::quota_too_large_for_blocks);
    }

    Instance not_circle = validate_instance(make_star(9), Rational(1, 4), 5);
    try {
        circle_block(not_circle);
        FAIL("expected NotACircle");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::not_a_circle);
    }
}

TEST_CASE("bridge fixture") {
    auto fx = example2_experiment();
    CHECK(fx.experiment.claimed_value == Rational(1));
    CHECK(fx.base_bound == Rational(11, 12));
    CHECK(fx.extended.edge_count() == fx.base.edge_count() + 1);

    // the same experiment without the bridge no longer persuades everyone
    auto base_rep = evaluate(fx.experiment.experiment, fx.base, fx.instance);
    CHECK(base_rep.value < Rational(1));
    CHECK(base_rep.value == Rational(2, 3));

    CHECK_FALSE(dominating_pairs(fx.extended).empty());
}

TEST_CASE("canonical experiments satisfy the optimal posterior structure") {
    Instance empty_inst = validate_instance(make_empty(7), Rational(3, 10), 4);
    auto ce = empty_optimal(empty_inst);
    auto rep = evaluate(ce.experiment, make_empty(7), empty_inst);
    CHECK(check_optimal_structure(rep, ce.experiment, empty_inst).ok);

    Instance circle_inst = validate_instance(make_circle(10), Rational(3, 10), 6);
    auto block = circle_block(circle_inst);
    auto block_rep = evaluate(block.experiment, circle_inst.network, circle_inst);
    CHECK(check_optimal_structure(block_rep, block.experiment, circle_inst).ok);
}
