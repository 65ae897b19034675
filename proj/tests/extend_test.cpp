#include <doctest.h>

#include <functional>
#include <set>

#include "persuasion/evaluate.hpp"
#include "persuasion/extend.hpp"
#include "persuasion/families.hpp"
#include "persuasion/sampling.hpp"

using namespace persuasion;

namespace {

Errc code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return Errc::bad_parameters;
}

} // namespace

TEST_CASE("pairs to circle") {
    // the four-pairs-and-a-singleton layout: five added edges close the cycle
    Network pairs = make_pairs(9, {{0, 1}, {2, 3}, {4, 5}, {7, 8}});
    auto plan = extend_pairs_to_circle(pairs);
    CHECK(plan.added_edges.size() == 5);
    CHECK(is_circle(plan.extended));
    CHECK(plan.certificate.empty());

    Instance inst = validate_instance(plan.extended, Rational(1, 3), 5);
    CHECK(certify_value_upper_attained(plan.extended, inst).value == Rational(14, 15));

    auto empty_plan = extend_pairs_to_circle(make_empty(5));
    CHECK(empty_plan.added_edges.size() == 5);
    CHECK(is_circle(empty_plan.extended));

    CHECK(code_of([] { extend_pairs_to_circle(Network::make(2, {{0, 1}})); }) == Errc::too_small);
    CHECK(code_of([] { extend_pairs_to_circle(make_star(5)); }) == Errc::degree_too_high);
}

TEST_CASE("stellar extension reproduces the depth-stratified link pattern") {
    // six-node hub hierarchy plus a connected pair outside
    Network g = Network::make(8, {{0, 3}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {2, 5}, {4, 5}, {6, 7}});
    auto plan = extend_stellar(g, 0, 4);
    CHECK(plan.certificate.empty());
    std::set<Edge> added(plan.added_edges.begin(), plan.added_edges.end());
    // node 6 picks up the depth-1 level {0,1,5}, node 7 the depth-2 level {2,4}
    CHECK(added == std::set<Edge>{{0, 6}, {1, 6}, {5, 6}, {2, 7}, {4, 7}});
    CHECK(plan.roles.at("v") == std::vector<int>{6, 7});

    CHECK(code_of([&] { extend_stellar(g, 0, 6); }) == Errc::component_too_small);
    CHECK(code_of([&] { extend_stellar(g, 6, 4); }) == Errc::not_stellar);
}

TEST_CASE("stellar depth-1 with a designated outside node") {
    // star of five {0;1,2,3,4} and one singleton: the periphery outnumbers the
    // outside, so node 5 absorbs the unmatched periphery
    Network g = Network::make(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    auto plan = extend_stellar(g, 0, 4);
    CHECK(plan.certificate.empty());
    CHECK(plan.case_label == "depth1/periphery-larger");
    CHECK(plan.roles.at("designated") == std::vector<int>{5});
}

TEST_CASE("stellar extension needs enough outside receivers") {
    // depth-2 component with a single outside node
    Network g = Network::make(7, {{0, 3}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {2, 5}, {4, 5}});
    CHECK(code_of([&] { extend_stellar(g, 0, 4); }) == Errc::not_enough_outside_nodes);
}

TEST_CASE("halo extension") {
    // halo of five inside seven receivers, quota four
    std::vector<Edge> edges;
    for (int i = 0; i < 4; ++i) edges.push_back({i, (i + 1) % 4});
    for (int i = 0; i < 4; ++i) edges.push_back({i, 4});
    Network g = Network::make(7, edges);
    auto plan = extend_halo(g, 0, 4);
    CHECK(plan.certificate.empty());
    CHECK(plan.roles.at("center") == std::vector<int>{4});

    // the halo must sit strictly between the quota and the receiver count
    Network whole = make_halo(6);
    CHECK(code_of([&] { extend_halo(whole, 0, 3); }) == Errc::size_out_of_range);
    CHECK(code_of([&] { extend_halo(g, 0, 5); }) == Errc::size_out_of_range);
    CHECK(code_of([&] { extend_halo(g, 5, 4); }) == Errc::not_halo);

    // the size-4 halo is complete; its periphery dominations cannot be broken
    std::vector<Edge> k4;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) k4.push_back({i, j});
    Network with_k4 = Network::make(7, k4);
    CHECK(code_of([&] { extend_halo(with_k4, 0, 3); }) == Errc::size_out_of_range);
}

TEST_CASE("constellation extension") {
    // two centers over {0,1,2,3,6} with sub-edges 2-3, 2-6, plus three outside
    std::vector<Edge> edges{{0, 4}, {1, 4}, {2, 4}, {3, 4}, {6, 4}, {0, 5}, {1, 5},
                            {2, 5}, {3, 5}, {4, 5}, {6, 5}, {2, 3}, {2, 6}};
    Network g = Network::make(10, edges);
    auto plan = extend_constellation(g, 0, 5);
    CHECK(plan.certificate.empty());
    CHECK(plan.roles.at("centers") == std::vector<int>{4, 5});
    CHECK(plan.roles.at("u") == std::vector<int>{7});

    // not enough outside nodes: max{depth,|M|}+1 = 3 needed
    Network tight = Network::make(9, edges);
    CHECK(code_of([&] { extend_constellation(tight, 0, 5); }) == Errc::premise_violated);

    // a single center delegates to the stellar construction
    Network star_comp = Network::make(8, {{0, 3}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {2, 5}, {4, 5}});
    auto delegated = extend_constellation(star_comp, 0, 4);
    CHECK(delegated.construction == "stellar");
    CHECK(delegated.certificate.empty());

    CHECK(code_of([&] { extend_constellation(make_circle(6), 0, 3); }) == Errc::not_constellation);
}

TEST_CASE("constellation depth-1 extension") {
    // centers {0,1}, periphery {2,3,4} unlinked, three outside nodes
    std::vector<Edge> edges{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}};
    Network g = Network::make(8, edges);
    auto plan = extend_constellation(g, 0, 4);
    CHECK(plan.certificate.empty());
    CHECK(plan.case_label == "depth1/periphery-larger");
    CHECK(plan.roles.at("partners").size() == 2);
}

TEST_CASE("galaxy extension") {
    // two stars of four: n=8, quota 5, component sums {4,8} miss the quota
    Network two_stars = Network::make(8, {{0, 1}, {0, 2}, {0, 3}, {4, 5}, {4, 6}, {4, 7}});
    auto plan = extend_galaxy(two_stars, 5);
    CHECK(plan.certificate.empty());

    Network three_triangles = make_clusters(3, 3);
    auto plan3 = extend_galaxy(three_triangles, 5);
    CHECK(plan3.certificate.empty());

    Network tiny_comp = Network::make(6, {{0, 1}, {2, 3}, {2, 4}, {3, 4}, {2, 5}});
    CHECK(code_of([&] { extend_galaxy(tiny_comp, 3); }) == Errc::component_size_out_of_range);

    Network two_triangles = make_clusters(2, 3);
    CHECK(code_of([&] { extend_galaxy(two_triangles, 6); }) == Errc::subset_sums_to_quota);
    CHECK(code_of([&] { extend_galaxy(make_circle(6), 3); }) == Errc::not_galaxy);
}

TEST_CASE("cluster extension") {
    auto plan = extend_clusters(make_clusters(3, 3), 5);
    CHECK(plan.added_edges.size() == 9);  // three rings of three
    CHECK(plan.certificate.empty());

    auto small = extend_clusters(make_clusters(2, 2), 3);
    CHECK(small.added_edges.size() == 2);  // one edge per index for two clusters
    CHECK(small.certificate.empty());

    CHECK(code_of([] { extend_clusters(make_clusters(2, 2), 4); }) == Errc::quota_out_of_range);
    CHECK(code_of([] { extend_clusters(make_star(6), 4); }) == Errc::not_cluster_network);
}

TEST_CASE("extension plans keep the base edges and add only new ones") {
    Rng rng(67);
    for (int t = 0; t < 25; ++t) {
        const int n = rng.in(5, 11);
        Network base = sampling::pairs_network(rng, n);
        if (n <= 3) continue;
        auto plan = extend_pairs_to_circle(base);
        CHECK(plan.extended.includes(base));
        CHECK(plan.extended.edge_count() == base.edge_count() + static_cast<int>(plan.added_edges.size()));
        std::set<Edge> base_edges(base.edges.begin(), base.edges.end());
        for (auto e : plan.added_edges) CHECK(base_edges.count(e) == 0);
    }
}

TEST_CASE("value sweep along the four-network chain") {
    Network empty = make_empty(9);
    Network pairs = make_pairs(9, {{0, 1}, {2, 3}, {4, 5}, {7, 8}});
    Network circle = make_circle(9);
    Network complete = make_complete(9);
    Instance inst = validate_instance(empty, Rational(1, 3), 5);

    auto rows = sweep_values(inst, {empty, pairs, circle, complete},
                             {"empty", "pairs", "circle", "complete"});
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].value_lower == Rational(14, 15));
    CHECK(rows[0].certified);
    CHECK(rows[1].value_lower == Rational(8, 9));
    CHECK_FALSE(rows[1].certified);
    CHECK(rows[2].value_lower == Rational(14, 15));
    CHECK(rows[2].certified);
    CHECK(rows[2].non_monotone);  // the value rose after adding edges
    CHECK(rows[3].value_lower == Rational(2, 3));
    CHECK(rows[3].certified);
    CHECK_FALSE(rows[3].non_monotone);
    CHECK(rows[0].edge_count == 0);
    CHECK(rows[1].edge_count == 4);
    CHECK(rows[2].edge_count == 9);
    CHECK(rows[3].edge_count == 36);
}

TEST_CASE("sweep on the bridge fixture reports the reduced bound, then 1") {
    auto fx = example2_experiment();
    auto rows = sweep_values(fx.instance, {fx.base, fx.extended}, {"base", "bridged"});
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].value_upper == Rational(11, 12));  // star-component center reduction
    CHECK(rows[0].value_lower <= rows[0].value_upper);
    CHECK(rows[1].value_lower == Rational(1));
    CHECK(rows[1].non_monotone);
}

TEST_CASE("sweep chain validation") {
    Network empty = make_empty(5);
    Instance inst = validate_instance(empty, Rational(1, 4), 3);
    auto constant = sweep_values(inst, {empty, empty, empty});
    for (const auto& row : constant) CHECK_FALSE(row.non_monotone);

    Network other = make_star(5);
    CHECK(code_of([&] { sweep_values(inst, {other, empty}); }) == Errc::not_an_extension_chain);
    CHECK(code_of([&] { sweep_values(inst, {empty, make_empty(6)}); }) ==
          Errc::not_an_extension_chain);
}
