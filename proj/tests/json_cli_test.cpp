#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include "persuasion/construct.hpp"
#include "persuasion/json_io.hpp"
#include "persuasion/sampling.hpp"

using namespace persuasion;

namespace {

struct CommandResult {
    int status = -1;
    std::string out;
};

CommandResult run_command(const std::string& cmd) {
    CommandResult res;
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) res.out.append(buf.data(), got);
    int rc = pclose(pipe);
    res.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return res;
}

const std::string bin = PERSUADE_BIN;

} // namespace

TEST_CASE("network JSON round-trips bit-exactly") {
    Rng rng(71);
    for (int t = 0; t < 30; ++t) {
        Network g = sampling::any_network(rng, rng.in(1, 12));
        auto j = network_to_json(g);
        Network back = network_from_json(j);
        CHECK(back == g);
        CHECK(network_to_json(back).dump() == j.dump());
    }
    CHECK_THROWS_AS(network_from_json(json::parse(R"({"n":3})")), Error);
    CHECK_THROWS_AS(network_from_json(json::parse(R"({"n":3,"edges":[[0,0]]})")), Error);
}

TEST_CASE("experiment JSON round-trips bit-exactly") {
    Rng rng(73);
    for (int t = 0; t < 30; ++t) {
        auto exp = sampling::random_experiment(rng, rng.in(1, 6), 10);
        auto j = experiment_to_json(exp);
        Experiment back = experiment_from_json(j);
        CHECK(experiment_to_json(back).dump() == j.dump());
        for (std::size_t r = 0; r < exp.rows.size(); ++r) {
            CHECK(back.rows[r].s == exp.rows[r].s);
            CHECK(back.rows[r].p_x == exp.rows[r].p_x);
            CHECK(back.rows[r].p_y == exp.rows[r].p_y);
        }
    }
}

TEST_CASE("cli: family make and dominate") {
    auto make = run_command(bin + " family make --kind circle --n 6 -o /tmp/persuade_test_c6.json");
    CHECK(make.status == 0);
    auto dom = run_command(bin + " dominate --network /tmp/persuade_test_c6.json");
    CHECK(dom.status == 0);
    CHECK(dom.out == "count 0\n");

    auto star = run_command(bin + " family make --kind star --n 4 -o /tmp/persuade_test_s4.json");
    CHECK(star.status == 0);
    auto dom_star = run_command(bin + " dominate --network /tmp/persuade_test_s4.json");
    CHECK(dom_star.status == 0);
    CHECK(dom_star.out == "0>1\n0>2\n0>3\ncount 3\n");
}

TEST_CASE("cli: eval prints the exact value") {
    auto fx = example2_experiment();
    save_json("/tmp/persuade_test_g2.json", network_to_json(fx.extended));
    save_json("/tmp/persuade_test_e2.json", experiment_to_json(fx.experiment.experiment));
    auto res = run_command(bin +
                           " eval --network /tmp/persuade_test_g2.json"
                           " --experiment /tmp/persuade_test_e2.json"
                           " --prior 1/3 --k 4 --allow-boundary -o /tmp/persuade_test_rep.json");
    CHECK(res.status == 0);
    CHECK(res.out == "1\n");

    // without the boundary flag the prior is rejected with exit code 2
    auto rejected = run_command(bin +
                                " eval --network /tmp/persuade_test_g2.json"
                                " --experiment /tmp/persuade_test_e2.json --prior 1/3 --k 4");
    CHECK(rejected.status == 2);
}

TEST_CASE("cli: oracle cap errors exit with 3") {
    auto res = run_command(bin + " family make --kind empty --n 12 -o /tmp/persuade_test_e12.json");
    CHECK(res.status == 0);
    auto oracle = run_command(bin +
                              " oracle --network /tmp/persuade_test_e12.json --k 6 --prior 1/4");
    CHECK(oracle.status == 3);
}

TEST_CASE("cli: the sweep fixture is byte-deterministic") {
    auto first = run_command(bin + " repro figure1");
    auto second = run_command(bin + " repro figure1");
    CHECK(first.status == 0);
    CHECK(first.out == second.out);
    CHECK(first.out.find("empty,0,14/15,14/15,true,domination,") != std::string::npos);
    CHECK(first.out.find("pairs,4,8/9,14/15,false,oracle,") != std::string::npos);
    CHECK(first.out.find("circle,9,14/15,14/15,true,domination,up") != std::string::npos);
    CHECK(first.out.find("complete,36,2/3,2/3,true,public,") != std::string::npos);
}

TEST_CASE("cli: selftest runs green on two seeds") {
    CHECK(run_command(bin + " selftest --seed 1").status == 0);
    CHECK(run_command(bin + " selftest --seed 99").status == 0);
}
