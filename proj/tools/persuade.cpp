// persuade: exact evaluation of information experiments on spillover networks,
// canonical constructions, domination certificates, extension builders and the
// small-instance LP oracle, exposed as one command line tool.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "persuasion/construct.hpp"
#include "persuasion/domination.hpp"
#include "persuasion/evaluate.hpp"
#include "persuasion/extend.hpp"
#include "persuasion/families.hpp"
#include "persuasion/instance.hpp"
#include "persuasion/json_io.hpp"
#include "persuasion/oracle.hpp"
#include "persuasion/sampling.hpp"
#include "persuasion/transforms.hpp"

using namespace persuasion;

namespace {

int default_cap() {
    if (const char* env = std::getenv("PERSUASION_CAP")) {
        try {
            return std::max(1, std::stoi(env));
        } catch (...) {}
    }
    return 10;
}

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty()) std::cout << j.dump(2) << "\n";
    else save_json(out_path, j);
}

std::vector<Edge> parse_pair_list(const std::string& text) {
    std::vector<Edge> pairs;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto dash = item.find('-');
        if (dash == std::string::npos) throw Error(Errc::bad_parameters, "pairs look like 0-1,2-3");
        pairs.emplace_back(std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1)));
    }
    return pairs;
}

Instance make_instance(const Network& g, const std::string& prior, int k, bool allow_boundary) {
    return validate_instance(g, Rational::parse(prior), k, allow_boundary);
}

std::string csv_line(const SweepRow& row) {
    std::ostringstream os;
    os << row.label << "," << row.edge_count << "," << row.value_lower.str() << ","
       << row.value_upper.str() << "," << (row.certified ? "true" : "false") << "," << row.source
       << "," << (row.non_monotone ? "up" : "");
    return os.str();
}

int run_selftest(std::uint64_t seed) {
    Rng rng(seed);
    int checks = 0;
    auto expect = [&](bool ok, const std::string& what) {
        ++checks;
        if (!ok) throw Error(Errc::certificate_violation, "selftest failed: " + what);
    };

    for (int t = 0; t < 50; ++t) {
        long num = static_cast<long>(rng.next() % 20001) - 10000;
        long den = 1 + static_cast<long>(rng.next() % 999);
        Rational r(num, den);
        expect(Rational::parse(r.str()) == r, "rational round-trip");
    }
    for (int t = 0; t < 50; ++t) {
        const int n = rng.in(2, 9);
        const int k = rng.in(simple_majority(n), n);
        Instance inst = validate_instance(sampling::any_network(rng, n), Rational(1, 4), k);
        expect(v_upper(inst) == inst.prior_x + inst.prior_y() * v_tilde(inst), "bound identity");
        expect(v_public(inst) <= v_upper(inst), "public below private bound");
        auto exp = sampling::random_experiment(rng, n, 10);
        auto rep = evaluate(exp, inst.network, inst);
        expect(rep.value <= v_upper(inst), "value within the private bound");
        for (int i = 0; i < n; ++i) {
            Rational mean(0);
            for (std::size_t rr = 0; rr < exp.rows.size(); ++rr)
                mean += (inst.prior_x * exp.rows[rr].p_x + inst.prior_y() * exp.rows[rr].p_y) *
                        rep.rows[rr].posterior_x[i];
            expect(mean == inst.prior_x, "posterior expectation equals the prior");
        }
    }
    for (int t = 0; t < 10; ++t) {
        const int n = rng.in(6, 10);
        const int k = simple_majority(n);
        const int comp = rng.in(k + 1, n - 1);
        std::vector<int> comp_nodes;
        if (comp < 3) continue;
        Network g = sampling::stellar_component_network(rng, n, comp, &comp_nodes);
        auto cert = recognize_stellar(g, comp_nodes);
        if (n - comp < cert.depth) continue;  // not enough outside receivers
        auto plan = extend_stellar(g, comp_nodes[0], k);
        expect(plan.certificate.empty(), "stellar extension certificate");
    }
    std::cout << "selftest: " << checks << " checks passed (seed " << seed << ")\n";
    return 0;
}

json repro_example2() {
    auto fx = example2_experiment();
    auto rep = evaluate(fx.experiment.experiment, fx.extended, fx.instance);
    auto base_rep = evaluate(fx.experiment.experiment, fx.base, fx.instance);
    auto dom = dominating_pairs(fx.extended);
    json j;
    j["base_network"] = network_to_json(fx.base);
    j["extended_network"] = network_to_json(fx.extended);
    j["experiment"] = experiment_to_json(fx.experiment.experiment);
    j["base_value_bound"] = fx.base_bound.str();
    j["base_value_of_this_experiment"] = base_rep.value.str();
    j["extended_value"] = rep.value.str();
    j["dominating_pairs_extended"] = dom.count();
    json pairs = json::array();
    for (auto [a, b] : dom.pairs) pairs.push_back(std::to_string(a) + ">" + std::to_string(b));
    j["pairs"] = pairs;
    return j;
}

std::vector<std::string> repro_figure1(int cap) {
    Network empty = make_empty(9);
    Network pairs = make_pairs(9, {{0, 1}, {2, 3}, {4, 5}, {7, 8}});
    Network circle = make_circle(9);
    Network complete = make_complete(9);
    Instance inst = validate_instance(empty, Rational(1, 3), 5);
    auto rows = sweep_values(inst, {empty, pairs, circle, complete},
                             {"empty", "pairs", "circle", "complete"}, cap);
    std::vector<std::string> lines{"label,edges,value_lower,value_upper,certified,source,flag"};
    for (const auto& row : rows) lines.push_back(csv_line(row));
    return lines;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact persuasion experiments on networks with one-hop spillovers"};
    app.require_subcommand(1);

    std::string net_path, exp_path, out_path, prior = "1/3", kind, pair_list, mode = "anchored";
    std::string label_list;
    int k = 0, n = 0, q = 0, p = 0, member = 0, i_arg = 0, j_arg = 0;
    bool allow_boundary = false;
    int cap = default_cap();
    std::uint64_t seed = 1;
    std::vector<std::string> chain_paths;

    auto* family = app.add_subcommand("family", "make or check named network families");
    auto* family_make = family->add_subcommand("make", "generate a named family");
    family_make->add_option("--kind", kind, "empty|circle|star|complete|halo|clusters|pairs")
        ->required();
    family_make->add_option("--n", n, "receiver count");
    family_make->add_option("--q", q, "cluster count");
    family_make->add_option("--p", p, "cluster size");
    family_make->add_option("--pairs", pair_list, "pair list like 0-1,2-3");
    family_make->add_option("-o,--out", out_path, "output file (stdout if absent)");
    auto* family_check = family->add_subcommand("check", "classify a network");
    family_check->add_option("--network", net_path)->required();

    auto* eval_cmd = app.add_subcommand("eval", "evaluate an experiment on a network");
    eval_cmd->add_option("--network", net_path)->required();
    eval_cmd->add_option("--experiment", exp_path)->required();
    eval_cmd->add_option("--prior", prior, "prior of the good state, a/b")->required();
    eval_cmd->add_option("--k", k, "critical mass")->required();
    eval_cmd->add_flag("--allow-boundary", allow_boundary, "accept the boundary prior k/(n+k)");
    eval_cmd->add_option("-o,--out", out_path);

    auto* dominate = app.add_subcommand("dominate", "list information-dominating pairs");
    dominate->add_option("--network", net_path)->required();

    auto* construct = app.add_subcommand("construct", "build a canonical experiment");
    construct->add_option("what", kind, "empty-opt|public-opt|circle-block|example2")->required();
    construct->add_option("--network", net_path, "target network (circle-block, public-opt)");
    construct->add_option("--n", n, "receiver count (empty-opt, public-opt without --network)");
    construct->add_option("--prior", prior);
    construct->add_option("--k", k);
    construct->add_flag("--allow-boundary", allow_boundary);
    construct->add_option("-o,--out", out_path);

    auto* transform = app.add_subcommand("transform", "value-preserving experiment rewrites");
    transform->add_option("what", kind, "merge|replicate|center-collapse|center-align")->required();
    transform->add_option("--network", net_path)->required();
    transform->add_option("--experiment", exp_path)->required();
    transform->add_option("--i", i_arg, "first receiver (merge)");
    transform->add_option("--j", j_arg, "second receiver (merge)");
    transform->add_option("--member", member, "any node of the star component");
    transform->add_option("--k", k);
    transform->add_option("--prior", prior);
    transform->add_flag("--allow-boundary", allow_boundary);
    transform->add_option("-o,--out", out_path);

    auto* extend = app.add_subcommand("extend", "sender-beneficial network extensions");
    extend->add_option("what", kind,
                       "pairs-to-circle|stellar|halo|constellation|galaxy|clusters")
        ->required();
    extend->add_option("--network", net_path)->required();
    extend->add_option("--component", member, "any node of the target component");
    extend->add_option("--k", k)->required();
    extend->add_option("--prior", prior);
    extend->add_option("-o,--out", out_path);

    auto* oracle = app.add_subcommand("oracle", "small-instance ground truth");
    oracle->add_option("--network", net_path)->required();
    oracle->add_option("--k", k)->required();
    oracle->add_option("--prior", prior)->required();
    oracle->add_option("--mode", mode, "anchored|exhaustive");
    oracle->add_option("--cap", cap, "size cap for the anchored mode");
    oracle->add_flag("--allow-boundary", allow_boundary);
    oracle->add_option("-o,--out", out_path);

    auto* sweep = app.add_subcommand("sweep", "values along an extension chain (CSV)");
    sweep->add_option("--chain", chain_paths, "network files, base first")->required();
    sweep->add_option("--k", k)->required();
    sweep->add_option("--prior", prior)->required();
    sweep->add_option("--labels", label_list, "comma-separated row labels");
    sweep->add_flag("--allow-boundary", allow_boundary);
    sweep->add_option("--cap", cap);

    auto* repro = app.add_subcommand("repro", "rebuild the bundled end-to-end fixtures");
    repro->add_option("which", kind, "figure1|example2")->required();
    repro->add_option("-o,--out", out_path);
    repro->add_option("--cap", cap);

    auto* selftest = app.add_subcommand("selftest", "randomized invariant checks");
    selftest->add_option("--seed", seed, "sampling seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (family_make->parsed()) {
            Network g;
            if (kind == "empty") g = make_empty(n);
            else if (kind == "circle") g = make_circle(n);
            else if (kind == "star") g = make_star(n);
            else if (kind == "complete") g = make_complete(n);
            else if (kind == "halo") g = make_halo(n);
            else if (kind == "clusters") g = make_clusters(q, p);
            else if (kind == "pairs") g = make_pairs(n, parse_pair_list(pair_list));
            else throw Error(Errc::unknown_command, "unknown family kind '" + kind + "'");
            emit(network_to_json(g, classify(g).kind), out_path);
        } else if (family_check->parsed()) {
            Network g = network_from_json(load_json(net_path));
            auto label = classify(g);
            json j;
            j["kind"] = label.kind;
            j["parameters"] = label.parameters;
            std::cout << j.dump(2) << "\n";
        } else if (eval_cmd->parsed()) {
            Network g = network_from_json(load_json(net_path));
            Experiment exp = experiment_from_json(load_json(exp_path));
            Instance inst = make_instance(g, prior, k, allow_boundary);
            auto rep = evaluate(exp, g, inst);
            emit(report_to_json(rep, exp), out_path);
            std::cout << rep.value.str() << "\n";
        } else if (dominate->parsed()) {
            Network g = network_from_json(load_json(net_path));
            auto rep = dominating_pairs(g);
            for (auto [a, b] : rep.pairs) std::cout << a << ">" << b << "\n";
            std::cout << "count " << rep.count() << "\n";
        } else if (construct->parsed()) {
            if (kind == "example2") {
                auto fx = example2_experiment();
                emit(experiment_to_json(fx.experiment.experiment), out_path);
                std::cout << "value " << fx.experiment.claimed_value.str() << " on the extended network\n";
            } else {
                Network g = net_path.empty() ? make_empty(n) : network_from_json(load_json(net_path));
                Instance inst = make_instance(g, prior, k, allow_boundary);
                CanonicalExperiment ce = kind == "empty-opt" ? empty_optimal(inst)
                                        : kind == "public-opt" ? public_optimal(inst)
                                        : kind == "circle-block"
                                            ? circle_block(inst)
                                            : throw Error(Errc::unknown_command,
                                                          "unknown construction '" + kind + "'");
                emit(experiment_to_json(ce.experiment), out_path);
                std::cout << "value " << ce.claimed_value.str() << "\n";
            }
        } else if (transform->parsed()) {
            Network g = network_from_json(load_json(net_path));
            Experiment exp = experiment_from_json(load_json(exp_path));
            Experiment out = [&] {
                if (kind == "merge") return symmetry_merge(exp, g, i_arg, j_arg);
                if (kind == "replicate") return replicate_to_empty(exp, g);
                if (kind == "center-collapse") return center_collapse(exp, g, member, k);
                if (kind == "center-align")
                    return center_align(exp, make_instance(g, prior, k, allow_boundary), member);
                throw Error(Errc::unknown_command, "unknown transform '" + kind + "'");
            }();
            emit(experiment_to_json(out), out_path);
        } else if (extend->parsed()) {
            Network g = network_from_json(load_json(net_path));
            ExtensionPlan plan = [&] {
                if (kind == "pairs-to-circle") return extend_pairs_to_circle(g);
                if (kind == "stellar") return extend_stellar(g, member, k);
                if (kind == "halo") return extend_halo(g, member, k);
                if (kind == "constellation") return extend_constellation(g, member, k);
                if (kind == "galaxy") return extend_galaxy(g, k);
                if (kind == "clusters") return extend_clusters(g, k);
                throw Error(Errc::unknown_command, "unknown construction '" + kind + "'");
            }();
            json out = plan_to_json(plan);
            if (k >= simple_majority(g.n)) {
                // empty certificate means the extended network attains the
                // private-signaling optimum for this instance
                Instance inst = make_instance(plan.extended, prior, k, allow_boundary);
                out["certified_value"] = v_upper(inst).str();
            }
            emit(out, out_path);
        } else if (oracle->parsed()) {
            Network g = network_from_json(load_json(net_path));
            Instance inst = make_instance(g, prior, k, allow_boundary);
            OracleResult res =
                mode == "exhaustive" ? exhaustive_optimal(inst) : anchored_optimal(inst, cap);
            emit(oracle_to_json(res), out_path);
        } else if (sweep->parsed()) {
            std::vector<Network> chain;
            for (const auto& path : chain_paths) chain.push_back(network_from_json(load_json(path)));
            std::vector<std::string> labels;
            if (!label_list.empty()) {
                std::stringstream ss(label_list);
                std::string item;
                while (std::getline(ss, item, ',')) labels.push_back(item);
            }
            if (chain.empty()) throw Error(Errc::bad_parameters, "empty chain");
            Instance inst = make_instance(chain[0], prior, k, allow_boundary);
            auto rows = sweep_values(inst, chain, labels, cap);
            std::cout << "label,edges,value_lower,value_upper,certified,source,flag\n";
            for (const auto& row : rows) std::cout << csv_line(row) << "\n";
        } else if (repro->parsed()) {
            if (kind == "figure1") {
                for (const auto& line : repro_figure1(cap)) std::cout << line << "\n";
            } else if (kind == "example2") {
                emit(repro_example2(), out_path);
            } else {
                throw Error(Errc::unknown_command, "unknown fixture '" + kind + "'");
            }
        } else if (selftest->parsed()) {
            return run_selftest(seed);
        }
    } catch (const Error& e) {
        json diag;
        diag["error"] = errc_name(e.code());
        diag["message"] = e.what();
        std::cerr << diag.dump() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        json diag;
        diag["error"] = "Internal";
        diag["message"] = e.what();
        std::cerr << diag.dump() << "\n";
        return 2;
    }
    return 0;
}
