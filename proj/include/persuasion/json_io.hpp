#pragma once

#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "persuasion/domination.hpp"
#include "persuasion/evaluate.hpp"
#include "persuasion/experiment.hpp"
#include "persuasion/extend.hpp"
#include "persuasion/families.hpp"
#include "persuasion/network.hpp"
#include "persuasion/oracle.hpp"

namespace persuasion {

using json = nlohmann::ordered_json;

// Network JSON: {"n": int, "edges": [[i,j],...]} with an optional advisory
// "family" key that readers never trust without re-recognition.

inline json network_to_json(const Network& g, const std::string& family = "") {
    json j;
    j["n"] = g.n;
    j["edges"] = json::array();
    for (auto [a, b] : g.edges) j["edges"].push_back(json::array({a, b}));
    if (!family.empty()) j["family"] = family;
    return j;
}

inline Network network_from_json(const json& j) {
    if (!j.contains("n") || !j.contains("edges"))
        throw Error(Errc::io_error, "network JSON needs 'n' and 'edges'");
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw Error(Errc::io_error, "each edge must be a pair [i,j]");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Network::make(j.at("n").get<int>(), std::move(edges));
}

// Experiment JSON: {"alphabets": [[sym,...],...],
//                   "rows": [{"s": [sym,...], "pX": "a/b", "pY": "c/d"},...]}
// Rationals travel as lowest-terms strings, so round-trips are bit-exact.

inline json experiment_to_json(const Experiment& exp) {
    json j;
    j["alphabets"] = json::array();
    for (const auto& a : exp.alphabets) j["alphabets"].push_back(a);
    j["rows"] = json::array();
    for (const auto& row : exp.rows) {
        json r;
        r["s"] = row.s;
        r["pX"] = row.p_x.str();
        r["pY"] = row.p_y.str();
        j["rows"].push_back(std::move(r));
    }
    return j;
}

inline Experiment experiment_from_json(const json& j) {
    if (!j.contains("alphabets") || !j.contains("rows"))
        throw Error(Errc::io_error, "experiment JSON needs 'alphabets' and 'rows'");
    std::vector<std::vector<Message>> alphabets;
    for (const auto& a : j.at("alphabets")) alphabets.push_back(a.get<std::vector<Message>>());
    std::vector<ExperimentRow> rows;
    for (const auto& r : j.at("rows"))
        rows.push_back({r.at("s").get<SignalVec>(), Rational::parse(r.at("pX").get<std::string>()),
                        Rational::parse(r.at("pY").get<std::string>())});
    return Experiment::make(std::move(alphabets), std::move(rows));
}

inline json report_to_json(const EvaluationReport& rep, const Experiment& exp) {
    json j;
    j["rows"] = json::array();
    for (std::size_t r = 0; r < rep.rows.size(); ++r) {
        json row;
        row["s"] = exp.rows[r].s;
        row["pX"] = exp.rows[r].p_x.str();
        row["pY"] = exp.rows[r].p_y.str();
        row["posteriors"] = json::array();
        for (const auto& p : rep.rows[r].posterior_x) row["posteriors"].push_back(p.str());
        std::string acts;
        for (auto a : rep.rows[r].actions) acts += to_char(a);
        row["actions"] = acts;
        row["outcome"] = std::string(1, to_char(rep.rows[r].outcome));
        j["rows"].push_back(std::move(row));
    }
    j["value"] = rep.value.str();
    j["mismatch_prob"] = rep.mismatch_prob.str();
    j["x_given_X"] = rep.x_given_x.str();
    j["x_given_Y"] = rep.x_given_y.str();
    return j;
}

inline json plan_to_json(const ExtensionPlan& plan) {
    json j;
    j["construction"] = plan.construction;
    j["case"] = plan.case_label;
    j["base"] = network_to_json(plan.base);
    j["added_edges"] = json::array();
    for (auto [a, b] : plan.added_edges) j["added_edges"].push_back(json::array({a, b}));
    j["extended"] = network_to_json(plan.extended);
    j["certificate"] = {{"dominating_pairs", plan.certificate.count()}};
    j["roles"] = json::object();
    for (const auto& [name, who] : plan.roles) j["roles"][name] = who;
    j["narrative"] = plan.narrative;
    return j;
}

inline json oracle_to_json(const OracleResult& res) {
    json j;
    j["mode"] = res.mode;
    j["lower_bound"] = res.lower_bound.str();
    j["upper_bound"] = res.upper_bound.str();
    j["exact"] = res.exact;
    j["witness"] = experiment_to_json(res.witness);
    return j;
}

inline json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::io_error, "cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw Error(Errc::io_error, "cannot parse " + path + ": " + e.what());
    }
    return j;
}

inline void save_json(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw Error(Errc::io_error, "cannot write " + path);
    out << j.dump(2) << "\n";
}

} // namespace persuasion
