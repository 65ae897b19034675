#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "persuasion/evaluate.hpp"
#include "persuasion/experiment.hpp"
#include "persuasion/instance.hpp"
#include "persuasion/network.hpp"

namespace persuasion {

/// Support signals whose X-weighted probability is at least their Y-weighted
/// probability. Membership is an exact comparison.
inline std::vector<int> anchor_rows(const Experiment& exp, const Rational& prior_x) {
    const Rational prior_y = Rational(1) - prior_x;
    std::vector<int> out;
    for (std::size_t r = 0; r < exp.rows.size(); ++r)
        if (exp.rows[r].p_x * prior_x >= exp.rows[r].p_y * prior_y) out.push_back(static_cast<int>(r));
    return out;
}

namespace detail {

inline std::vector<std::vector<Message>> used_alphabets(int n,
                                                        const std::vector<ExperimentRow>& rows) {
    std::vector<std::set<Message>> used(n);
    for (const auto& row : rows)
        for (int i = 0; i < n; ++i) used[i].insert(row.s[i]);
    std::vector<std::vector<Message>> out(n);
    for (int i = 0; i < n; ++i) out[i].assign(used[i].begin(), used[i].end());
    return out;
}

/// (component nodes, center) of the star component containing `member`.
inline std::pair<std::vector<int>, int> star_component(const Network& g, int member) {
    auto comp = component_of(g, member);
    Adjacency adj(g);
    const int size = static_cast<int>(comp.size());
    int center = -1;
    for (int v : comp)
        if (adj.degree(v) == size - 1) {
            center = v;
            break;
        }
    if (center < 0)
        throw Error(Errc::not_a_star_component, "component has no all-seeing center");
    for (int v : comp)
        if (v != center && adj.degree(v) != 1)
            throw Error(Errc::not_a_star_component,
                        "peripheral node " + std::to_string(v) + " has extra links");
    return {comp, center};
}

} // namespace detail

/// Receivers with equal closed neighborhoods can be sent identical messages:
/// each occurring message pair (s_i, s_j) is recoded as one fresh symbol that
/// both receive. Posteriors, actions and value are unchanged. Identity when
/// the two already receive equal messages everywhere.
inline Experiment symmetry_merge(const Experiment& exp, const Network& g, int i, int j) {
    Adjacency adj(g);
    if (i == j || !adj.closed_equal(i, j))
        throw Error(Errc::neighborhoods_differ, "receivers do not share a closed neighborhood");

    bool already = true;
    for (const auto& row : exp.rows) already &= row.s[i] == row.s[j];
    if (already) return exp;

    Message next = 0;
    for (Message m : exp.alphabets[i]) next = std::max(next, m + 1);
    for (Message m : exp.alphabets[j]) next = std::max(next, m + 1);

    std::map<std::pair<Message, Message>, Message> code;
    std::vector<ExperimentRow> rows = exp.rows;
    for (auto& row : rows) {
        auto key = std::make_pair(row.s[i], row.s[j]);
        auto it = code.find(key);
        if (it == code.end()) it = code.emplace(key, next++).first;
        row.s[i] = row.s[j] = it->second;
    }
    auto alphabets = detail::used_alphabets(exp.n(), rows);
    return Experiment::make(std::move(alphabets), std::move(rows));
}

/// Rewrites the experiment so that each receiver privately learns exactly what
/// their information set carried: every realized window becomes one fresh
/// private message. Evaluating the result on the empty network reproduces the
/// posteriors, actions and value from `g`.
inline Experiment replicate_to_empty(const Experiment& exp, const Network& g) {
    const int n = exp.n();
    if (g.n != n) throw Error(Errc::bad_parameters, "network size mismatch");
    Adjacency adj(g);
    std::vector<std::map<SignalVec, Message>> seen(n);
    std::vector<ExperimentRow> rows = exp.rows;
    for (auto& row : rows) {
        SignalVec fresh(n);
        for (int i = 0; i < n; ++i) {
            SignalVec key;
            for (int v : adj.closed[i]) key.push_back(row.s[v]);
            auto it = seen[i].find(key);
            if (it == seen[i].end()) it = seen[i].emplace(key, static_cast<Message>(seen[i].size())).first;
            fresh[i] = it->second;
        }
        row.s = std::move(fresh);
    }
    auto alphabets = detail::used_alphabets(n, rows);
    return Experiment::make(std::move(alphabets), std::move(rows));
}

/// Shifts the star center's information onto its periphery: the center gets a
/// constant message and every peripheral message is enriched to the pair
/// (own message, center's message), freshly coded. Value preserved; the
/// center's support alphabet becomes a single symbol.
inline Experiment center_collapse(const Experiment& exp, const Network& g, int member, int k) {
    auto [comp, center] = detail::star_component(g, member);
    if (static_cast<int>(comp.size()) <= k)
        throw Error(Errc::component_too_small, "star component must exceed the critical mass");

    const int n = exp.n();
    std::vector<std::map<std::pair<Message, Message>, Message>> code(n);
    std::vector<Message> next(n, 0);
    for (int v : comp) {
        for (Message m : exp.alphabets[v]) next[v] = std::max(next[v], m + 1);
    }
    std::vector<ExperimentRow> rows = exp.rows;
    for (auto& row : rows) {
        const Message mc = row.s[center];
        for (int v : comp) {
            if (v == center) continue;
            auto key = std::make_pair(row.s[v], mc);
            auto it = code[v].find(key);
            if (it == code[v].end()) it = code[v].emplace(key, next[v]++).first;
            row.s[v] = it->second;
        }
        row.s[center] = 0;
    }
    auto alphabets = detail::used_alphabets(n, rows);
    return Experiment::make(std::move(alphabets), std::move(rows));
}

/// Re-codes peripheral messages so that whenever the star center is persuaded,
/// every peripheral receiver is as well: in each signal where the center takes
/// x and a peripheral takes y, the peripheral's message is replaced by a fresh
/// symbol unique to the center's information set. Iterates over peripherals
/// until stable.
///
/// The re-coding only ever adds x-actions, so the value never decreases and is
/// preserved exactly whenever no outcome crosses the quota; optimal
/// experiments cannot gain, so their values are transported exactly.
inline Experiment center_align(const Experiment& exp, const Instance& inst, int member) {
    const Network& g = inst.network;
    auto [comp, center] = detail::star_component(g, member);
    if (static_cast<int>(comp.size()) <= inst.k)
        throw Error(Errc::component_too_small, "star component must exceed the critical mass");

    Adjacency adj(g);
    Experiment cur = exp;
    for (int leaf : comp) {
        if (leaf == center) continue;
        auto rep = evaluate(cur, g, inst);
        std::map<SignalVec, Message> fresh;  // center window -> new message for leaf
        Message next = 0;
        for (Message m : cur.alphabets[leaf]) next = std::max(next, m + 1);
        std::vector<ExperimentRow> rows = cur.rows;
        bool changed = false;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rep.rows[r].actions[center] != Action::x || rep.rows[r].actions[leaf] != Action::y)
                continue;
            SignalVec ckey;
            for (int v : adj.closed[center]) ckey.push_back(rows[r].s[v]);
            auto it = fresh.find(ckey);
            if (it == fresh.end()) it = fresh.emplace(std::move(ckey), next++).first;
            rows[r].s[leaf] = it->second;
            changed = true;
        }
        if (changed) {
            auto alphabets = detail::used_alphabets(cur.n(), rows);
            cur = Experiment::make(std::move(alphabets), std::move(rows));
        }
    }
    return cur;
}

} // namespace persuasion
