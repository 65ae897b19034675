#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "persuasion/experiment.hpp"
#include "persuasion/instance.hpp"
#include "persuasion/network.hpp"

namespace persuasion {

enum class Action { x, y };
enum class Outcome { x, y };

inline char to_char(Action a) { return a == Action::x ? 'x' : 'y'; }
inline char to_char(Outcome z) { return z == Outcome::x ? 'x' : 'y'; }

/// Ties break in the sender's favor: posterior exactly 1/2 still yields x.
inline Action action_of(const Rational& posterior_x) {
    return posterior_x >= Rational(1, 2) ? Action::x : Action::y;
}

inline Outcome outcome_of(const std::vector<Action>& actions, int k) {
    int count = 0;
    for (Action a : actions)
        if (a == Action::x) ++count;
    return count >= k ? Outcome::x : Outcome::y;
}

/// What receiver `i` observes upon a signal: own message plus neighbors'.
struct InformationSet {
    int receiver = 0;
    std::vector<std::pair<int, Message>> observed;  // (member of N_i(g), message), sorted by member
};

inline InformationSet information_set(const SignalVec& s, const Adjacency& adj, int receiver) {
    InformationSet w{receiver, {}};
    for (int j : adj.closed[receiver]) w.observed.emplace_back(j, s[j]);
    return w;
}

struct RowEvaluation {
    std::vector<Rational> posterior_x;  // per receiver
    std::vector<Action> actions;
    Outcome outcome = Outcome::y;
};

struct EvaluationReport {
    std::vector<RowEvaluation> rows;  // parallel to experiment rows
    Rational value;                    // P(outcome x)
    Rational mismatch_prob;            // P(outcome != state)
    Rational x_given_x;                // P(outcome x | X)
    Rational x_given_y;                // P(outcome x | Y)
};

namespace detail {

/// Per-receiver aggregation of support mass by observed window. Posteriors are
/// shared across all rows with the same window, which keeps dense supports
/// (circles, complete networks) linear in support size.
struct WindowMasses {
    std::vector<std::map<SignalVec, std::pair<Rational, Rational>>> per_receiver;

    WindowMasses(const Experiment& exp, const Adjacency& adj) {
        const int n = exp.n();
        per_receiver.resize(n);
        SignalVec key;
        for (const auto& row : exp.rows) {
            for (int i = 0; i < n; ++i) {
                key.clear();
                for (int j : adj.closed[i]) key.push_back(row.s[j]);
                auto& cell = per_receiver[i][key];
                cell.first += row.p_x;
                cell.second += row.p_y;
            }
        }
    }

    const std::pair<Rational, Rational>* find(int receiver, const SignalVec& key) const {
        auto it = per_receiver[receiver].find(key);
        return it == per_receiver[receiver].end() ? nullptr : &it->second;
    }
};

inline SignalVec window_key(const SignalVec& s, const Adjacency& adj, int receiver) {
    SignalVec key;
    for (int j : adj.closed[receiver]) key.push_back(s[j]);
    return key;
}

} // namespace detail

/// Indices of the support signals receiver `i` considers possible after `row`:
/// those matching the row on every member of N_i(g).
inline std::vector<int> association_set(const Experiment& exp, const Network& g, int row,
                                        int receiver) {
    if (row < 0 || row >= static_cast<int>(exp.rows.size()))
        throw Error(Errc::signal_not_in_support, "row index out of range");
    Adjacency adj(g);
    const auto key = detail::window_key(exp.rows[row].s, adj, receiver);
    std::vector<int> out;
    for (std::size_t t = 0; t < exp.rows.size(); ++t)
        if (detail::window_key(exp.rows[t].s, adj, receiver) == key) out.push_back(static_cast<int>(t));
    return out;
}

inline std::vector<int> association_set(const Experiment& exp, const Network& g,
                                        const SignalVec& signal, int receiver) {
    int row = exp.find_row(signal);
    if (row < 0) throw Error(Errc::signal_not_in_support, "signal is not in the support");
    return association_set(exp, g, row, receiver);
}

/// Bayesian posterior that the state is X after receiver `i` observes its
/// window of `row`. Exact.
inline Rational posterior(const Experiment& exp, const Network& g, const Instance& inst, int row,
                          int receiver) {
    Adjacency adj(g);
    detail::WindowMasses masses(exp, adj);
    const auto key = detail::window_key(exp.rows[row].s, adj, receiver);
    const auto* cell = masses.find(receiver, key);
    if (!cell) throw Error(Errc::signal_not_in_support, "signal is not in the support");
    const Rational wx = inst.prior_x * cell->first;
    const Rational wy = inst.prior_y() * cell->second;
    if ((wx + wy).is_zero())
        throw Error(Errc::zero_mass_information_set, "zero-mass information set for a support signal");
    return wx / (wx + wy);
}

/// Full exact evaluation of an experiment on a network: posteriors, actions,
/// outcome and value. The network argument may differ from inst.network (the
/// transforms re-evaluate the same experiment elsewhere); prior and quota come
/// from the instance.
inline EvaluationReport evaluate(const Experiment& exp, const Network& g, const Instance& inst) {
    const int n = exp.n();
    if (g.n != n)
        throw Error(Errc::bad_parameters, "experiment and network disagree on receiver count");
    if (inst.n() != n)
        throw Error(Errc::bad_parameters, "experiment and instance disagree on receiver count");

    Adjacency adj(g);
    detail::WindowMasses masses(exp, adj);

    EvaluationReport rep;
    rep.value = Rational(0);
    rep.x_given_x = Rational(0);
    rep.x_given_y = Rational(0);

    SignalVec key;
    for (const auto& row : exp.rows) {
        RowEvaluation re;
        re.posterior_x.reserve(n);
        re.actions.reserve(n);
        for (int i = 0; i < n; ++i) {
            key.clear();
            for (int j : adj.closed[i]) key.push_back(row.s[j]);
            const auto* cell = masses.find(i, key);
            const Rational wx = inst.prior_x * cell->first;
            const Rational wy = inst.prior_y() * cell->second;
            if ((wx + wy).is_zero())
                throw Error(Errc::zero_mass_information_set,
                            "zero-mass information set for a support signal");
            Rational post = wx / (wx + wy);
            re.actions.push_back(action_of(post));
            re.posterior_x.push_back(std::move(post));
        }
        re.outcome = outcome_of(re.actions, inst.k);
        if (re.outcome == Outcome::x) {
            rep.x_given_x += row.p_x;
            rep.x_given_y += row.p_y;
        }
        rep.rows.push_back(std::move(re));
    }
    rep.value = inst.prior_x * rep.x_given_x + inst.prior_y() * rep.x_given_y;
    rep.mismatch_prob = inst.prior_x * (Rational(1) - rep.x_given_x) + inst.prior_y() * rep.x_given_y;
    return rep;
}

inline EvaluationReport evaluate(const Experiment& exp, const Instance& inst) {
    return evaluate(exp, inst.network, inst);
}

/// Posterior-structure check for value-v_upper experiments: (i) conditional on
/// X the outcome is x surely; (ii) conditional on Y, mass exactly v_tilde sits
/// on rows where exactly k receivers hold posterior 1/2 and n-k hold 0;
/// (iii) the remaining 1-v_tilde sits on rows where every posterior is 0.
struct StructureVerdict {
    bool ok = false;
    int failed_clause = 0;  // 1..3, or 0 when ok
    std::string detail;
};

inline StructureVerdict check_optimal_structure(const EvaluationReport& rep, const Experiment& exp,
                                                const Instance& inst) {
    const int n = inst.n();
    const Rational half(1, 2);
    const Rational vt = v_tilde(inst);

    if (rep.x_given_x != Rational(1))
        return {false, 1, "P(outcome x | X) = " + rep.x_given_x.str()};

    Rational mass_split(0), mass_dark(0), mass_other(0);
    for (std::size_t r = 0; r < exp.rows.size(); ++r) {
        if (exp.rows[r].p_y.is_zero()) continue;
        int at_half = 0, at_zero = 0;
        for (const auto& p : rep.rows[r].posterior_x) {
            if (p == half) ++at_half;
            else if (p.is_zero()) ++at_zero;
        }
        if (at_half == inst.k && at_zero == n - inst.k) mass_split += exp.rows[r].p_y;
        else if (at_zero == n) mass_dark += exp.rows[r].p_y;
        else mass_other += exp.rows[r].p_y;
    }
    if (mass_split != vt || !mass_other.is_zero())
        return {false, 2,
                "Y-mass on (k at 1/2, n-k at 0) rows is " + mass_split.str() + ", expected " +
                    vt.str() + "; unclassified mass " + mass_other.str()};
    if (mass_dark != Rational(1) - vt)
        return {false, 3, "Y-mass on all-zero-posterior rows is " + mass_dark.str()};
    return {true, 0, ""};
}

} // namespace persuasion
