#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "persuasion/construct.hpp"
#include "persuasion/evaluate.hpp"
#include "persuasion/experiment.hpp"
#include "persuasion/instance.hpp"
#include "persuasion/network.hpp"
#include "persuasion/simplex.hpp"

namespace persuasion {

/// Ground-truth result for a small instance. lower_bound is always the exact
/// value of `witness` as re-judged by the evaluator under the true tie-break;
/// upper_bound is one-sided (the private bound for the anchored mode, the
/// closed-LP maximum for the exhaustive mode).
struct OracleResult {
    Rational lower_bound;
    Rational upper_bound;
    Experiment witness;
    std::string mode;
    bool exact = false;
};

namespace detail {

/// Receivers with identical closed neighborhoods merged into weighted
/// super-receivers. Message patterns live on the classes; bit c set means
/// class c is told x.
struct MergedView {
    std::vector<std::vector<int>> classes;
    std::vector<int> class_of;    // node -> class
    std::vector<int> weight;      // class size
    std::vector<std::uint32_t> window_mask;  // classes observed by each class (incl. itself)
    int count = 0;

    explicit MergedView(const Network& g) {
        classes = neighborhood_classes(g);
        count = static_cast<int>(classes.size());
        if (count > 30) throw Error(Errc::too_large, "too many receiver classes");
        class_of.assign(g.n, -1);
        weight.assign(count, 0);
        for (int c = 0; c < count; ++c) {
            weight[c] = static_cast<int>(classes[c].size());
            for (int v : classes[c]) class_of[v] = c;
        }
        Adjacency adj(g);
        window_mask.assign(count, 0);
        for (int c = 0; c < count; ++c)
            for (int v : adj.closed[classes[c][0]]) window_mask[c] |= std::uint32_t(1) << class_of[v];
    }

    SignalVec expand(std::uint32_t pattern) const {
        SignalVec s(class_of.size());
        for (std::size_t v = 0; v < class_of.size(); ++v)
            s[v] = (pattern >> class_of[v]) & 1 ? msg_x : msg_y;
        return s;
    }
};

inline Experiment anchored_witness(const MergedView& mv, int n,
                                   const std::vector<Rational>& y_mass) {
    const std::uint32_t patterns = static_cast<std::uint32_t>(y_mass.size());
    const std::uint32_t all_x = patterns - 1;
    Rational total(0);
    for (const auto& q : y_mass) total += q;
    std::vector<Rational> mass = y_mass;
    mass[0] += Rational(1) - total;  // leftover goes to the all-y pattern

    std::vector<ExperimentRow> rows;
    rows.push_back({mv.expand(all_x), Rational(1), mass[all_x]});
    for (std::uint32_t p = 0; p < patterns; ++p) {
        if (p == all_x || mass[p].is_zero()) continue;
        rows.push_back({mv.expand(p), Rational(0), mass[p]});
    }
    return Experiment::make(binary_alphabets(n), std::move(rows));
}

} // namespace detail

/// Best value over anchored experiments (all-x surely in state X, binary
/// messages in state Y), maximized over every choice of the persuadable set.
/// Each LP witness is re-evaluated exactly, so the reported lower bound is a
/// genuine experiment value; the upper bound is the private-signaling bound.
inline OracleResult anchored_optimal(const Instance& inst, int n_cap = 10) {
    if (inst.n() > n_cap)
        throw Error(Errc::too_large, "anchored oracle capped at n <= " + std::to_string(n_cap));
    detail::MergedView mv(inst.network);
    const int nclasses = mv.count;
    if (nclasses > 20)
        throw Error(Errc::too_large, "too many receiver classes for the anchored oracle");
    const std::uint32_t patterns = std::uint32_t(1) << nclasses;
    const Rational ratio = inst.prior_x / inst.prior_y();

    OracleResult best;
    best.mode = "anchored";
    best.upper_bound = v_upper(inst);
    {
        auto pub = public_optimal(inst);
        best.lower_bound = pub.claimed_value;
        best.witness = std::move(pub.experiment);
    }

    // Enumerating persuadable sets as unions of classes is lossless: adding a
    // twin to W never changes the constraints and only helps the count.
    for (std::uint32_t w_mask = 1; w_mask < (std::uint32_t(1) << nclasses); ++w_mask) {
        int w_weight = 0;
        for (int c = 0; c < nclasses; ++c)
            if (w_mask >> c & 1) w_weight += mv.weight[c];
        if (w_weight < inst.k) continue;

        LinearProgram lp;
        lp.num_vars = static_cast<int>(patterns);
        lp.objective.assign(patterns, Rational(0));
        for (std::uint32_t p = 0; p < patterns; ++p) {
            int persuaded = 0;
            for (int c = 0; c < nclasses; ++c)
                if ((w_mask >> c & 1) && (p & mv.window_mask[c]) == mv.window_mask[c])
                    persuaded += mv.weight[c];
            if (persuaded >= inst.k) lp.objective[p] = Rational(1);
        }
        lp.ub_rows.push_back(std::vector<Rational>(patterns, Rational(1)));
        lp.ub_rhs.push_back(Rational(1));
        for (int c = 0; c < nclasses; ++c) {
            if (!(w_mask >> c & 1)) continue;
            std::vector<Rational> row(patterns, Rational(0));
            for (std::uint32_t p = 0; p < patterns; ++p)
                if ((p & mv.window_mask[c]) == mv.window_mask[c]) row[p] = Rational(1);
            lp.ub_rows.push_back(std::move(row));
            lp.ub_rhs.push_back(ratio);
        }

        auto sol = simplex_solve(lp);
        auto witness = detail::anchored_witness(mv, inst.n(), sol.x);
        Rational value = evaluate(witness, inst.network, inst).value;
        if (value > best.lower_bound) {
            best.lower_bound = value;
            best.witness = std::move(witness);
        }
    }
    best.exact = best.lower_bound == best.upper_bound;
    return best;
}

/// Exact search over binary-alphabet experiments (after symmetry merging):
/// enumerates, per receiver class, which observable windows are persuaded,
/// solves the closed-constraint LP for each assignment, and re-judges every
/// witness. The closed-LP maximum is the exact optimum of this class, so the
/// exact flag is expected whenever nothing ties away.
inline OracleResult exhaustive_optimal(const Instance& inst, long assignment_cap = (1L << 21)) {
    if (inst.n() > 4) throw Error(Errc::too_large, "exhaustive oracle capped at n <= 4");
    detail::MergedView mv(inst.network);
    const int nclasses = mv.count;
    const std::uint32_t patterns = std::uint32_t(1) << nclasses;

    // window of class c in pattern p, packed over the classes c observes
    std::vector<int> window_bits(nclasses);
    std::vector<std::vector<int>> observed(nclasses);
    for (int c = 0; c < nclasses; ++c) {
        for (int d = 0; d < nclasses; ++d)
            if (mv.window_mask[c] >> d & 1) observed[c].push_back(d);
        window_bits[c] = static_cast<int>(observed[c].size());
    }
    std::vector<std::vector<std::uint32_t>> wkey(nclasses,
                                                 std::vector<std::uint32_t>(patterns, 0));
    for (int c = 0; c < nclasses; ++c)
        for (std::uint32_t p = 0; p < patterns; ++p)
            for (int b = 0; b < window_bits[c]; ++b)
                if (p >> observed[c][b] & 1) wkey[c][p] |= std::uint32_t(1) << b;

    double total = 1;
    for (int c = 0; c < nclasses; ++c) total *= double(std::uint64_t(1) << (1 << window_bits[c]));
    if (total > double(assignment_cap))
        throw Error(Errc::too_large, "window-assignment space exceeds the cap");

    OracleResult best;
    best.mode = "exhaustive";
    {
        auto pub = public_optimal(inst);
        best.lower_bound = pub.claimed_value;
        best.upper_bound = Rational(0);
        best.witness = std::move(pub.experiment);
    }

    std::vector<std::uint64_t> sigma(nclasses, 0), sigma_end(nclasses);
    for (int c = 0; c < nclasses; ++c) sigma_end[c] = std::uint64_t(1) << (1 << window_bits[c]);

    const Rational px = inst.prior_x, py = inst.prior_y();
    // Persuading every window of one receiver forces px >= py; with px < py
    // such assignments are infeasible outright.
    const bool skip_full = px < py;
    for (;;) {
        bool full = false;
        if (skip_full)
            for (int c = 0; c < nclasses; ++c) full |= sigma[c] + 1 == sigma_end[c];
        if (!full) {
            bool reachable = false;
            std::vector<bool> outcome_x(patterns, false);
            for (std::uint32_t p = 0; p < patterns; ++p) {
                int persuaded = 0;
                for (int c = 0; c < nclasses; ++c)
                    if (sigma[c] >> wkey[c][p] & 1) persuaded += mv.weight[c];
                outcome_x[p] = persuaded >= inst.k;
                reachable |= outcome_x[p];
            }
            if (reachable) {
                LinearProgram lp;
                lp.num_vars = static_cast<int>(2 * patterns);  // pX then pY
                lp.objective.assign(2 * patterns, Rational(0));
                for (std::uint32_t p = 0; p < patterns; ++p)
                    if (outcome_x[p]) {
                        lp.objective[p] = px;
                        lp.objective[patterns + p] = py;
                    }
                lp.eq_rows.assign(2, std::vector<Rational>(2 * patterns, Rational(0)));
                for (std::uint32_t p = 0; p < patterns; ++p) {
                    lp.eq_rows[0][p] = Rational(1);
                    lp.eq_rows[1][patterns + p] = Rational(1);
                }
                lp.eq_rhs = {Rational(1), Rational(1)};
                for (int c = 0; c < nclasses; ++c) {
                    for (std::uint32_t w = 0; w < (std::uint32_t(1) << window_bits[c]); ++w) {
                        const bool persuaded = sigma[c] >> w & 1;
                        std::vector<Rational> row(2 * patterns, Rational(0));
                        for (std::uint32_t p = 0; p < patterns; ++p) {
                            if (wkey[c][p] != w) continue;
                            // persuaded windows need px*pX >= py*pY; the rest the opposite (closed)
                            row[p] = persuaded ? -px : px;
                            row[patterns + p] = persuaded ? py : -py;
                        }
                        lp.ub_rows.push_back(std::move(row));
                        lp.ub_rhs.push_back(Rational(0));
                    }
                }
                try {
                    auto sol = simplex_solve(lp);
                    if (sol.value > best.upper_bound) best.upper_bound = sol.value;
                    std::vector<ExperimentRow> rows;
                    for (std::uint32_t p = 0; p < patterns; ++p) {
                        if (sol.x[p].is_zero() && sol.x[patterns + p].is_zero()) continue;
                        rows.push_back({mv.expand(p), sol.x[p], sol.x[patterns + p]});
                    }
                    auto witness = Experiment::make(binary_alphabets(inst.n()), std::move(rows));
                    Rational value = evaluate(witness, inst.network, inst).value;
                    if (value > best.lower_bound) {
                        best.lower_bound = value;
                        best.witness = std::move(witness);
                    }
                } catch (const Error& e) {
                    if (e.code() != Errc::infeasible) throw;
                }
            }
        }
        int c = 0;
        while (c < nclasses) {
            if (++sigma[c] < sigma_end[c]) break;
            sigma[c++] = 0;
        }
        if (c == nclasses) break;
    }
    if (best.upper_bound < best.lower_bound)
        throw Error(Errc::certificate_violation,
                    "verified witness exceeds the closed-LP maximum");
    best.exact = best.lower_bound == best.upper_bound;
    return best;
}

} // namespace persuasion
