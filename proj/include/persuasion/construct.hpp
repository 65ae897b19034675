#pragma once

#include <string>
#include <utility>
#include <vector>

#include "persuasion/evaluate.hpp"
#include "persuasion/experiment.hpp"
#include "persuasion/families.hpp"
#include "persuasion/instance.hpp"

namespace persuasion {

enum class CanonicalFamily { empty_opt, public_opt, circle_block, example2 };

inline const char* to_string(CanonicalFamily f) {
    switch (f) {
        case CanonicalFamily::empty_opt: return "empty-opt";
        case CanonicalFamily::public_opt: return "public-opt";
        case CanonicalFamily::circle_block: return "circle-block";
        case CanonicalFamily::example2: return "example2";
    }
    return "?";
}

/// A constructed experiment together with the value it is built to attain.
/// The constructor evaluates it on its target network and refuses to return
/// anything whose exact value differs from the claim.
struct CanonicalExperiment {
    Experiment experiment;
    CanonicalFamily family = CanonicalFamily::empty_opt;
    Rational claimed_value;
    Network target;
};

namespace detail {

inline CanonicalExperiment checked(Experiment exp, CanonicalFamily fam, Rational claim,
                                   Network target, const Instance& inst) {
    auto rep = evaluate(exp, target, inst);
    if (rep.value != claim)
        throw Error(Errc::certificate_violation,
                    std::string(to_string(fam)) + " construction evaluates to " + rep.value.str() +
                        ", claimed " + claim.str());
    return CanonicalExperiment{std::move(exp), fam, std::move(claim), std::move(target)};
}

} // namespace detail

/// Optimal fully-private experiment. In X everyone is told x; in Y a uniformly
/// random k-subset is told x (total mass v_tilde) and otherwise everyone is
/// told y. Value v_upper on the empty network.
inline CanonicalExperiment empty_optimal(const Instance& inst) {
    const int n = inst.n(), k = inst.k;
    const Rational vt = v_tilde(inst);

    std::vector<ExperimentRow> rows;
    rows.push_back({SignalVec(n, msg_x), Rational(1), Rational(0)});

    std::vector<SignalVec> subsets;
    std::vector<int> pick(k);
    for (int i = 0; i < k; ++i) pick[i] = i;
    while (true) {
        SignalVec s(n, msg_y);
        for (int i : pick) s[i] = msg_x;
        subsets.push_back(std::move(s));
        int i = k - 1;
        while (i >= 0 && pick[i] == n - k + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    const Rational each = vt / Rational(static_cast<long>(subsets.size()));
    for (auto& s : subsets) {
        if (s == rows[0].s) {  // n == k: the lone subset is the all-x signal
            rows[0].p_y += each;
            continue;
        }
        rows.push_back({std::move(s), Rational(0), each});
    }
    const Rational rest = Rational(1) - vt;
    if (!rest.is_zero()) {
        SignalVec all_y(n, msg_y);
        rows.push_back({std::move(all_y), Rational(0), rest});
    }
    return detail::checked(Experiment::make(binary_alphabets(n), std::move(rows)),
                           CanonicalFamily::empty_opt, v_upper(inst), make_empty(n), inst);
}

/// Optimal public experiment: everyone sees the same message, value 2*prior
/// on every network.
inline CanonicalExperiment public_optimal(const Instance& inst) {
    const int n = inst.n();
    const Rational on_mass = inst.prior_x / inst.prior_y();
    std::vector<ExperimentRow> rows;
    rows.push_back({SignalVec(n, msg_x), Rational(1), on_mass});
    if (on_mass != Rational(1))
        rows.push_back({SignalVec(n, msg_y), Rational(0), Rational(1) - on_mass});
    return detail::checked(Experiment::make(binary_alphabets(n), std::move(rows)),
                           CanonicalFamily::public_opt, v_public(inst), inst.network, inst);
}

/// Circle construction: in Y, a consecutive y-block of length n-k-2 is placed
/// uniformly over the n rotations (mass v_tilde total). Each block leaves
/// exactly k receivers with an all-x window at posterior exactly 1/2, so every
/// block signal meets the quota and the value is v_upper.
inline CanonicalExperiment circle_block(const Instance& inst) {
    const int n = inst.n(), k = inst.k;
    if (!is_circle(inst.network))
        throw Error(Errc::not_a_circle, "circle-block construction needs a circle network");
    if (k > n - 3)
        throw Error(Errc::quota_too_large_for_blocks,
                    "need k <= n-3 for a positive block length (k=" + std::to_string(k) +
                        ", n=" + std::to_string(n) + ")");
    const int block = n - k - 2;
    const Rational vt = v_tilde(inst);

    // circle-block signals are defined on the canonical labeling i -- i+1
    std::vector<ExperimentRow> rows;
    rows.push_back({SignalVec(n, msg_x), Rational(1), Rational(0)});
    const Rational each = vt / Rational(n);
    for (int start = 0; start < n; ++start) {
        SignalVec s(n, msg_x);
        for (int off = 0; off < block; ++off) s[(start + off) % n] = msg_y;
        rows.push_back({std::move(s), Rational(0), each});
    }
    const Rational rest = Rational(1) - vt;
    if (!rest.is_zero()) rows.push_back({SignalVec(n, msg_y), Rational(0), rest});
    return detail::checked(Experiment::make(binary_alphabets(n), std::move(rows)),
                           CanonicalFamily::circle_block, v_upper(inst), inst.network, inst);
}

/// The 8-receiver fixture where a single bridge edge lifts the value to 1
/// despite dominating pairs: star {3; 0,1,2,4} plus triangle {5,6,7}, bridge
/// 4-5 added in the extended network, boundary prior 1/3, quota 4.
struct Example2Fixture {
    Network base;
    Network extended;
    Instance instance;  // on the extended network, boundary prior accepted
    CanonicalExperiment experiment;
    Rational base_bound;  // center-reduction bound for the base network
};

inline Example2Fixture example2_experiment() {
    Network base = Network::make(8, {{0, 3}, {1, 3}, {2, 3}, {3, 4}, {5, 6}, {5, 7}, {6, 7}});
    Network extended = base.with_edges({{4, 5}});
    Instance inst = validate_instance(extended, Rational(1, 3), 4, /*allow_boundary=*/true);

    std::vector<ExperimentRow> rows;
    rows.push_back({SignalVec(8, msg_x), Rational(1), Rational(0)});
    SignalVec s(8, msg_x);
    s[5] = msg_y;
    rows.push_back({std::move(s), Rational(0), Rational(1, 2)});
    SignalVec t(8, msg_x);
    t[0] = t[1] = t[2] = msg_y;
    rows.push_back({std::move(t), Rational(0), Rational(1, 2)});

    auto canonical = detail::checked(Experiment::make(binary_alphabets(8), std::move(rows)),
                                     CanonicalFamily::example2, Rational(1), extended, inst);

    // Bound for the base network: its star center is never pivotal, so the
    // value is at most the private optimum with one receiver fewer.
    Instance reduced = validate_instance(make_empty(7), Rational(1, 3), 4);
    Example2Fixture fx{std::move(base), std::move(extended), std::move(inst), std::move(canonical),
                       v_upper(reduced)};
    return fx;
}

} // namespace persuasion
