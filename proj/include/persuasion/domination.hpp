#pragma once

#include <string>
#include <utility>
#include <vector>

#include "persuasion/instance.hpp"
#include "persuasion/network.hpp"

namespace persuasion {

/// Ordered dominating pairs (i, j): receiver i observes every channel j does,
/// N_j(g) subseteq N_i(g) over closed neighborhoods, i != j.
struct DominationReport {
    std::vector<std::pair<int, int>> pairs;

    int count() const { return static_cast<int>(pairs.size()); }
    bool empty() const { return pairs.empty(); }
};

inline DominationReport dominating_pairs(const Network& g) {
    Adjacency adj(g);
    DominationReport rep;
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j)
            if (i != j && adj.closed_subset(j, i)) rep.pairs.emplace_back(i, j);
    return rep;
}

/// Restricted to a node set (original labels).
inline DominationReport dominating_pairs(const Network& g, const std::vector<int>& nodes) {
    Adjacency adj(g);
    DominationReport rep;
    for (int i : nodes)
        for (int j : nodes)
            if (i != j && adj.closed_subset(j, i)) rep.pairs.emplace_back(i, j);
    return rep;
}

/// Sufficiency certificate: a network without dominating pairs attains the
/// fully-private bound v_upper. The condition is not necessary, so a network
/// with pairs gets "inconclusive", never "refuted".
struct UpperBoundCertificate {
    bool certified = false;
    Rational value;      // v_upper(inst) when certified
    int pair_count = 0;  // dominating pairs found
    std::string note;
};

inline UpperBoundCertificate certify_value_upper_attained(const Network& g, const Instance& inst) {
    auto rep = dominating_pairs(g);
    UpperBoundCertificate cert;
    cert.pair_count = rep.count();
    if (rep.empty()) {
        cert.certified = true;
        cert.value = v_upper(inst);
        cert.note = "no information-dominating pairs; the private-signaling bound is attainable";
    } else {
        cert.note = "inconclusive: " + std::to_string(rep.count()) +
                    " dominating pair(s) present (absence is sufficient, not necessary)";
    }
    return cert;
}

} // namespace persuasion
