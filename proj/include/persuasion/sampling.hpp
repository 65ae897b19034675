#pragma once

// Seeded random instances and experiments, used by the bundled selftest and
// the randomized property suites.

#include <algorithm>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "persuasion/experiment.hpp"
#include "persuasion/families.hpp"
#include "persuasion/network.hpp"

namespace persuasion {

/// splitmix64; deterministic across platforms.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    int below(int n) { return n <= 1 ? 0 : static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
    int in(int lo, int hi) { return lo + below(hi - lo + 1); }
    bool chance(int num, int den) { return below(den) < num; }

    std::vector<int> permutation(int n) {
        std::vector<int> p(n);
        for (int i = 0; i < n; ++i) p[i] = i;
        for (int i = n - 1; i > 0; --i) std::swap(p[i], p[below(i + 1)]);
        return p;
    }
};

namespace sampling {

/// Splits `total` nodes into >= 2 parts, each of a size a stellar subtree can
/// have (1, or at least 3). Rejection sampling; the all-singletons split is
/// always admissible.
inline std::vector<int> stellar_split(Rng& rng, int total) {
    for (;;) {
        const int parts = std::min(total, rng.in(2, 4));
        std::vector<int> sizes(parts, 1);
        int left = total - parts;
        while (left > 0) {
            sizes[rng.below(parts)] += 1;
            --left;
        }
        bool ok = parts >= 2;
        for (int s : sizes) ok &= s == 1 || s >= 3;
        if (ok) return sizes;
    }
}

inline void build_stellar(Rng& rng, std::vector<int> nodes, std::vector<Edge>& out) {
    if (nodes.size() == 1) return;
    const int root = nodes[rng.below(static_cast<int>(nodes.size()))];
    std::vector<int> rest;
    for (int v : nodes)
        if (v != root) {
            out.emplace_back(root, v);
            rest.push_back(v);
        }
    for (int i = static_cast<int>(rest.size()) - 1; i > 0; --i)
        std::swap(rest[i], rest[rng.below(i + 1)]);
    auto sizes = stellar_split(rng, static_cast<int>(rest.size()));
    std::size_t at = 0;
    for (int s : sizes) {
        std::vector<int> part(rest.begin() + at, rest.begin() + at + s);
        at += s;
        build_stellar(rng, std::move(part), out);
    }
}

inline void sprinkle_edges(Rng& rng, const std::vector<int>& nodes, std::vector<Edge>& out) {
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = i + 1; j < nodes.size(); ++j)
            if (rng.chance(1, 3)) out.emplace_back(nodes[i], nodes[j]);
}

/// Network with one stellar component on comp_size nodes; the remaining nodes
/// carry arbitrary random edges among themselves.
inline Network stellar_component_network(Rng& rng, int n, int comp_size,
                                         std::vector<int>* comp_out = nullptr) {
    auto perm = rng.permutation(n);
    std::vector<int> comp(perm.begin(), perm.begin() + comp_size);
    std::vector<int> outside(perm.begin() + comp_size, perm.end());
    std::sort(comp.begin(), comp.end());
    std::vector<Edge> edges;
    build_stellar(rng, comp, edges);
    sprinkle_edges(rng, outside, edges);
    if (comp_out) *comp_out = comp;
    return Network::make(n, std::move(edges));
}

inline Network halo_component_network(Rng& rng, int n, int comp_size,
                                      std::vector<int>* comp_out = nullptr) {
    auto perm = rng.permutation(n);
    std::vector<int> comp(perm.begin(), perm.begin() + comp_size);
    std::vector<int> outside(perm.begin() + comp_size, perm.end());
    std::vector<Edge> edges;
    const int center = comp[0];
    std::vector<int> ring(comp.begin() + 1, comp.end());
    for (std::size_t i = 0; i < ring.size(); ++i) {
        edges.emplace_back(ring[i], ring[(i + 1) % ring.size()]);
        edges.emplace_back(center, ring[i]);
    }
    sprinkle_edges(rng, outside, edges);
    if (comp_out) {
        *comp_out = comp;
        std::sort(comp_out->begin(), comp_out->end());
    }
    return Network::make(n, std::move(edges));
}

/// Constellation component: centers universal inside the component, the rest a
/// disjoint union of >= 2 stellar parts.
inline Network constellation_component_network(Rng& rng, int n, int comp_size, int centers,
                                               std::vector<int>* comp_out = nullptr) {
    auto perm = rng.permutation(n);
    std::vector<int> comp(perm.begin(), perm.begin() + comp_size);
    std::vector<int> outside(perm.begin() + comp_size, perm.end());
    std::vector<int> m(comp.begin(), comp.begin() + centers);
    std::vector<int> rest(comp.begin() + centers, comp.end());
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j) edges.emplace_back(m[i], m[j]);
    for (int c : m)
        for (int v : rest) edges.emplace_back(c, v);
    auto sizes = stellar_split(rng, static_cast<int>(rest.size()));
    std::size_t at = 0;
    for (int s : sizes) {
        std::vector<int> part(rest.begin() + at, rest.begin() + at + s);
        at += s;
        build_stellar(rng, std::move(part), edges);
    }
    sprinkle_edges(rng, outside, edges);
    if (comp_out) {
        *comp_out = comp;
        std::sort(comp_out->begin(), comp_out->end());
    }
    return Network::make(n, std::move(edges));
}

/// Galaxy on the given component sizes: every component gets a universal
/// center plus random peripheral-peripheral edges.
inline Network galaxy_network(Rng& rng, const std::vector<int>& comp_sizes) {
    int n = 0;
    for (int s : comp_sizes) n += s;
    auto perm = rng.permutation(n);
    std::vector<Edge> edges;
    std::size_t at = 0;
    for (int s : comp_sizes) {
        std::vector<int> comp(perm.begin() + at, perm.begin() + at + s);
        at += s;
        for (std::size_t i = 1; i < comp.size(); ++i) edges.emplace_back(comp[0], comp[i]);
        for (std::size_t i = 1; i < comp.size(); ++i)
            for (std::size_t j = i + 1; j < comp.size(); ++j)
                if (rng.chance(1, 3)) edges.emplace_back(comp[i], comp[j]);
    }
    return Network::make(n, std::move(edges));
}

inline Network cluster_network(Rng& rng, int q, int p) {
    auto perm = rng.permutation(q * p);
    std::vector<Edge> edges;
    for (int j = 0; j < q; ++j)
        for (int a = 0; a < p; ++a)
            for (int b = a + 1; b < p; ++b) edges.emplace_back(perm[j * p + a], perm[j * p + b]);
    return Network::make(q * p, std::move(edges));
}

inline Network pairs_network(Rng& rng, int n) {
    auto perm = rng.permutation(n);
    const int npairs = rng.below(n / 2 + 1);
    std::vector<Edge> edges;
    for (int t = 0; t < npairs; ++t) edges.emplace_back(perm[2 * t], perm[2 * t + 1]);
    return Network::make(n, std::move(edges));
}

/// Arbitrary network: each edge present with probability 1/3.
inline Network any_network(Rng& rng, int n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.chance(1, 3)) edges.emplace_back(i, j);
    return Network::make(n, std::move(edges));
}

/// Network containing at least one pair of receivers with equal closed
/// neighborhoods (a planted twin of node 0).
inline Network twin_network(Rng& rng, int n) {
    Network g = any_network(rng, n);
    std::vector<Edge> edges;
    for (auto [a, b] : g.edges)
        if (a != 1 && b != 1) edges.push_back({a, b});
    Adjacency adj(Network::make(n, edges));
    for (int v : adj.neighbors[0]) edges.push_back({1, v});
    edges.push_back({0, 1});
    return Network::make(n, std::move(edges));
}

/// Random experiment with small alphabets and bounded support; all
/// probabilities are exact dyadic-free rationals w/sum(w).
inline Experiment random_experiment(Rng& rng, int n, int max_support = 16) {
    std::vector<std::vector<Message>> alphabets(n);
    for (auto& a : alphabets) {
        const int size = rng.in(2, 3);
        for (Message m = 0; m < size; ++m) a.push_back(m);
    }
    for (;;) {
        const int target = rng.in(2, max_support);
        std::set<SignalVec> support;
        for (int t = 0; t < target; ++t) {
            SignalVec s(n);
            for (int i = 0; i < n; ++i) s[i] = rng.below(static_cast<int>(alphabets[i].size()));
            support.insert(std::move(s));
        }
        std::vector<ExperimentRow> rows;
        long sum_x = 0, sum_y = 0;
        std::vector<std::pair<long, long>> weights;
        for (std::size_t t = 0; t < support.size(); ++t) {
            long wx = rng.below(6), wy = rng.below(6);
            if (wx == 0 && wy == 0) wx = 1 + rng.below(5);
            weights.emplace_back(wx, wy);
            sum_x += wx;
            sum_y += wy;
        }
        if (sum_x == 0 || sum_y == 0) continue;
        std::size_t t = 0;
        for (const auto& s : support) {
            auto [wx, wy] = weights[t++];
            rows.push_back({s, Rational(wx, sum_x), Rational(wy, sum_y)});
        }
        return Experiment::make(std::move(alphabets), std::move(rows));
    }
}

} // namespace sampling
} // namespace persuasion
