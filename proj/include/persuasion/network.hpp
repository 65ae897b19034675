#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "persuasion/errors.hpp"

namespace persuasion {

using Edge = std::pair<int, int>;

/// Undirected simple graph on 0-based receiver indices.
/// Edges are stored canonically: first < second, sorted ascending, no duplicates.
struct Network {
    int n = 0;
    std::vector<Edge> edges;

    static Network make(int n, std::vector<Edge> edges) {
        if (n < 1) throw Error(Errc::invalid_network, "receiver count must be at least 1");
        for (auto& [a, b] : edges) {
            if (a == b) throw Error(Errc::invalid_network, "self-loop at node " + std::to_string(a));
            if (a < 0 || b < 0 || a >= n || b >= n)
                throw Error(Errc::invalid_network, "edge endpoint out of range");
            if (a > b) std::swap(a, b);
        }
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
            throw Error(Errc::invalid_network, "duplicate edge");
        return Network{n, std::move(edges)};
    }

    bool has_edge(int i, int j) const {
        if (i > j) std::swap(i, j);
        return std::binary_search(edges.begin(), edges.end(), Edge{i, j});
    }

    int edge_count() const { return static_cast<int>(edges.size()); }

    /// Union with extra edges; rejects edges already present.
    Network with_edges(const std::vector<Edge>& extra) const {
        auto all = edges;
        for (auto [a, b] : extra) {
            if (a > b) std::swap(a, b);
            if (has_edge(a, b))
                throw Error(Errc::invalid_network, "extension re-adds existing edge");
            all.emplace_back(a, b);
        }
        return make(n, std::move(all));
    }

    /// Weak inclusion: same node set, every edge of base present here.
    bool includes(const Network& base) const {
        if (base.n != n) return false;
        return std::includes(edges.begin(), edges.end(), base.edges.begin(), base.edges.end());
    }

    friend bool operator==(const Network& a, const Network& b) {
        return a.n == b.n && a.edges == b.edges;
    }
};

/// Adjacency structure with closed-neighborhood bitsets; containment tests are
/// word-wise, so the all-pairs domination scan stays O(n^2 * n/64).
struct Adjacency {
    std::vector<std::vector<int>> neighbors;  // open, sorted
    std::vector<std::vector<int>> closed;     // includes self, sorted
    std::vector<std::vector<std::uint64_t>> closed_bits;

    explicit Adjacency(const Network& g) {
        neighbors.assign(g.n, {});
        for (auto [a, b] : g.edges) {
            neighbors[a].push_back(b);
            neighbors[b].push_back(a);
        }
        const std::size_t words = (static_cast<std::size_t>(g.n) + 63) / 64;
        closed.assign(g.n, {});
        closed_bits.assign(g.n, std::vector<std::uint64_t>(words, 0));
        for (int i = 0; i < g.n; ++i) {
            std::sort(neighbors[i].begin(), neighbors[i].end());
            closed[i] = neighbors[i];
            closed[i].insert(std::lower_bound(closed[i].begin(), closed[i].end(), i), i);
            for (int v : closed[i]) closed_bits[i][v / 64] |= std::uint64_t(1) << (v % 64);
        }
    }

    int degree(int i) const { return static_cast<int>(neighbors[i].size()); }

    /// N_j(g) subseteq N_i(g), closed neighborhoods.
    bool closed_subset(int j, int i) const {
        const auto& a = closed_bits[j];
        const auto& b = closed_bits[i];
        for (std::size_t w = 0; w < a.size(); ++w)
            if (a[w] & ~b[w]) return false;
        return true;
    }

    bool closed_equal(int i, int j) const { return closed_bits[i] == closed_bits[j]; }
};

/// Connected components; each sorted ascending, listed by smallest member.
inline std::vector<std::vector<int>> components(const Network& g) {
    Adjacency adj(g);
    std::vector<int> comp(g.n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < g.n; ++s) {
        if (comp[s] != -1) continue;
        std::vector<int> stack{s}, nodes;
        comp[s] = static_cast<int>(out.size());
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            nodes.push_back(v);
            for (int w : adj.neighbors[v])
                if (comp[w] == -1) {
                    comp[w] = comp[v];
                    stack.push_back(w);
                }
        }
        std::sort(nodes.begin(), nodes.end());
        out.push_back(std::move(nodes));
    }
    return out;
}

inline std::vector<int> component_of(const Network& g, int member) {
    if (member < 0 || member >= g.n)
        throw Error(Errc::bad_parameters, "component member out of range");
    for (auto& c : components(g))
        if (std::binary_search(c.begin(), c.end(), member)) return c;
    throw Error(Errc::bad_parameters, "unreachable");
}

/// Induced subnetwork; returns the node relabeling old->new alongside.
inline Network induced(const Network& g, const std::vector<int>& nodes, std::vector<int>* old_of_new = nullptr) {
    std::vector<int> pos(g.n, -1);
    for (std::size_t i = 0; i < nodes.size(); ++i) pos[nodes[i]] = static_cast<int>(i);
    std::vector<Edge> sub;
    for (auto [a, b] : g.edges)
        if (pos[a] != -1 && pos[b] != -1) sub.emplace_back(pos[a], pos[b]);
    if (old_of_new) *old_of_new = nodes;
    return Network::make(static_cast<int>(nodes.size()), std::move(sub));
}

/// Groups of receivers with identical closed neighborhoods; such receivers
/// can always be sent identical messages. Groups sorted by smallest member.
inline std::vector<std::vector<int>> neighborhood_classes(const Network& g) {
    Adjacency adj(g);
    std::vector<std::vector<int>> classes;
    std::vector<int> cls(g.n, -1);
    for (int i = 0; i < g.n; ++i) {
        if (cls[i] != -1) continue;
        cls[i] = static_cast<int>(classes.size());
        classes.push_back({i});
        for (int j = i + 1; j < g.n; ++j)
            if (cls[j] == -1 && adj.closed_equal(i, j)) {
                cls[j] = cls[i];
                classes[cls[i]].push_back(j);
            }
    }
    return classes;
}

} // namespace persuasion
