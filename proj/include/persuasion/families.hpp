#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "persuasion/network.hpp"

namespace persuasion {

// ---------------------------------------------------------------------------
// Generators. Node labelings are deterministic and documented per kind:
//   circle:   i -- (i+1 mod n)
//   star:     center is index 0
//   halo:     center is index n-1, cycle on 0..n-2
//   clusters: receiver (i,j) of cluster j maps to node j*p + i
//   pairs:    explicit pair list over 0..n-1
// ---------------------------------------------------------------------------

inline Network make_empty(int n) { return Network::make(n, {}); }

inline Network make_circle(int n) {
    if (n < 3) throw Error(Errc::bad_parameters, "circle needs n >= 3");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Network::make(n, std::move(e));
}

inline Network make_star(int n) {
    if (n < 2) throw Error(Errc::bad_parameters, "star needs n >= 2");
    std::vector<Edge> e;
    for (int i = 1; i < n; ++i) e.emplace_back(0, i);
    return Network::make(n, std::move(e));
}

inline Network make_complete(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Network::make(n, std::move(e));
}

inline Network make_halo(int n) {
    if (n < 4) throw Error(Errc::bad_parameters, "halo needs n >= 4");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, (i + 1) % (n - 1));
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, n - 1);
    return Network::make(n, std::move(e));
}

inline Network make_clusters(int q, int p) {
    if (q < 2 || p < 2) throw Error(Errc::bad_parameters, "clusters need q >= 2 and p >= 2");
    std::vector<Edge> e;
    for (int j = 0; j < q; ++j)
        for (int a = 0; a < p; ++a)
            for (int b = a + 1; b < p; ++b) e.emplace_back(j * p + a, j * p + b);
    return Network::make(q * p, std::move(e));
}

inline Network make_pairs(int n, const std::vector<Edge>& pairs) {
    std::vector<int> deg(n, 0);
    for (auto [a, b] : pairs) {
        if (a < 0 || b < 0 || a >= n || b >= n || a == b)
            throw Error(Errc::bad_parameters, "bad pair");
        if (++deg[a] > 1 || ++deg[b] > 1)
            throw Error(Errc::bad_parameters, "pairs must be disjoint");
    }
    return Network::make(n, pairs);
}

// ---------------------------------------------------------------------------
// Recognizers.
// ---------------------------------------------------------------------------

inline bool is_connected(const Network& g) { return components(g).size() == 1; }

inline bool is_circle(const Network& g) {
    if (g.n < 3 || g.edge_count() != g.n || !is_connected(g)) return false;
    Adjacency adj(g);
    for (int i = 0; i < g.n; ++i)
        if (adj.degree(i) != 2) return false;
    return true;
}

/// Certificate of the recursive hub hierarchy. tree_edges is parent->child in
/// the induced domination tree; its ancestor closure is exactly the set of
/// dominating pairs inside the component.
struct StellarCertificate {
    int root = -1;
    int depth = 0;
    std::vector<int> nodes;                   // sorted, original labels
    std::vector<std::pair<int, int>> tree_edges;
    std::map<int, int> node_depth;
    std::vector<StellarCertificate> children;  // one per partition element
};

namespace detail {

inline std::vector<std::vector<int>> components_within(const Adjacency& adj,
                                                       const std::vector<int>& nodes) {
    std::map<int, int> comp;
    for (int v : nodes) comp[v] = -1;
    std::vector<std::vector<int>> out;
    for (int s : nodes) {
        if (comp[s] != -1) continue;
        std::vector<int> stack{s}, group;
        comp[s] = static_cast<int>(out.size());
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            group.push_back(v);
            for (int w : adj.neighbors[v]) {
                auto it = comp.find(w);
                if (it != comp.end() && it->second == -1) {
                    it->second = comp[v];
                    stack.push_back(w);
                }
            }
        }
        std::sort(group.begin(), group.end());
        out.push_back(std::move(group));
    }
    return out;
}

inline StellarCertificate recognize_stellar_rec(const Adjacency& adj, std::vector<int> nodes) {
    StellarCertificate cert;
    cert.nodes = nodes;
    if (nodes.size() == 1) {
        cert.root = nodes[0];
        cert.node_depth[nodes[0]] = 0;
        return cert;
    }
    // Candidate roots are nodes adjacent to everything else in the set. With
    // two or more universal nodes no candidate can leave >= 2 components, so
    // at most one can succeed.
    std::vector<int> universal;
    for (int r : nodes) {
        bool all = true;
        for (int v : nodes)
            if (v != r && !std::binary_search(adj.neighbors[r].begin(), adj.neighbors[r].end(), v)) {
                all = false;
                break;
            }
        if (all) universal.push_back(r);
    }
    if (universal.empty())
        throw Error(Errc::not_stellar, "no node is connected to all the others");
    std::string last_reason;
    for (int r : universal) {
        std::vector<int> rest;
        for (int v : nodes)
            if (v != r) rest.push_back(v);
        auto parts = components_within(adj, rest);
        if (parts.size() < 2) {
            last_reason = "removing candidate root " + std::to_string(r) +
                          " leaves a single partition element";
            continue;
        }
        try {
            cert.root = r;
            cert.depth = 0;
            cert.node_depth.clear();
            cert.tree_edges.clear();
            cert.children.clear();
            cert.node_depth[r] = 0;
            for (auto& part : parts) {
                auto sub = recognize_stellar_rec(adj, part);
                cert.tree_edges.emplace_back(r, sub.root);
                for (auto [p, c] : sub.tree_edges) cert.tree_edges.emplace_back(p, c);
                for (auto [v, d] : sub.node_depth) cert.node_depth[v] = d + 1;
                cert.depth = std::max(cert.depth, sub.depth + 1);
                cert.children.push_back(std::move(sub));
            }
            return cert;
        } catch (const Error& e) {
            last_reason = e.what();
        }
    }
    throw Error(Errc::not_stellar, last_reason);
}

inline int within_degree(const Adjacency& adj, const std::vector<int>& nodes, int v) {
    int d = 0;
    for (int w : adj.neighbors[v])
        if (std::binary_search(nodes.begin(), nodes.end(), w)) ++d;
    return d;
}

} // namespace detail

inline StellarCertificate recognize_stellar(const Network& g, const std::vector<int>& nodes) {
    if (nodes.empty()) throw Error(Errc::not_stellar, "empty node set");
    Adjacency adj(g);
    return detail::recognize_stellar_rec(adj, nodes);
}

inline StellarCertificate recognize_stellar(const Network& g) {
    std::vector<int> all(g.n);
    for (int i = 0; i < g.n; ++i) all[i] = i;
    if (!is_connected(g) && g.n > 1)
        throw Error(Errc::not_stellar, "network is not connected");
    return recognize_stellar(g, all);
}

/// Halo test on a node set: 2(m-1) links, one node seeing everyone, and the
/// rest forming a single cycle.
inline bool is_halo(const Network& g, const std::vector<int>& nodes) {
    const int m = static_cast<int>(nodes.size());
    if (m < 4) return false;
    Adjacency adj(g);
    int within_edges = 0;
    for (auto [a, b] : g.edges)
        if (std::binary_search(nodes.begin(), nodes.end(), a) &&
            std::binary_search(nodes.begin(), nodes.end(), b))
            ++within_edges;
    if (within_edges != 2 * (m - 1)) return false;
    for (int c : nodes) {
        if (detail::within_degree(adj, nodes, c) != m - 1) continue;
        bool cycle = true;
        std::vector<int> rest;
        for (int v : nodes)
            if (v != c) rest.push_back(v);
        for (int v : rest) {
            int d = 0;
            for (int w : adj.neighbors[v])
                if (w != c && std::binary_search(rest.begin(), rest.end(), w)) ++d;
            if (d != 2) {
                cycle = false;
                break;
            }
        }
        if (cycle && detail::components_within(adj, rest).size() == 1) return true;
    }
    return false;
}

inline bool recognize_halo(const Network& g) {
    std::vector<int> all(g.n);
    for (int i = 0; i < g.n; ++i) all[i] = i;
    return is_halo(g, all);
}

/// The center of a halo node set (unique for size >= 5; lowest index for K4).
inline int halo_center(const Network& g, const std::vector<int>& nodes) {
    Adjacency adj(g);
    for (int c : nodes)
        if (detail::within_degree(adj, nodes, c) == static_cast<int>(nodes.size()) - 1) return c;
    throw Error(Errc::not_halo, "no center");
}

/// Center of a star on the node set (one node seeing all, the rest pairwise
/// unlinked), or -1.
inline int star_center_of(const Network& g, const std::vector<int>& nodes) {
    Adjacency adj(g);
    const int size = static_cast<int>(nodes.size());
    if (size < 2) return -1;
    int center = -1;
    for (int v : nodes)
        if (detail::within_degree(adj, nodes, v) == size - 1) {
            center = v;
            break;
        }
    if (center < 0) return -1;
    for (int v : nodes)
        if (v != center && detail::within_degree(adj, nodes, v) != 1) return -1;
    return center;
}

struct ConstellationCertificate {
    std::vector<int> centers;  // all universal nodes, sorted
    int depth = 0;
    std::vector<StellarCertificate> per_center;  // subnetwork certificate for each center
};

/// Centers are taken as all nodes seeing the whole set; each center's
/// subnetwork on (nodes \ M) + {center} must be stellar.
inline ConstellationCertificate recognize_constellation(const Network& g,
                                                        const std::vector<int>& nodes) {
    Adjacency adj(g);
    const int m = static_cast<int>(nodes.size());
    ConstellationCertificate cert;
    for (int v : nodes)
        if (detail::within_degree(adj, nodes, v) == m - 1) cert.centers.push_back(v);
    if (cert.centers.empty())
        throw Error(Errc::no_universal_node, "no node is connected to all the others");
    if (static_cast<int>(cert.centers.size()) == m)
        throw Error(Errc::not_constellation, "centers must be a strict subset of the nodes");
    for (int c : cert.centers) {
        std::vector<int> sub;
        for (int v : nodes)
            if (v == c || !std::binary_search(cert.centers.begin(), cert.centers.end(), v))
                sub.push_back(v);
        try {
            auto sc = detail::recognize_stellar_rec(adj, sub);
            cert.depth = std::max(cert.depth, sc.depth);
            cert.per_center.push_back(std::move(sc));
        } catch (const Error& e) {
            throw Error(Errc::subnetwork_not_stellar,
                        "subnetwork of center " + std::to_string(c) + " is not stellar: " + e.what());
        }
    }
    return cert;
}

inline ConstellationCertificate recognize_constellation(const Network& g) {
    std::vector<int> all(g.n);
    for (int i = 0; i < g.n; ++i) all[i] = i;
    return recognize_constellation(g, all);
}

struct GalaxyCertificate {
    std::vector<std::vector<int>> comps;
    std::vector<int> centers;  // one per component (lowest-index choice)
};

inline GalaxyCertificate recognize_galaxy(const Network& g) {
    Adjacency adj(g);
    GalaxyCertificate cert;
    for (auto& comp : components(g)) {
        int center = -1;
        for (int v : comp)
            if (detail::within_degree(adj, comp, v) == static_cast<int>(comp.size()) - 1) {
                center = v;
                break;
            }
        if (center == -1) {
            std::string members;
            for (int v : comp) members += (members.empty() ? "" : ",") + std::to_string(v);
            throw Error(Errc::component_without_center,
                        "component {" + members + "} has no node connected to all the others");
        }
        cert.centers.push_back(center);
        cert.comps.push_back(comp);
    }
    return cert;
}

/// Disjoint equal-size cliques; returns (q, p).
inline std::pair<int, int> recognize_cluster_network(const Network& g) {
    Adjacency adj(g);
    auto comps = components(g);
    int p = -1;
    for (auto& comp : comps) {
        const int size = static_cast<int>(comp.size());
        for (int v : comp)
            if (detail::within_degree(adj, comp, v) != size - 1)
                throw Error(Errc::non_clique_component,
                            "component containing node " + std::to_string(comp[0]) + " is not a clique");
        if (p == -1) p = size;
        else if (p != size)
            throw Error(Errc::unequal_sizes, "components have sizes " + std::to_string(p) + " and " +
                                                 std::to_string(size));
    }
    const int q = static_cast<int>(comps.size());
    if (q < 2 || p < 2)
        throw Error(Errc::not_cluster_network,
                    "need at least two clusters of size at least two (got q=" + std::to_string(q) +
                        ", p=" + std::to_string(p) + ")");
    return {q, p};
}

// ---------------------------------------------------------------------------
// Labeling for `family check`. Most specific kind first; the label is advisory
// and callers re-run the recognizer they care about.
// ---------------------------------------------------------------------------

struct FamilyLabel {
    std::string kind = "other";
    std::map<std::string, int> parameters;
};

inline FamilyLabel classify(const Network& g) {
    Adjacency adj(g);
    FamilyLabel label;
    label.parameters["n"] = g.n;
    if (g.edges.empty()) {
        label.kind = "empty";
        return label;
    }
    if (g.edge_count() == g.n * (g.n - 1) / 2) {
        label.kind = "complete";
        return label;
    }
    bool all_deg_le1 = true;
    for (int i = 0; i < g.n; ++i) all_deg_le1 &= adj.degree(i) <= 1;
    if (all_deg_le1) {
        label.kind = "pairs";
        label.parameters["pairs"] = g.edge_count();
        return label;
    }
    if (is_circle(g)) {
        label.kind = "circle";
        return label;
    }
    if (g.n >= 3 && is_connected(g)) {
        for (int c = 0; c < g.n; ++c)
            if (adj.degree(c) == g.n - 1 && g.edge_count() == g.n - 1) {
                label.kind = "star";
                label.parameters["center"] = c;
                return label;
            }
    }
    if (recognize_halo(g)) {
        label.kind = "halo";
        return label;
    }
    try {
        auto [q, p] = recognize_cluster_network(g);
        label.kind = "cluster_network";
        label.parameters["q"] = q;
        label.parameters["p"] = p;
        return label;
    } catch (const Error&) {}
    try {
        auto cert = recognize_stellar(g);
        label.kind = "stellar";
        label.parameters["root"] = cert.root;
        label.parameters["depth"] = cert.depth;
        return label;
    } catch (const Error&) {}
    try {
        auto cert = recognize_constellation(g);
        label.kind = "constellation";
        label.parameters["centers"] = static_cast<int>(cert.centers.size());
        label.parameters["depth"] = cert.depth;
        return label;
    } catch (const Error&) {}
    try {
        auto cert = recognize_galaxy(g);
        if (cert.comps.size() >= 2) {
            label.kind = "galaxy";
            label.parameters["components"] = static_cast<int>(cert.comps.size());
            return label;
        }
    } catch (const Error&) {}
    return label;
}

} // namespace persuasion
