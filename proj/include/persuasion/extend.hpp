#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "persuasion/construct.hpp"
#include "persuasion/domination.hpp"
#include "persuasion/families.hpp"
#include "persuasion/instance.hpp"
#include "persuasion/network.hpp"
#include "persuasion/oracle.hpp"

namespace persuasion {

/// A sender-beneficial extension: the added edges, the construction that chose
/// them, a step log, and the certificate that the extended network has no
/// information-dominating pairs (which is what makes the private-signaling
/// bound attainable there). Builders refuse to return plans whose certificate
/// is not empty.
struct ExtensionPlan {
    Network base;
    std::vector<Edge> added_edges;
    Network extended;
    std::string construction;
    std::string case_label;
    DominationReport certificate;  // of `extended`; empty by invariant
    std::vector<std::string> narrative;
    std::map<std::string, std::vector<int>> roles;
};

namespace detail {

class PlanBuilder {
public:
    PlanBuilder(const Network& base, std::string construction)
        : base_(base), plan_{base, {}, {}, std::move(construction), "", {}, {}, {}} {
        for (auto e : base.edges) have_.insert(e);
    }

    void connect(int a, int b) {
        if (a == b) throw Error(Errc::certificate_violation, "construction produced a self-loop");
        if (a > b) std::swap(a, b);
        if (have_.emplace(a, b).second) plan_.added_edges.push_back({a, b});
    }

    void connect_all(const std::vector<int>& nodes) {
        for (std::size_t i = 0; i < nodes.size(); ++i)
            for (std::size_t j = i + 1; j < nodes.size(); ++j) connect(nodes[i], nodes[j]);
    }

    bool has(int a, int b) const {
        if (a > b) std::swap(a, b);
        return have_.count({a, b}) != 0;
    }

    void note(std::string line) { plan_.narrative.push_back(std::move(line)); }
    void role(const std::string& name, std::vector<int> who) { plan_.roles[name] = std::move(who); }
    void set_case(std::string label) { plan_.case_label = std::move(label); }

    ExtensionPlan finish() {
        if (plan_.added_edges.empty())
            throw Error(Errc::certificate_violation, "construction added no edges");
        std::sort(plan_.added_edges.begin(), plan_.added_edges.end());
        plan_.extended = base_.with_edges(plan_.added_edges);
        plan_.certificate = dominating_pairs(plan_.extended);
        if (!plan_.certificate.empty()) {
            std::string pairs;
            for (auto [i, j] : plan_.certificate.pairs)
                pairs += " " + std::to_string(i) + ">" + std::to_string(j);
            throw Error(Errc::certificate_violation,
                        "extended network still has dominating pairs:" + pairs);
        }
        return std::move(plan_);
    }

private:
    Network base_;
    std::set<Edge> have_;
    ExtensionPlan plan_;
};

inline std::string join(const std::vector<int>& v) {
    std::string s;
    for (int x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
    return s;
}

inline std::vector<int> set_minus(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline std::vector<int> all_nodes(const Network& g) {
    std::vector<int> v(g.n);
    for (int i = 0; i < g.n; ++i) v[i] = i;
    return v;
}

/// Star-skeleton periphery repair shared by the depth-1 stellar case and the
/// halo case: match outside nodes to unique periphery nodes (one designated
/// node absorbing the leftover periphery when there are more periphery than
/// outside nodes) and turn the outside into a clique.
inline void periphery_repair(PlanBuilder& b, const std::vector<int>& periphery,
                             const std::vector<int>& outside) {
    if (periphery.size() < outside.size())
        throw Error(Errc::premise_violated,
                    "periphery smaller than the outside set; the depth-1 matching has no case for this");
    if (periphery.size() == outside.size()) {
        b.set_case("depth1/equal");
        for (std::size_t t = 0; t < outside.size(); ++t) b.connect(outside[t], periphery[t]);
        b.note("matched outside nodes to unique periphery nodes: " + join(outside) + " -> " +
               join(periphery));
    } else {
        b.set_case("depth1/periphery-larger");
        const int j = outside[0];
        std::vector<int> others(outside.begin() + 1, outside.end());
        for (std::size_t t = 0; t < others.size(); ++t) b.connect(others[t], periphery[t]);
        std::vector<int> leftover(periphery.begin() + others.size(), periphery.end());
        for (int p : leftover) b.connect(j, p);
        b.role("designated", {j});
        b.note("designated outside node " + std::to_string(j) + " takes the unmatched periphery {" +
               join(leftover) + "}");
    }
    b.connect_all(outside);
    b.note("outside nodes form a clique: {" + join(outside) + "}");
}

/// Depth-stratified repair for a stellar component of depth >= 2 (used
/// directly and by the constellation builder on the kept center's
/// subnetwork). `outside` is sorted and disjoint from `comp`.
inline void stellar_deep_repair(PlanBuilder& b, const StellarCertificate& cert,
                                const std::vector<int>& comp, const std::vector<int>& outside) {
    const int depth = cert.depth;
    std::vector<std::vector<int>> depth_class(depth + 1);
    for (auto [v, d] : cert.node_depth) depth_class[d].push_back(v);
    for (auto& dc : depth_class) std::sort(dc.begin(), dc.end());

    b.set_case("deep");
    std::vector<int> connectors(outside.begin(), outside.begin() + depth);
    b.role("v", connectors);
    for (int d = 1; d <= depth; ++d) {
        for (int node : depth_class[d]) b.connect(connectors[d - 1], node);
        b.note("outside node " + std::to_string(connectors[d - 1]) + " linked to all depth-" +
               std::to_string(d) + " nodes {" + join(depth_class[d]) + "}");
    }

    std::vector<int> rest(outside.begin() + depth, outside.end());
    b.role("rest", rest);
    if (rest.size() >= 2) {
        for (int d1 : depth_class[1])
            for (int d2 : depth_class[2]) b.connect(d1, d2);
        b.note("depth-1 nodes linked to every depth-2 node");
    }
    if (!rest.empty()) {
        b.set_case(rest.size() == 1 ? "deep/one-leftover" : "deep/many-leftover");
        b.connect_all(rest);
        for (int w : rest) {
            b.connect(w, cert.root);
            for (int v : connectors) b.connect(w, v);
        }
        b.note("leftover outside nodes {" + join(rest) + "} cliqued and linked to the root and "
               "every depth connector");
        if (rest.size() == 1) {
            b.connect(rest[0], depth_class[2][0]);
            b.role("targets", {depth_class[2][0]});
            b.note("single leftover outside node " + std::to_string(rest[0]) +
                   " gets its unique link to depth-2 node " + std::to_string(depth_class[2][0]));
        } else {
            std::vector<int> non_root = set_minus(comp, {cert.root});
            if (non_root.size() < rest.size())
                throw Error(Errc::premise_violated,
                            "not enough unique component targets for the leftover outside nodes");
            std::vector<int> targets(non_root.begin(), non_root.begin() + rest.size());
            for (std::size_t t = 0; t < rest.size(); ++t) b.connect(rest[t], targets[t]);
            b.role("targets", targets);
            b.note("leftover outside nodes matched to unique component nodes: " + join(rest) +
                   " -> " + join(targets));
        }
    }
}

} // namespace detail

/// Chains the pairs and singletons of a degree-<=1 network into one cycle,
/// in the fixed order pair...pair singleton...singleton.
inline ExtensionPlan extend_pairs_to_circle(const Network& g) {
    if (g.n <= 3) throw Error(Errc::too_small, "need more than 3 receivers");
    Adjacency adj(g);
    std::vector<Edge> pairs;
    std::vector<int> singles;
    for (int i = 0; i < g.n; ++i) {
        if (adj.degree(i) > 1)
            throw Error(Errc::degree_too_high, "node " + std::to_string(i) + " has degree > 1");
        if (adj.degree(i) == 0) singles.push_back(i);
        else if (i < adj.neighbors[i][0]) pairs.emplace_back(i, adj.neighbors[i][0]);
    }

    detail::PlanBuilder b(g, "pairs_to_circle");
    b.set_case(pairs.empty() ? "all-singletons" : (singles.empty() ? "all-pairs" : "mixed"));
    // cycle u1-v1-u2-v2-...-ul-vl-w1-...-wm back to u1
    std::vector<int> order;
    for (auto [u, v] : pairs) {
        order.push_back(u);
        order.push_back(v);
    }
    for (int w : singles) order.push_back(w);
    for (std::size_t t = 0; t < order.size(); ++t) {
        int a = order[t], c = order[(t + 1) % order.size()];
        if (!g.has_edge(a, c)) b.connect(a, c);
    }
    b.role("singletons", singles);
    b.note("cycle order: " + detail::join(order));
    auto plan = b.finish();
    if (!is_circle(plan.extended))
        throw Error(Errc::certificate_violation, "extension did not produce a circle");
    return plan;
}

/// Breaks every dominating pair around a stellar component with more than k
/// receivers, given at least depth-many receivers outside it.
inline ExtensionPlan extend_stellar(const Network& g, int member, int k) {
    auto comp = component_of(g, member);
    StellarCertificate cert = recognize_stellar(g, comp);  // throws NotStellar
    if (static_cast<int>(comp.size()) <= k)
        throw Error(Errc::component_too_small,
                    "stellar component has " + std::to_string(comp.size()) +
                        " receivers, needs more than k=" + std::to_string(k));
    const int depth = cert.depth;
    std::vector<int> outside = detail::set_minus(detail::all_nodes(g), comp);
    if (static_cast<int>(outside.size()) < depth)
        throw Error(Errc::not_enough_outside_nodes,
                    "need at least depth=" + std::to_string(depth) + " receivers outside, have " +
                        std::to_string(outside.size()));

    detail::PlanBuilder b(g, "stellar");
    b.role("component", comp);
    b.role("root", {cert.root});
    b.note("stellar component {" + detail::join(comp) + "} root " + std::to_string(cert.root) +
           " depth " + std::to_string(depth));
    b.note("base value is at most the private optimum with one receiver fewer: the root observes "
           "everything its component does and is never pivotal");

    if (depth == 1) {
        detail::periphery_repair(b, detail::set_minus(comp, {cert.root}), outside);
    } else {
        detail::stellar_deep_repair(b, cert, comp, outside);
    }
    return b.finish();
}

/// Halo component: only the center dominates, and the star-skeleton repair
/// breaks exactly that. A size-4 halo is a complete graph whose periphery
/// dominations the skeleton cannot break; it is rejected.
inline ExtensionPlan extend_halo(const Network& g, int member, int k) {
    auto comp = component_of(g, member);
    if (!is_halo(g, comp)) throw Error(Errc::not_halo, "component is not a halo");
    const int size = static_cast<int>(comp.size());
    if (size <= k || size >= g.n)
        throw Error(Errc::size_out_of_range, "halo component size must lie strictly between k and n");
    if (size == 4)
        throw Error(Errc::size_out_of_range,
                    "size-4 halo is a complete graph; its periphery dominations cannot be broken by "
                    "the center/periphery skeleton");
    const int center = halo_center(g, comp);

    detail::PlanBuilder b(g, "halo");
    b.role("component", comp);
    b.role("center", {center});
    b.note("halo component {" + detail::join(comp) + "} center " + std::to_string(center));
    b.note("base value is at most the private optimum with one receiver fewer (center reduction)");
    detail::periphery_repair(b, detail::set_minus(comp, {center}),
                             detail::set_minus(detail::all_nodes(g), comp));
    return b.finish();
}

/// Constellation component: runs the stellar repair on the kept center's
/// subnetwork, then breaks the mutual dominations among the centers and
/// shields the helper node u.
inline ExtensionPlan extend_constellation(const Network& g, int member, int k) {
    auto comp = component_of(g, member);
    ConstellationCertificate ccert;
    try {
        ccert = recognize_constellation(g, comp);
    } catch (const Error& e) {
        throw Error(Errc::not_constellation, e.what());
    }
    if (ccert.centers.size() == 1) return extend_stellar(g, member, k);

    if (static_cast<int>(comp.size()) <= k)
        throw Error(Errc::premise_violated, "component must have more than k receivers");
    const int depth = ccert.depth;
    const int mu = std::max(depth, static_cast<int>(ccert.centers.size()));
    std::vector<int> outside = detail::set_minus(detail::all_nodes(g), comp);
    if (static_cast<int>(outside.size()) < mu + 1)
        throw Error(Errc::premise_violated,
                    "need at least max{depth,|centers|}+1 = " + std::to_string(mu + 1) +
                        " outside receivers, have " + std::to_string(outside.size()));

    const int u = outside[0];
    std::vector<int> connectors(outside.begin() + 1, outside.begin() + 1 + mu);  // v_1..v_mu
    const int c = ccert.centers[0];
    std::vector<int> sub_comp = detail::set_minus(comp, ccert.centers);
    sub_comp.insert(std::lower_bound(sub_comp.begin(), sub_comp.end(), c), c);
    std::vector<int> inner_outside(outside.begin() + 1, outside.end());  // outside minus u

    detail::PlanBuilder b(g, "constellation");
    b.role("component", comp);
    b.role("centers", ccert.centers);
    b.role("chosen_center", {c});
    b.role("u", {u});
    b.role("v", connectors);
    b.note("constellation {" + detail::join(comp) + "} centers {" + detail::join(ccert.centers) +
           "} depth " + std::to_string(depth) + "; center " + std::to_string(c) +
           " kept, helper u=" + std::to_string(u));
    b.note("base value is below the private bound: the centers observe the whole component and "
           "mutually dominate");

    const int ncenters = static_cast<int>(ccert.centers.size());
    if (depth == 1) {
        // Partners for the centers come from the matched outside nodes, and u
        // stays clear of every center: any periphery node whose sole outside
        // neighbor became a center's partner gets a second link to u, which
        // re-breaks that center's domination over it.
        std::vector<int> periphery = detail::set_minus(comp, ccert.centers);
        detail::periphery_repair(b, periphery, inner_outside);
        for (int w : inner_outside) b.connect(u, w);
        std::vector<int> partners(inner_outside.begin(), inner_outside.begin() + ncenters);
        for (int t = 0; t < ncenters; ++t) b.connect(ccert.centers[t], partners[t]);
        b.role("partners", partners);
        b.note("centers matched to unique outside partners: {" + detail::join(ccert.centers) +
               "} -> {" + detail::join(partners) + "}");
        int shielded = 0;
        for (int p : periphery)
            for (int w : partners)
                if (b.has(p, w)) {  // the component had no outside links, so this is the matching
                    b.connect(u, p);
                    ++shielded;
                    break;
                }
        b.note("u joined the outside clique and shields " + std::to_string(shielded) +
               " periphery node(s) matched to center partners");
    } else {
        StellarCertificate sub = recognize_stellar(g, sub_comp);
        if (sub.root != c || sub.depth != depth)
            throw Error(Errc::not_constellation, "center subnetwork certificate mismatch");
        b.set_case("deep");

        std::vector<std::vector<int>> depth_class(depth + 1);
        for (auto [v, d] : sub.node_depth) depth_class[d].push_back(v);
        for (auto& dc : depth_class) std::sort(dc.begin(), dc.end());

        for (int d = 1; d <= depth; ++d) {
            for (int node : depth_class[d]) b.connect(connectors[d - 1], node);
            b.note("outside node " + std::to_string(connectors[d - 1]) + " linked to all depth-" +
                   std::to_string(d) + " nodes {" + detail::join(depth_class[d]) + "}");
        }

        // partner the remaining centers with v_2, v_3, ...; partners of index
        // above the depth are leftover outside nodes, and those must stay
        // clear of the kept center below
        std::vector<int> others(ccert.centers.begin() + 1, ccert.centers.end());
        std::set<int> partnered_vs;
        for (std::size_t t = 0; t < others.size(); ++t) {
            b.connect(others[t], connectors[1 + t]);
            partnered_vs.insert(connectors[1 + t]);
        }
        b.note("remaining centers matched to unique v nodes: {" + detail::join(others) + "}");

        std::vector<int> rest(inner_outside.begin() + depth, inner_outside.end());
        b.role("rest", rest);
        if (rest.size() >= 2) {
            for (int d1 : depth_class[1])
                for (int d2 : depth_class[2]) b.connect(d1, d2);
            b.note("depth-1 nodes linked to every depth-2 node");
        }

        const int w1 = depth_class[1][0], w2 = depth_class[2][0];
        b.role("w", {w1, w2});
        b.connect(u, c);
        for (int v : connectors) b.connect(u, v);
        b.connect(u, w1);
        b.connect(u, w2);
        // nodes whose depth connector became a center's partner need u as a
        // second center-free outside neighbor
        std::set<int> shield{w1, w2};
        for (int d = 2; d <= std::min(depth, ncenters); ++d)
            for (int node : depth_class[d]) {
                b.connect(u, node);
                shield.insert(node);
            }
        b.note("u linked to the kept center, every v node, the depth-1/depth-2 witnesses " +
               std::to_string(w1) + "," + std::to_string(w2) + ", and every node whose depth "
               "connector became a partner");

        if (!rest.empty()) {
            b.connect_all(rest);
            for (int w : rest) {
                // a partnered leftover must not touch the kept center, or the
                // center would still dominate its partner
                if (!partnered_vs.count(w)) b.connect(w, c);
                for (int d = 0; d < depth; ++d) b.connect(w, connectors[d]);
            }
            b.note("leftover outside nodes {" + detail::join(rest) + "} cliqued and linked to the "
                   "depth connectors (and to the kept center unless partnered)");

            if (rest.size() == 1) {
                const int lone = rest[0];
                if (!partnered_vs.count(lone) && g.has_edge(lone, u))
                    throw Error(Errc::premise_violated,
                                "the single leftover outside node is pre-wired to u and every "
                                "depth-2 target is shielded; no unique link can distinguish it");
                b.connect(lone, w2);
                b.role("targets", {w2});
                b.note("single leftover outside node " + std::to_string(lone) +
                       " gets its unique link to depth-2 node " + std::to_string(w2));
            } else {
                // unique targets; u-adjacent extras take unshielded ones first
                // so u cannot come to dominate them
                std::vector<int> pool, shielded_pool;
                for (int node : detail::set_minus(sub_comp, {c}))
                    (shield.count(node) ? shielded_pool : pool).push_back(node);
                pool.insert(pool.end(), shielded_pool.begin(), shielded_pool.end());
                std::vector<int> order;
                for (int w : rest)
                    if (!partnered_vs.count(w) && g.has_edge(w, u)) order.push_back(w);
                for (int w : rest)
                    if (partnered_vs.count(w) || !g.has_edge(w, u)) order.push_back(w);
                if (pool.size() < order.size())
                    throw Error(Errc::premise_violated,
                                "not enough unique component targets for the leftover outside nodes");
                std::size_t unshielded = pool.size() - shielded_pool.size();
                std::vector<int> targets;
                for (std::size_t t = 0; t < order.size(); ++t) {
                    if (!partnered_vs.count(order[t]) && g.has_edge(order[t], u) && t >= unshielded)
                        throw Error(Errc::premise_violated,
                                    "u-adjacent leftover nodes outnumber the unshielded targets");
                    b.connect(order[t], pool[t]);
                    targets.push_back(pool[t]);
                }
                b.role("targets", targets);
                b.note("leftover outside nodes matched to unique component targets: " +
                       detail::join(order) + " -> " + detail::join(targets));
            }
        }
    }
    return b.finish();
}

/// Galaxy: greedy cross-component pairing over components in weakly decreasing
/// size order, plus the final-component repair into its predecessor.
inline ExtensionPlan extend_galaxy(const Network& g, int k) {
    GalaxyCertificate cert;
    try {
        cert = recognize_galaxy(g);
    } catch (const Error& e) {
        throw Error(Errc::not_galaxy, e.what());
    }
    if (cert.comps.size() < 2) throw Error(Errc::not_galaxy, "need at least two components");
    for (const auto& comp : cert.comps) {
        const int size = static_cast<int>(comp.size());
        if (size < 3 || 2 * size > g.n || size > k - 1)
            throw Error(Errc::component_size_out_of_range,
                        "component {" + detail::join(comp) + "} has size " + std::to_string(size) +
                            ", needs 3 <= size <= min(k-1, n/2)");
    }
    {  // no union of whole components may hit the quota exactly
        const int nc = static_cast<int>(cert.comps.size());
        std::vector<int> from(k + 1, -2);  // component index that first reached this sum
        from[0] = -1;
        for (int ci = 0; ci < nc; ++ci) {
            const int s = static_cast<int>(cert.comps[ci].size());
            for (int t = k; t >= s; --t)
                if (from[t] == -2 && from[t - s] != -2) from[t] = ci;
        }
        if (from[k] != -2) {
            std::vector<int> subset;
            for (int t = k; t > 0; t -= static_cast<int>(cert.comps[from[t]].size()))
                subset.push_back(from[t]);
            std::sort(subset.begin(), subset.end());
            throw Error(Errc::subset_sums_to_quota,
                        "components " + detail::join(subset) + " union to exactly k=" + std::to_string(k));
        }
    }

    std::vector<int> order(cert.comps.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (cert.comps[a].size() != cert.comps[b].size())
            return cert.comps[a].size() > cert.comps[b].size();
        return cert.comps[a][0] < cert.comps[b][0];
    });

    std::vector<int> seq;
    std::vector<int> comp_of_node(g.n, -1);
    for (std::size_t oi = 0; oi < order.size(); ++oi)
        for (int v : cert.comps[order[oi]]) {
            seq.push_back(v);
            comp_of_node[v] = order[oi];
        }

    detail::PlanBuilder b(g, "galaxy");
    b.set_case("greedy");
    {
        std::string line = "component order:";
        for (int ci : order) line += " {" + detail::join(cert.comps[ci]) + "}";
        b.note(line);
    }
    b.note("base value is below the private bound: component centers see their whole component and "
           "no union of components hits the quota");

    std::vector<bool> linked(g.n, false);
    for (int z : seq) {
        if (linked[z]) continue;
        for (int w : seq) {
            if (linked[w] || comp_of_node[w] == comp_of_node[z]) continue;
            b.connect(z, w);
            linked[z] = linked[w] = true;
            b.note("greedy link " + std::to_string(z) + "-" + std::to_string(w));
            break;
        }
    }

    std::vector<int> unmatched;
    for (int v : seq)
        if (!linked[v]) unmatched.push_back(v);
    if (!unmatched.empty()) {
        b.set_case("greedy+repair");
        // two leftovers in different components would have paired with each
        // other, so the stuck nodes share a component; it cannot be the first
        // one, which is outnumbered by the rest
        const int stuck_ci = comp_of_node[unmatched[0]];
        for (int v : unmatched)
            if (comp_of_node[v] != stuck_ci)
                throw Error(Errc::certificate_violation,
                            "greedy pass stranded nodes in two different components");
        std::size_t stuck_pos = 0;
        while (order[stuck_pos] != stuck_ci) ++stuck_pos;
        if (stuck_pos == 0)
            throw Error(Errc::certificate_violation,
                        "greedy pass stranded a node in the largest component");
        const auto& prev = cert.comps[order[stuck_pos - 1]];
        const auto& stuck = cert.comps[stuck_ci];
        std::vector<int> targets;
        for (int t : prev) {
            bool touches_stuck = false;
            for (int v : stuck)
                if (b.has(t, v)) touches_stuck = true;
            if (!touches_stuck) targets.push_back(t);
        }
        if (targets.size() < unmatched.size())
            throw Error(Errc::premise_violated,
                        "not enough untouched nodes in the preceding component for the repair");
        std::sort(unmatched.begin(), unmatched.end());
        for (std::size_t t = 0; t < unmatched.size(); ++t) b.connect(unmatched[t], targets[t]);
        b.note("stuck-component repair: {" + detail::join(unmatched) + "} matched into unique "
               "nodes of the preceding component");
    }
    b.role("centers", cert.centers);
    return b.finish();
}

/// Cluster network (q disjoint p-cliques) with n/2 < k < n: adds rings across
/// clusters between receivers with the same within-cluster index.
inline ExtensionPlan extend_clusters(const Network& g, int k) {
    std::pair<int, int> qp;
    try {
        qp = recognize_cluster_network(g);
    } catch (const Error& e) {
        throw Error(Errc::not_cluster_network, e.what());
    }
    auto [q, p] = qp;
    if (2 * k <= g.n || k >= g.n)
        throw Error(Errc::quota_out_of_range, "need n/2 < k < n");
    auto comps = components(g);

    detail::PlanBuilder b(g, "clusters");
    b.set_case(q == 2 ? "two-clusters" : "rings");
    b.note("clusters q=" + std::to_string(q) + " p=" + std::to_string(p));
    b.note("base value is below the private bound: a cluster's members reveal the state to each "
           "other, so the persuaded count is a multiple of p and cannot equal k");
    for (int i = 0; i < p; ++i) {
        for (int j = 0; j + 1 < q; ++j) b.connect(comps[j][i], comps[j + 1][i]);
        if (q > 2) b.connect(comps[q - 1][i], comps[0][i]);
    }
    b.note("same-index receivers joined in rings across clusters");
    return b.finish();
}

// ---------------------------------------------------------------------------
// Value sweeps along extension chains.
// ---------------------------------------------------------------------------

struct SweepRow {
    std::string label;
    int edge_count = 0;
    Rational value_lower;
    Rational value_upper;
    bool certified = false;   // lower == upper with a certificate behind it
    std::string source;       // domination | public | oracle | construction
    bool non_monotone = false;  // reported value rose versus the previous row
};

/// Best certified/verified values for each network of an extension chain.
/// Consecutive networks must weakly include their predecessor. The reported
/// lower bound is always a genuine experiment value or a certified optimum;
/// the upper bound is the private bound unless something sharper is certified.
inline std::vector<SweepRow> sweep_values(const Instance& inst, const std::vector<Network>& chain,
                                          const std::vector<std::string>& labels = {},
                                          int oracle_cap = 10) {
    std::vector<SweepRow> rows;
    for (std::size_t t = 0; t < chain.size(); ++t) {
        const Network& g = chain[t];
        if (g.n != inst.n())
            throw Error(Errc::not_an_extension_chain, "networks must share the receiver set");
        if (t > 0 && !g.includes(chain[t - 1]))
            throw Error(Errc::not_an_extension_chain,
                        "step " + std::to_string(t) + " does not include its predecessor's edges");

        Instance here = inst.with_network(g);
        SweepRow row;
        row.label = t < labels.size() ? labels[t] : "step" + std::to_string(t);
        row.edge_count = g.edge_count();

        auto cert = certify_value_upper_attained(g, here);
        if (cert.certified) {
            row.value_lower = row.value_upper = cert.value;
            row.certified = true;
            row.source = "domination";
        } else if (neighborhood_classes(g).size() == 1) {
            // every receiver sees everything: merging collapses the problem to
            // one receiver, where the public split is optimal
            row.value_lower = row.value_upper = v_public(here);
            row.certified = true;
            row.source = "public";
        } else {
            row.value_upper = v_upper(here);
            // a star component bigger than the quota makes its center a dummy
            // player, so the private optimum with one receiver fewer binds
            for (const auto& comp : components(g))
                if (static_cast<int>(comp.size()) > here.k && star_center_of(g, comp) >= 0) {
                    Rational reduced =
                        Rational(g.n - 1 + here.k) / Rational(here.k) * here.prior_x;
                    row.value_upper = std::min(row.value_upper, reduced);
                }
            row.value_lower = v_public(here);
            row.source = "construction";
            if (g.n <= oracle_cap) {
                auto oracle = anchored_optimal(here, oracle_cap);
                if (oracle.lower_bound > row.value_lower) {
                    row.value_lower = oracle.lower_bound;
                    row.source = "oracle";
                }
            }
        }
        row.non_monotone = t > 0 && row.value_lower > rows.back().value_lower;
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace persuasion
