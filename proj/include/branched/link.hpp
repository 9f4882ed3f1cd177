#pragma once

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "branched/complex.hpp"
#include "branched/errors.hpp"
#include "branched/rational.hpp"

namespace branched {

/// The link of a vertex: one node per dart leaving the vertex, one edge per
/// corner of a face turning there. Encodes all local structure of the
/// complex; every reducibility and curvature test reads it.
struct Link {
    Vertex vertex = 0;
    std::vector<Dart> nodes;  // darts with origin = vertex, ascending
    struct Edge {
        int a = 0;  // node indices (local), a <= b except for loops which never occur
        int b = 0;
        Corner corner;
    };
    std::vector<Edge> edges;  // ordered by (corner.face, corner.position)

    int num_nodes() const { return static_cast<int>(nodes.size()); }
    int num_edges() const { return static_cast<int>(edges.size()); }

    int node_index(Dart d) const {
        const auto it = std::lower_bound(nodes.begin(), nodes.end(), d);
        return static_cast<int>(it - nodes.begin());
    }

    std::vector<int> degrees() const {
        std::vector<int> deg(nodes.size(), 0);
        for (const Edge& e : edges) {
            ++deg[static_cast<std::size_t>(e.a)];
            if (e.b != e.a)
                ++deg[static_cast<std::size_t>(e.b)];
            else
                ++deg[static_cast<std::size_t>(e.a)];  // loops count twice
        }
        return deg;
    }

    std::vector<std::vector<int>> adjacency() const {
        std::vector<std::vector<int>> adj(nodes.size());
        for (std::size_t i = 0; i < edges.size(); ++i) {
            adj[static_cast<std::size_t>(edges[i].a)].push_back(static_cast<int>(i));
            if (edges[i].b != edges[i].a) adj[static_cast<std::size_t>(edges[i].b)].push_back(static_cast<int>(i));
        }
        return adj;
    }

    int other_end(int edge_index, int node) const {
        const Edge& e = edges[static_cast<std::size_t>(edge_index)];
        return e.a == node ? e.b : e.a;
    }
};

/// The link of vertex v, with deterministic node and edge ordering.
inline Link build_link(const BranchedTwoComplex& x, Vertex v) {
    Link l;
    l.vertex = v;
    for (Dart d = 0; d < x.skeleton.num_darts(); ++d)
        if (x.skeleton.origin_of(d) == v) l.nodes.push_back(d);
    for (FaceId f = 0; f < x.num_faces(); ++f) {
        const CyclicWord& w = x.faces[static_cast<std::size_t>(f)];
        for (int i = 0; i < w.size(); ++i) {
            if (x.skeleton.terminus_of(w.at(i)) != v) continue;
            // The corner turns from dart i into dart i+1; the two half-edges
            // at v are the reverse of dart i and dart i+1 itself.
            const Dart na = x.skeleton.reverse(w.at(i));
            const Dart nb = w.at(i + 1);
            Link::Edge e;
            e.a = l.node_index(na);
            e.b = l.node_index(nb);
            if (e.a > e.b) std::swap(e.a, e.b);
            e.corner = Corner{f, i};
            l.edges.push_back(e);
        }
    }
    return l;
}

inline std::vector<Link> all_links(const BranchedTwoComplex& x) {
    std::vector<Link> out;
    out.reserve(static_cast<std::size_t>(x.skeleton.num_vertices));
    for (Vertex v = 0; v < x.skeleton.num_vertices; ++v) out.push_back(build_link(x, v));
    return out;
}

/// Connected components of the link as sorted lists of node indices, ordered
/// by smallest member. Isolated nodes are singleton components.
inline std::vector<std::vector<int>> components(const Link& l) {
    const auto adj = l.adjacency();
    std::vector<int> comp(l.nodes.size(), -1);
    int nc = 0;
    for (int s = 0; s < l.num_nodes(); ++s) {
        if (comp[static_cast<std::size_t>(s)] != -1) continue;
        std::vector<int> stack{s};
        comp[static_cast<std::size_t>(s)] = nc;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (int ei : adj[static_cast<std::size_t>(u)]) {
                const int w = l.other_end(ei, u);
                if (comp[static_cast<std::size_t>(w)] == -1) {
                    comp[static_cast<std::size_t>(w)] = nc;
                    stack.push_back(w);
                }
            }
        }
        ++nc;
    }
    std::vector<std::vector<int>> out(static_cast<std::size_t>(nc));
    for (int u = 0; u < l.num_nodes(); ++u) out[static_cast<std::size_t>(comp[static_cast<std::size_t>(u)])].push_back(u);
    return out;
}

/// Shortest cycle length: loops count 1, parallel pairs count 2; nullopt for
/// forests.
inline std::optional<int> girth(const Link& l) {
    std::optional<int> best;
    const auto adj = l.adjacency();
    for (std::size_t banned = 0; banned < l.edges.size(); ++banned) {
        const Link::Edge& e = l.edges[banned];
        if (e.a == e.b) {
            if (!best || *best > 1) best = 1;
            continue;
        }
        // BFS from e.a to e.b avoiding the banned edge.
        std::vector<int> dist(l.nodes.size(), -1);
        std::vector<int> queue{e.a};
        dist[static_cast<std::size_t>(e.a)] = 0;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            const int u = queue[qi];
            for (int ei : adj[static_cast<std::size_t>(u)]) {
                if (ei == static_cast<int>(banned)) continue;
                const int w = l.other_end(ei, u);
                if (dist[static_cast<std::size_t>(w)] == -1) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                    queue.push_back(w);
                }
            }
        }
        if (dist[static_cast<std::size_t>(e.b)] != -1) {
            const int len = dist[static_cast<std::size_t>(e.b)] + 1;
            if (!best || len < *best) best = len;
        }
    }
    return best;
}

struct SystoleResult {
    PiRational length;
    std::vector<int> cycle_edges;  // edge indices of a realizing cycle
};

/// Minimal total length over nontrivial cycles under the given edge lengths;
/// nullopt for forests. Exact: per-edge Dijkstra on rationals.
inline std::optional<SystoleResult> systole(const Link& l, const std::vector<PiRational>& lengths) {
    if (lengths.size() != l.edges.size()) throw Error("systole: length table size mismatch");
    for (const PiRational& w : lengths)
        if (w.coef < 0) throw NegativeLengthError();
    std::optional<SystoleResult> best;
    const auto adj = l.adjacency();
    for (std::size_t banned = 0; banned < l.edges.size(); ++banned) {
        const Link::Edge& e = l.edges[banned];
        if (e.a == e.b) {
            if (!best || lengths[banned] < best->length)
                best = SystoleResult{lengths[banned], {static_cast<int>(banned)}};
            continue;
        }
        // Dijkstra from e.a to e.b avoiding the banned edge.
        const std::size_t n = l.nodes.size();
        std::vector<std::optional<PiRational>> dist(n);
        std::vector<int> via_edge(n, -1);
        std::vector<bool> done(n, false);
        dist[static_cast<std::size_t>(e.a)] = PiRational(Rational(0));
        while (true) {
            int u = -1;
            for (std::size_t i = 0; i < n; ++i)
                if (!done[i] && dist[i] && (u == -1 || *dist[i] < *dist[static_cast<std::size_t>(u)]))
                    u = static_cast<int>(i);
            if (u == -1) break;
            done[static_cast<std::size_t>(u)] = true;
            for (int ei : adj[static_cast<std::size_t>(u)]) {
                if (ei == static_cast<int>(banned)) continue;
                const int w = l.other_end(ei, u);
                const PiRational cand = *dist[static_cast<std::size_t>(u)] + lengths[static_cast<std::size_t>(ei)];
                if (!dist[static_cast<std::size_t>(w)] || cand < *dist[static_cast<std::size_t>(w)]) {
                    dist[static_cast<std::size_t>(w)] = cand;
                    via_edge[static_cast<std::size_t>(w)] = ei;
                }
            }
        }
        if (dist[static_cast<std::size_t>(e.b)]) {
            const PiRational len = *dist[static_cast<std::size_t>(e.b)] + lengths[banned];
            if (!best || len < best->length) {
                std::vector<int> cyc{static_cast<int>(banned)};
                int u = e.b;
                while (u != e.a) {
                    const int ei = via_edge[static_cast<std::size_t>(u)];
                    cyc.push_back(ei);
                    u = l.other_end(ei, u);
                }
                best = SystoleResult{len, std::move(cyc)};
            }
        }
    }
    return best;
}

/// True iff the link is a nonempty connected graph in which every node has
/// degree exactly 2.
inline bool is_circle(const Link& l) {
    if (l.num_nodes() == 0) return false;
    for (int d : l.degrees())
        if (d != 2) return false;
    return components(l).size() == 1;
}

/// Smallest articulation node, if any: a node whose removal disconnects its
/// own component into at least two nonempty pieces.
inline std::optional<int> has_cut_vertex(const Link& l) {
    const auto comps = components(l);
    const auto adj = l.adjacency();
    for (int cand = 0; cand < l.num_nodes(); ++cand) {
        const auto comp_of = [&](int node) -> const std::vector<int>* {
            for (const auto& c : comps)
                if (std::binary_search(c.begin(), c.end(), node)) return &c;
            return nullptr;
        };
        const std::vector<int>& comp = *comp_of(cand);
        if (comp.size() < 3) continue;
        // Count components of comp minus cand.
        std::map<int, bool> seen;
        for (int u : comp)
            if (u != cand) seen[u] = false;
        int pieces = 0;
        for (auto& [start, visited] : seen) {
            if (visited) continue;
            ++pieces;
            std::vector<int> stack{start};
            seen[start] = true;
            while (!stack.empty()) {
                const int u = stack.back();
                stack.pop_back();
                for (int ei : adj[static_cast<std::size_t>(u)]) {
                    const int w = l.other_end(ei, u);
                    if (w == cand) continue;
                    auto it = seen.find(w);
                    if (it != seen.end() && !it->second) {
                        it->second = true;
                        stack.push_back(w);
                    }
                }
            }
        }
        if (pieces >= 2) return cand;
    }
    return std::nullopt;
}

/// Planarity of the underlying multigraph. Loops and parallel edges are
/// dropped first; they never affect planarity.
inline bool is_planar(const Link& l) {
    using BoostGraph =
        boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
    BoostGraph g(static_cast<std::size_t>(l.num_nodes()));
    std::set<std::pair<int, int>> used;
    for (const Link::Edge& e : l.edges) {
        if (e.a == e.b) continue;
        if (used.insert({e.a, e.b}).second) boost::add_edge(static_cast<std::size_t>(e.a), static_cast<std::size_t>(e.b), g);
    }
    return boost::boyer_myrvold_planarity_test(g);
}

}  // namespace branched
