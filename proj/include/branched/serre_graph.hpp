#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

namespace branched {

using Vertex = int;
using Dart = int;

/// A graph in Serre's formalism: darts (directed edges) paired by a
/// fixed-point-free involution. An edge is a dart pair {d, involution(d)}.
struct SerreGraph {
    int num_vertices = 0;
    std::vector<Dart> involution;  // dart -> reversed dart
    std::vector<Vertex> origin;    // dart -> start vertex

    int num_darts() const { return static_cast<int>(involution.size()); }
    int num_edges() const { return num_darts() / 2; }

    Dart reverse(Dart d) const { return involution[static_cast<std::size_t>(d)]; }
    Vertex origin_of(Dart d) const { return origin[static_cast<std::size_t>(d)]; }
    Vertex terminus_of(Dart d) const { return origin[static_cast<std::size_t>(reverse(d))]; }

    /// Appends an edge from u to v; returns the dart u->v (its reverse is the
    /// next index).
    Dart add_edge(Vertex u, Vertex v) {
        const Dart d = num_darts();
        involution.push_back(d + 1);
        involution.push_back(d);
        origin.push_back(u);
        origin.push_back(v);
        return d;
    }

    std::vector<std::string> diagnostics() const {
        std::vector<std::string> out;
        const int nd = num_darts();
        if (nd % 2 != 0) out.push_back("odd number of darts");
        for (Dart d = 0; d < nd; ++d) {
            if (involution[d] < 0 || involution[d] >= nd) {
                out.push_back("dart " + std::to_string(d) + ": involution out of range");
                continue;
            }
            if (involution[d] == d) out.push_back("dart " + std::to_string(d) + ": involution has a fixed point");
            if (involution[involution[d]] != d)
                out.push_back("dart " + std::to_string(d) + ": involution is not involutive");
            if (origin[d] < 0 || origin[d] >= num_vertices)
                out.push_back("dart " + std::to_string(d) + ": origin out of range");
        }
        return out;
    }

    bool operator==(const SerreGraph&) const = default;

    /// chi of the graph: #V - #E.
    int euler_characteristic() const { return num_vertices - num_edges(); }

    std::vector<std::vector<Dart>> darts_at() const {
        std::vector<std::vector<Dart>> at(static_cast<std::size_t>(num_vertices));
        for (Dart d = 0; d < num_darts(); ++d) at[static_cast<std::size_t>(origin[d])].push_back(d);
        return at;
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    std::vector<std::vector<Vertex>> components() const {
        std::vector<int> comp(static_cast<std::size_t>(num_vertices), -1);
        const auto at = darts_at();
        int nc = 0;
        for (Vertex s = 0; s < num_vertices; ++s) {
            if (comp[s] != -1) continue;
            std::vector<Vertex> stack{s};
            comp[s] = nc;
            while (!stack.empty()) {
                const Vertex v = stack.back();
                stack.pop_back();
                for (Dart d : at[static_cast<std::size_t>(v)]) {
                    const Vertex w = terminus_of(d);
                    if (comp[w] == -1) {
                        comp[w] = nc;
                        stack.push_back(w);
                    }
                }
            }
            ++nc;
        }
        std::vector<std::vector<Vertex>> out(static_cast<std::size_t>(nc));
        for (Vertex v = 0; v < num_vertices; ++v) out[static_cast<std::size_t>(comp[v])].push_back(v);
        return out;
    }

    bool connected() const { return num_vertices <= 1 || components().size() == 1; }

    /// Darts of a spanning forest, rooted at the smallest vertex of each
    /// component; deterministic (BFS in dart order). A dart and its reverse
    /// are either both in or both out.
    std::vector<bool> spanning_forest() const {
        std::vector<bool> in_tree(static_cast<std::size_t>(num_darts()), false);
        std::vector<bool> seen(static_cast<std::size_t>(num_vertices), false);
        const auto at = darts_at();
        for (Vertex s = 0; s < num_vertices; ++s) {
            if (seen[s]) continue;
            seen[s] = true;
            std::vector<Vertex> queue{s};
            for (std::size_t qi = 0; qi < queue.size(); ++qi) {
                const Vertex v = queue[qi];
                for (Dart d : at[static_cast<std::size_t>(v)]) {
                    const Vertex w = terminus_of(d);
                    if (!seen[w]) {
                        seen[w] = true;
                        in_tree[static_cast<std::size_t>(d)] = true;
                        in_tree[static_cast<std::size_t>(reverse(d))] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        return in_tree;
    }
};

/// Rose with `petals` loops at a single vertex; dart 2i is petal i, dart
/// 2i+1 its reverse.
inline SerreGraph rose_graph(int petals) {
    SerreGraph g;
    g.num_vertices = 1;
    for (int i = 0; i < petals; ++i) g.add_edge(0, 0);
    return g;
}

}  // namespace branched
