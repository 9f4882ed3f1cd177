#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "branched/errors.hpp"
#include "branched/free_word.hpp"
#include "branched/rational.hpp"
#include "branched/serre_graph.hpp"

namespace branched {

using FaceId = int;

/// Closed immersed edge path, stored as a cyclic dart sequence. "Immersed"
/// means no backtracking, including across the wrap-around.
struct CyclicWord {
    std::vector<Dart> darts;

    int size() const { return static_cast<int>(darts.size()); }
    Dart at(int i) const {
        const int n = size();
        return darts[static_cast<std::size_t>(((i % n) + n) % n)];
    }
    bool operator==(const CyclicWord&) const = default;
};

/// A transition between consecutive darts of a face word. Corner (f, i) turns
/// from dart i to dart i+1 of face f and lives at the terminus of dart i.
struct Corner {
    FaceId face = 0;
    int position = 0;
    auto operator<=>(const Corner&) const = default;
};

struct BranchedTwoComplex {
    SerreGraph skeleton;
    std::vector<CyclicWord> faces;
    std::vector<Area> area;  // per face, positive

    int num_faces() const { return static_cast<int>(faces.size()); }

    Area total_area() const {
        Area s = 0;
        for (Area a : area) s += a;
        return s;
    }

    Vertex corner_vertex(const Corner& c) const {
        return skeleton.terminus_of(faces[static_cast<std::size_t>(c.face)].at(c.position));
    }

    bool operator==(const BranchedTwoComplex&) const = default;
};

/// Empty list iff all type invariants hold; otherwise one diagnostic per
/// violation.
inline std::vector<std::string> validate(const BranchedTwoComplex& x) {
    std::vector<std::string> out = x.skeleton.diagnostics();
    if (!out.empty()) return out;  // face checks assume a sane skeleton
    if (x.area.size() != x.faces.size()) {
        out.push_back("area table size differs from face count");
        return out;
    }
    for (FaceId f = 0; f < x.num_faces(); ++f) {
        const CyclicWord& w = x.faces[static_cast<std::size_t>(f)];
        const std::string tag = "face " + std::to_string(f) + ": ";
        if (w.darts.empty()) {
            out.push_back(tag + "empty word");
            continue;
        }
        const int n = w.size();
        bool in_range = true;
        for (Dart d : w.darts)
            if (d < 0 || d >= x.skeleton.num_darts()) {
                out.push_back(tag + "dart out of range");
                in_range = false;
                break;
            }
        if (!in_range) continue;
        for (int i = 0; i < n; ++i) {
            if (x.skeleton.terminus_of(w.at(i)) != x.skeleton.origin_of(w.at(i + 1)))
                out.push_back(tag + "not closed at position " + std::to_string(i));
            if (w.at(i + 1) == x.skeleton.reverse(w.at(i)))
                out.push_back(tag + "backtracking at position " + std::to_string(i));
        }
        if (x.area[static_cast<std::size_t>(f)] <= 0) out.push_back(tag + "nonpositive area");
    }
    return out;
}

inline bool is_valid(const BranchedTwoComplex& x) { return validate(x).empty(); }

inline int chi_skeleton(const BranchedTwoComplex& x) { return x.skeleton.euler_characteristic(); }

inline int euler_characteristic(const BranchedTwoComplex& x) {
    return chi_skeleton(x) + x.num_faces();
}

/// tau(X) = Area(X) + chi of the 1-skeleton. Equals chi(X) when every face
/// has area 1.
inline Area total_curvature(const BranchedTwoComplex& x) {
    return x.total_area() + chi_skeleton(x);
}

/// kappa(X) = tau(X) / Area(X), exact.
inline Rational average_curvature(const BranchedTwoComplex& x) {
    const Area a = x.total_area();
    if (a <= 0) throw ZeroAreaError();
    return Rational(total_curvature(x), a);
}

inline int deficiency(const BranchedTwoComplex& x) { return 1 - euler_characteristic(x); }

/// All corners of X in (face, position) order.
inline std::vector<Corner> all_corners(const BranchedTwoComplex& x) {
    std::vector<Corner> out;
    for (FaceId f = 0; f < x.num_faces(); ++f)
        for (int i = 0; i < x.faces[static_cast<std::size_t>(f)].size(); ++i)
            out.push_back(Corner{f, i});
    return out;
}

/// Times each edge (unordered dart pair) appears across all face words.
inline std::vector<int> edge_hit_counts(const BranchedTwoComplex& x) {
    std::vector<int> hits(static_cast<std::size_t>(x.skeleton.num_darts()), 0);
    for (const CyclicWord& w : x.faces)
        for (Dart d : w.darts) {
            ++hits[static_cast<std::size_t>(d)];
        }
    std::vector<int> per_edge(static_cast<std::size_t>(x.skeleton.num_darts()), 0);
    for (Dart d = 0; d < x.skeleton.num_darts(); ++d)
        per_edge[static_cast<std::size_t>(d)] =
            hits[static_cast<std::size_t>(d)] + hits[static_cast<std::size_t>(x.skeleton.reverse(d))];
    return per_edge;  // indexed by dart; both darts of an edge carry the same count
}

/// A component of a complex together with the index maps back into its parent.
struct Subcomplex {
    BranchedTwoComplex complex;
    std::vector<Vertex> vertex_to_parent;
    std::vector<Dart> dart_to_parent;
    std::vector<FaceId> face_to_parent;
};

/// Splits X into its connected components (a face belongs to the component of
/// its darts). Deterministic: components ordered by smallest vertex.
inline std::vector<Subcomplex> connected_components_of_complex(const BranchedTwoComplex& x) {
    const auto comps = x.skeleton.components();
    std::vector<int> comp_of(static_cast<std::size_t>(x.skeleton.num_vertices), 0);
    for (std::size_t c = 0; c < comps.size(); ++c)
        for (Vertex v : comps[c]) comp_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
    std::vector<Subcomplex> out(comps.size());
    std::vector<int> new_vertex(static_cast<std::size_t>(x.skeleton.num_vertices), -1);
    std::vector<int> new_dart(static_cast<std::size_t>(x.skeleton.num_darts()), -1);
    for (std::size_t c = 0; c < comps.size(); ++c) {
        Subcomplex& s = out[c];
        for (Vertex v : comps[c]) {
            new_vertex[static_cast<std::size_t>(v)] = s.complex.skeleton.num_vertices++;
            s.vertex_to_parent.push_back(v);
        }
    }
    for (Dart d = 0; d < x.skeleton.num_darts(); ++d) {
        const Dart rd = x.skeleton.reverse(d);
        if (rd < d) continue;
        Subcomplex& s = out[static_cast<std::size_t>(comp_of[static_cast<std::size_t>(x.skeleton.origin_of(d))])];
        new_dart[static_cast<std::size_t>(d)] = s.complex.skeleton.num_darts();
        new_dart[static_cast<std::size_t>(rd)] = s.complex.skeleton.num_darts() + 1;
        s.complex.skeleton.add_edge(new_vertex[static_cast<std::size_t>(x.skeleton.origin_of(d))],
                                    new_vertex[static_cast<std::size_t>(x.skeleton.terminus_of(d))]);
        s.dart_to_parent.push_back(d);
        s.dart_to_parent.push_back(rd);
    }
    for (FaceId f = 0; f < x.num_faces(); ++f) {
        const CyclicWord& w = x.faces[static_cast<std::size_t>(f)];
        Subcomplex& s =
            out[static_cast<std::size_t>(comp_of[static_cast<std::size_t>(x.skeleton.origin_of(w.darts[0]))])];
        CyclicWord nw;
        for (Dart d : w.darts) nw.darts.push_back(new_dart[static_cast<std::size_t>(d)]);
        s.complex.faces.push_back(std::move(nw));
        s.complex.area.push_back(x.area[static_cast<std::size_t>(f)]);
        s.face_to_parent.push_back(f);
    }
    return out;
}

/// One-vertex complex of a presentation: one edge per generator, one face per
/// relator. Words must be nonempty and cyclically reduced.
inline BranchedTwoComplex presentation_complex(int rank, const std::vector<FreeWord>& relators,
                                               const std::vector<Area>& areas = {}) {
    BranchedTwoComplex x;
    x.skeleton = rose_graph(rank);
    for (std::size_t i = 0; i < relators.size(); ++i) {
        CyclicWord w;
        for (int letter : relators[i]) {
            const int g = std::abs(letter) - 1;
            w.darts.push_back(letter > 0 ? 2 * g : 2 * g + 1);
        }
        x.faces.push_back(std::move(w));
        x.area.push_back(areas.empty() ? 1 : areas[i]);
    }
    return x;
}

/// Subdivides the edge of dart d with a new valence-2 vertex, rewriting every
/// face word through it. Group-theoretic invariants are unchanged.
inline BranchedTwoComplex subdivide_edge(const BranchedTwoComplex& x, Dart d) {
    BranchedTwoComplex y = x;
    const Dart rd = x.skeleton.reverse(d);
    const Vertex mid = y.skeleton.num_vertices++;
    // Old edge {d, rd} now runs origin(d) -> mid; a fresh edge runs mid ->
    // terminus(d).
    const Vertex old_terminus = x.skeleton.terminus_of(d);
    const Dart fresh = y.skeleton.add_edge(mid, old_terminus);
    y.skeleton.origin[static_cast<std::size_t>(rd)] = mid;
    for (CyclicWord& w : y.faces) {
        std::vector<Dart> darts;
        darts.reserve(w.darts.size() * 2);
        for (Dart wd : w.darts) {
            if (wd == d) {
                darts.push_back(d);
                darts.push_back(fresh);
            } else if (wd == rd) {
                darts.push_back(y.skeleton.reverse(fresh));
                darts.push_back(rd);
            } else {
                darts.push_back(wd);
            }
        }
        w.darts = std::move(darts);
    }
    return y;
}

/// Subdivides every edge of x once.
inline BranchedTwoComplex subdivide_all_edges(const BranchedTwoComplex& x) {
    BranchedTwoComplex y = x;
    const int nd = x.skeleton.num_darts();
    for (Dart d = 0; d < nd; ++d) {
        // Dart indices below nd keep their involution under subdivide_edge,
        // so this iterates over exactly the original edges.
        if (x.skeleton.reverse(d) < d) continue;
        y = subdivide_edge(y, d);
    }
    return y;
}

}  // namespace branched
