#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "branched/complex.hpp"
#include "branched/errors.hpp"
#include "branched/free_word.hpp"

namespace branched {

/// Algebraic shadow of a connected complex: the free group of the 1-skeleton
/// together with the area-weighted conjugacy classes of the face words.
struct GroupPair {
    int rank = 0;
    struct Class {
        FreeWord word;  // nonempty, freely and cyclically reduced
        Area area = 1;
        bool operator==(const Class&) const = default;
    };
    std::vector<Class> classes;

    bool operator==(const GroupPair&) const = default;
};

namespace detail {

/// Generator labels for non-tree edges: dart -> signed generator (0 when the
/// dart lies in the spanning forest). Basis edges are numbered in dart order.
inline std::pair<std::vector<int>, int> basis_labels(const SerreGraph& g,
                                                     const std::vector<bool>& in_tree) {
    std::vector<int> label(static_cast<std::size_t>(g.num_darts()), 0);
    int next = 1;
    for (Dart d = 0; d < g.num_darts(); ++d) {
        if (in_tree[static_cast<std::size_t>(d)] || label[static_cast<std::size_t>(d)] != 0) continue;
        label[static_cast<std::size_t>(d)] = next;
        label[static_cast<std::size_t>(g.reverse(d))] = -next;
        ++next;
    }
    return {label, next - 1};
}

}  // namespace detail

/// The associated group pair, computed via a spanning tree of the skeleton
/// (injectable for the invariance tests: `tree` must be a spanning forest
/// dart marking as produced by SerreGraph::spanning_forest).
inline GroupPair group_pair(const BranchedTwoComplex& x,
                            std::optional<std::vector<bool>> tree = std::nullopt) {
    if (x.skeleton.num_vertices == 0) throw EmptySkeletonError();
    if (!x.skeleton.connected()) throw DisconnectedError("group_pair");
    const std::vector<bool> in_tree = tree ? std::move(*tree) : x.skeleton.spanning_forest();
    const auto [label, rank] = detail::basis_labels(x.skeleton, in_tree);
    GroupPair p;
    p.rank = rank;
    for (FaceId f = 0; f < x.num_faces(); ++f) {
        FreeWord w;
        for (Dart d : x.faces[static_cast<std::size_t>(f)].darts) {
            const int l = label[static_cast<std::size_t>(d)];
            if (l != 0) w.push_back(l);
        }
        w = cyclically_reduce(w);
        if (w.empty())
            throw Error("group_pair: face " + std::to_string(f) +
                        " collapsed to the empty word (invalid complex)");
        p.classes.push_back(GroupPair::Class{std::move(w), x.area[static_cast<std::size_t>(f)]});
    }
    return p;
}

struct ConciseWitness {
    enum Kind { ProperPower, SharedRoot } kind = ProperPower;
    FaceId face_a = 0;
    FaceId face_b = 0;  // only for SharedRoot
    std::string describe() const {
        if (kind == ProperPower) return "face " + std::to_string(face_a) + ": attaching word is a proper power";
        return "faces " + std::to_string(face_a) + "," + std::to_string(face_b) +
               " share a primitive root up to inversion";
    }
};

/// A complex is concise unless some attaching word is a proper power or two
/// faces have conjugate primitive roots up to inversion (the malnormal
/// relator-family reading; "homotopic" alone would miss inversion). Works per
/// component; faces in different components never conflict.
inline std::pair<bool, std::optional<ConciseWitness>> is_concise(const BranchedTwoComplex& x) {
    for (const Subcomplex& sub : connected_components_of_complex(x)) {
        if (sub.complex.num_faces() == 0) continue;
        const GroupPair p = group_pair(sub.complex);
        std::vector<FreeWord> roots;
        for (std::size_t f = 0; f < p.classes.size(); ++f) {
            const FreeWord& w = p.classes[f].word;
            if (is_proper_power(w))
                return {false, ConciseWitness{ConciseWitness::ProperPower, sub.face_to_parent[f], 0}};
            roots.push_back(w);
        }
        for (std::size_t i = 0; i < roots.size(); ++i)
            for (std::size_t j = i + 1; j < roots.size(); ++j)
                if (cyclic_equal(roots[i], roots[j], /*allow_inversion=*/true))
                    return {false, ConciseWitness{ConciseWitness::SharedRoot, sub.face_to_parent[i],
                                                  sub.face_to_parent[j]}};
    }
    return {true, std::nullopt};
}

}  // namespace branched
