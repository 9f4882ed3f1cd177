#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "branched/errors.hpp"
#include "branched/morphism.hpp"

namespace branched {

/// Canonical encoding of a labelled complex (a complex together with a
/// morphism to a fixed target), equal for two inputs iff they are isomorphic
/// over the target. Requires the source to be folded over the target, which
/// makes the breadth-first labelling deterministic; witness enumeration and
/// fold outputs satisfy this.
using CanonicalForm = std::vector<long long>;

namespace detail {

inline CanonicalForm component_encoding_from(const Morphism& phi, const std::vector<Vertex>& comp,
                                             Vertex root) {
    const BranchedTwoComplex& y = phi.source;
    const auto at = y.skeleton.darts_at();
    std::vector<int> new_vertex(static_cast<std::size_t>(y.skeleton.num_vertices), -1);
    std::vector<Vertex> order;
    new_vertex[static_cast<std::size_t>(root)] = 0;
    order.push_back(root);
    for (std::size_t qi = 0; qi < order.size(); ++qi) {
        const Vertex u = order[qi];
        std::vector<Dart> ds = at[static_cast<std::size_t>(u)];
        std::sort(ds.begin(), ds.end(), [&](Dart a, Dart b) {
            return phi.dart_map[static_cast<std::size_t>(a)] < phi.dart_map[static_cast<std::size_t>(b)];
        });
        for (Dart d : ds) {
            const Vertex w = y.skeleton.terminus_of(d);
            if (new_vertex[static_cast<std::size_t>(w)] == -1) {
                new_vertex[static_cast<std::size_t>(w)] = static_cast<int>(order.size());
                order.push_back(w);
            }
        }
    }
    // New dart ids: sorted by (new origin, image dart); unique because the
    // source is folded.
    std::vector<Dart> darts_in_comp;
    for (Vertex u : comp)
        for (Dart d : at[static_cast<std::size_t>(u)]) darts_in_comp.push_back(d);
    std::sort(darts_in_comp.begin(), darts_in_comp.end(), [&](Dart a, Dart b) {
        const auto ka = std::make_pair(new_vertex[static_cast<std::size_t>(y.skeleton.origin_of(a))],
                                       phi.dart_map[static_cast<std::size_t>(a)]);
        const auto kb = std::make_pair(new_vertex[static_cast<std::size_t>(y.skeleton.origin_of(b))],
                                       phi.dart_map[static_cast<std::size_t>(b)]);
        return ka < kb;
    });
    std::vector<int> new_dart(static_cast<std::size_t>(y.skeleton.num_darts()), -1);
    for (std::size_t i = 0; i < darts_in_comp.size(); ++i)
        new_dart[static_cast<std::size_t>(darts_in_comp[i])] = static_cast<int>(i);

    CanonicalForm enc;
    enc.push_back(static_cast<long long>(comp.size()));
    enc.push_back(static_cast<long long>(darts_in_comp.size()));
    for (Vertex u : order) enc.push_back(phi.vertex_map[static_cast<std::size_t>(u)]);
    for (Dart d : darts_in_comp) {
        enc.push_back(new_vertex[static_cast<std::size_t>(y.skeleton.origin_of(d))]);
        enc.push_back(phi.dart_map[static_cast<std::size_t>(d)]);
        enc.push_back(new_dart[static_cast<std::size_t>(y.skeleton.reverse(d))]);
    }
    // Faces attached inside this component, re-encoded and sorted.
    std::vector<CanonicalForm> faces;
    std::vector<bool> in_comp(static_cast<std::size_t>(y.skeleton.num_vertices), false);
    for (Vertex u : comp) in_comp[static_cast<std::size_t>(u)] = true;
    for (FaceId f = 0; f < y.num_faces(); ++f) {
        const CyclicWord& w = y.faces[static_cast<std::size_t>(f)];
        if (!in_comp[static_cast<std::size_t>(y.skeleton.origin_of(w.darts[0]))]) continue;
        std::vector<int> word;
        for (Dart d : w.darts) word.push_back(new_dart[static_cast<std::size_t>(d)]);
        word = min_rotation(word);
        CanonicalForm fe;
        fe.push_back(phi.face_map[static_cast<std::size_t>(f)]);
        fe.push_back(static_cast<long long>(phi.multiplicity[static_cast<std::size_t>(f)]));
        fe.push_back(static_cast<long long>(y.area[static_cast<std::size_t>(f)]));
        for (int t : word) fe.push_back(t);
        faces.push_back(std::move(fe));
    }
    std::sort(faces.begin(), faces.end());
    enc.push_back(static_cast<long long>(faces.size()));
    for (const auto& fe : faces) {
        enc.push_back(static_cast<long long>(fe.size()));
        enc.insert(enc.end(), fe.begin(), fe.end());
    }
    return enc;
}

}  // namespace detail

inline CanonicalForm canonical_form_over_target(const Morphism& phi) {
    const BranchedTwoComplex& y = phi.source;
    // Foldedness precondition.
    std::set<std::pair<Vertex, Dart>> seen;
    for (Dart d = 0; d < y.skeleton.num_darts(); ++d)
        if (!seen.insert({y.skeleton.origin_of(d), phi.dart_map[static_cast<std::size_t>(d)]}).second)
            throw Error("canonical_form_over_target: source is not folded over the target");
    std::vector<CanonicalForm> comps;
    for (const auto& comp : y.skeleton.components()) {
        std::optional<CanonicalForm> best;
        for (Vertex r : comp) {
            CanonicalForm cand = detail::component_encoding_from(phi, comp, r);
            if (!best || cand < *best) best = std::move(cand);
        }
        comps.push_back(std::move(*best));
    }
    std::sort(comps.begin(), comps.end());
    CanonicalForm out;
    out.push_back(static_cast<long long>(comps.size()));
    for (const auto& c : comps) {
        out.push_back(static_cast<long long>(c.size()));
        out.insert(out.end(), c.begin(), c.end());
    }
    return out;
}

/// Brute-force combinatorial isomorphism test (orientation of faces
/// preserved, words matched up to rotation). Intended for small fixtures.
inline bool are_isomorphic(const BranchedTwoComplex& a, const BranchedTwoComplex& b) {
    if (a.skeleton.num_vertices != b.skeleton.num_vertices) return false;
    if (a.skeleton.num_darts() != b.skeleton.num_darts()) return false;
    if (a.num_faces() != b.num_faces()) return false;
    const int nd = a.skeleton.num_darts();
    std::vector<int> dart_map(static_cast<std::size_t>(nd), -1);
    std::vector<int> vertex_map(static_cast<std::size_t>(a.skeleton.num_vertices), -1);
    std::vector<bool> used_dart(static_cast<std::size_t>(nd), false);
    std::vector<int> vertex_used(static_cast<std::size_t>(b.skeleton.num_vertices), 0);

    const auto faces_match = [&]() {
        std::vector<std::vector<int>> awords, bwords;
        for (FaceId f = 0; f < a.num_faces(); ++f) {
            std::vector<int> w;
            for (Dart d : a.faces[static_cast<std::size_t>(f)].darts) w.push_back(dart_map[static_cast<std::size_t>(d)]);
            w = min_rotation(w);
            w.push_back(static_cast<int>(a.area[static_cast<std::size_t>(f)]));
            awords.push_back(std::move(w));
        }
        for (FaceId f = 0; f < b.num_faces(); ++f) {
            std::vector<int> w(b.faces[static_cast<std::size_t>(f)].darts.begin(),
                               b.faces[static_cast<std::size_t>(f)].darts.end());
            w = min_rotation(w);
            w.push_back(static_cast<int>(b.area[static_cast<std::size_t>(f)]));
            bwords.push_back(std::move(w));
        }
        std::sort(awords.begin(), awords.end());
        std::sort(bwords.begin(), bwords.end());
        return awords == bwords;
    };

    const std::function<bool(Dart)> extend = [&](Dart d) -> bool {
        while (d < nd && dart_map[static_cast<std::size_t>(d)] != -1) ++d;
        if (d == nd) return faces_match();
        const Vertex u = a.skeleton.origin_of(d);
        const Vertex v = a.skeleton.terminus_of(d);
        for (Dart e = 0; e < nd; ++e) {
            if (used_dart[static_cast<std::size_t>(e)]) continue;
            const Vertex bu = b.skeleton.origin_of(e);
            const Vertex bv = b.skeleton.terminus_of(e);
            if (vertex_map[static_cast<std::size_t>(u)] != -1 && vertex_map[static_cast<std::size_t>(u)] != bu) continue;
            if (vertex_map[static_cast<std::size_t>(v)] != -1 && vertex_map[static_cast<std::size_t>(v)] != bv) continue;
            const bool set_u = vertex_map[static_cast<std::size_t>(u)] == -1;
            if (set_u && vertex_used[static_cast<std::size_t>(bu)]) continue;
            if (set_u) {
                vertex_map[static_cast<std::size_t>(u)] = bu;
                ++vertex_used[static_cast<std::size_t>(bu)];
            }
            const bool set_v = vertex_map[static_cast<std::size_t>(v)] == -1;
            bool v_ok = true;
            if (set_v) {
                if (vertex_used[static_cast<std::size_t>(bv)])
                    v_ok = false;
                else {
                    vertex_map[static_cast<std::size_t>(v)] = bv;
                    ++vertex_used[static_cast<std::size_t>(bv)];
                }
            }
            if (v_ok) {
                dart_map[static_cast<std::size_t>(d)] = e;
                dart_map[static_cast<std::size_t>(a.skeleton.reverse(d))] = b.skeleton.reverse(e);
                used_dart[static_cast<std::size_t>(e)] = true;
                used_dart[static_cast<std::size_t>(b.skeleton.reverse(e))] = true;
                if (extend(d + 1)) return true;
                dart_map[static_cast<std::size_t>(d)] = -1;
                dart_map[static_cast<std::size_t>(a.skeleton.reverse(d))] = -1;
                used_dart[static_cast<std::size_t>(e)] = false;
                used_dart[static_cast<std::size_t>(b.skeleton.reverse(e))] = false;
            }
            if (set_v && v_ok) {
                --vertex_used[static_cast<std::size_t>(bv)];
                vertex_map[static_cast<std::size_t>(v)] = -1;
            }
            if (set_u) {
                --vertex_used[static_cast<std::size_t>(bu)];
                vertex_map[static_cast<std::size_t>(u)] = -1;
            }
        }
        return false;
    };
    if (nd == 0) return faces_match();
    return extend(0);
}

}  // namespace branched
