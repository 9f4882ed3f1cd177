#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "branched/errors.hpp"
#include "branched/morphism.hpp"

namespace branched {

namespace detail {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int a) {
        while (parent[static_cast<std::size_t>(a)] != a) {
            parent[static_cast<std::size_t>(a)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
            a = parent[static_cast<std::size_t>(a)];
        }
        return a;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (b < a) std::swap(a, b);  // keep the smaller index as root
        parent[static_cast<std::size_t>(b)] = a;
        return true;
    }
};

/// Identifies darts a and b and cascades: reverses identify, endpoints
/// identify. Graph-level only; face words are rewritten by the caller.
inline void unite_darts(const SerreGraph& g, UnionFind& darts, UnionFind& verts, Dart a, Dart b) {
    std::vector<std::pair<Dart, Dart>> work{{a, b}};
    while (!work.empty()) {
        auto [x, y] = work.back();
        work.pop_back();
        if (darts.find(x) == darts.find(y)) continue;
        if (darts.find(x) == darts.find(g.reverse(y)))
            throw Error("quotient identifies a dart with its own reverse");
        darts.unite(x, y);
        verts.unite(g.origin_of(x), g.origin_of(y));
        work.push_back({g.reverse(x), g.reverse(y)});
    }
}

/// New indices for union-find classes, ordered by smallest member; returns
/// (class index per element, class count).
inline std::pair<std::vector<int>, int> class_indexing(UnionFind& uf, int n) {
    std::vector<int> idx(static_cast<std::size_t>(n), -1);
    int next = 0;
    for (int i = 0; i < n; ++i) {
        const int r = uf.find(i);
        if (idx[static_cast<std::size_t>(r)] == -1) idx[static_cast<std::size_t>(r)] = next++;
        idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(r)];
    }
    return {idx, next};
}

}  // namespace detail

/// Quotient of x by the given dart identifications (with the forced cascade
/// of reverses and endpoints). Throws if a face word backtracks in the
/// quotient. Returns the quotient map x -> Q.
inline Morphism quotient_complex(const BranchedTwoComplex& x,
                                 const std::vector<std::pair<Dart, Dart>>& dart_ids) {
    detail::UnionFind darts(x.skeleton.num_darts());
    detail::UnionFind verts(x.skeleton.num_vertices);
    for (const auto& [a, b] : dart_ids) detail::unite_darts(x.skeleton, darts, verts, a, b);
    const auto [dart_idx, dart_classes] = detail::class_indexing(darts, x.skeleton.num_darts());
    const auto [vert_idx, vert_classes] = detail::class_indexing(verts, x.skeleton.num_vertices);

    BranchedTwoComplex q;
    q.skeleton.num_vertices = vert_classes;
    q.skeleton.involution.assign(static_cast<std::size_t>(dart_classes), -1);
    q.skeleton.origin.assign(static_cast<std::size_t>(dart_classes), -1);
    for (Dart d = 0; d < x.skeleton.num_darts(); ++d) {
        const int nd = dart_idx[static_cast<std::size_t>(d)];
        q.skeleton.involution[static_cast<std::size_t>(nd)] = dart_idx[static_cast<std::size_t>(x.skeleton.reverse(d))];
        q.skeleton.origin[static_cast<std::size_t>(nd)] = vert_idx[static_cast<std::size_t>(x.skeleton.origin_of(d))];
    }
    for (const CyclicWord& w : x.faces) {
        CyclicWord nw;
        for (Dart d : w.darts) nw.darts.push_back(dart_idx[static_cast<std::size_t>(d)]);
        q.faces.push_back(std::move(nw));
    }
    q.area = x.area;
    const auto diag = validate(q);
    if (!diag.empty()) throw Error("quotient is not a valid complex: " + diag.front());

    Morphism m;
    m.source = x;
    m.target = std::move(q);
    m.vertex_map = vert_idx;
    m.dart_map = dart_idx;
    m.face_map.resize(static_cast<std::size_t>(x.num_faces()));
    for (FaceId f = 0; f < x.num_faces(); ++f) m.face_map[static_cast<std::size_t>(f)] = f;
    m.multiplicity.assign(static_cast<std::size_t>(x.num_faces()), 1);
    return m;
}

struct FoldResult {
    Morphism phi0;                // Y -> folded (surjective on pi_1)
    BranchedTwoComplex folded;
    Morphism phibar;              // folded -> X (a branched immersion)
};

/// Stallings folding for a branched morphism: iterated identification of dart
/// pairs with equal image and equal origin, then wrapping each face to its
/// minimal period compatible with its image and identifying faces whose image
/// and boundary coincide. The step order is the lowest foldable dart pair
/// unless a seed is given (used by the confluence tests); the result is
/// order-independent.
inline FoldResult fold(const Morphism& phi, std::optional<unsigned> random_order_seed = std::nullopt) {
    const BranchedTwoComplex& y = phi.source;
    const BranchedTwoComplex& x = phi.target;
    detail::UnionFind darts(y.skeleton.num_darts());
    detail::UnionFind verts(y.skeleton.num_vertices);
    std::optional<std::mt19937_64> rng;
    if (random_order_seed) rng.emplace(*random_order_seed);

    while (true) {
        std::vector<std::pair<Dart, Dart>> foldable;
        for (Dart a = 0; a < y.skeleton.num_darts(); ++a) {
            for (Dart b = a + 1; b < y.skeleton.num_darts(); ++b) {
                if (darts.find(a) == darts.find(b)) continue;
                if (phi.dart_map[static_cast<std::size_t>(a)] != phi.dart_map[static_cast<std::size_t>(b)]) continue;
                if (verts.find(y.skeleton.origin_of(a)) != verts.find(y.skeleton.origin_of(b))) continue;
                foldable.push_back({a, b});
                if (!rng) break;  // lowest pair: first hit for this `a` is minimal
            }
            if (!rng && !foldable.empty()) break;
        }
        if (foldable.empty()) break;
        std::size_t pick = 0;
        if (rng) pick = static_cast<std::size_t>((*rng)() % foldable.size());
        detail::unite_darts(y.skeleton, darts, verts, foldable[pick].first, foldable[pick].second);
    }

    const auto [dart_idx, dart_classes] = detail::class_indexing(darts, y.skeleton.num_darts());
    const auto [vert_idx, vert_classes] = detail::class_indexing(verts, y.skeleton.num_vertices);

    // Representative original darts/vertices per class, for the image maps.
    std::vector<Dart> dart_rep(static_cast<std::size_t>(dart_classes), -1);
    for (Dart d = 0; d < y.skeleton.num_darts(); ++d)
        if (dart_rep[static_cast<std::size_t>(dart_idx[static_cast<std::size_t>(d)])] == -1)
            dart_rep[static_cast<std::size_t>(dart_idx[static_cast<std::size_t>(d)])] = d;
    std::vector<Vertex> vert_rep(static_cast<std::size_t>(vert_classes), -1);
    for (Vertex v = 0; v < y.skeleton.num_vertices; ++v)
        if (vert_rep[static_cast<std::size_t>(vert_idx[static_cast<std::size_t>(v)])] == -1)
            vert_rep[static_cast<std::size_t>(vert_idx[static_cast<std::size_t>(v)])] = v;

    BranchedTwoComplex folded;
    folded.skeleton.num_vertices = vert_classes;
    folded.skeleton.involution.assign(static_cast<std::size_t>(dart_classes), -1);
    folded.skeleton.origin.assign(static_cast<std::size_t>(dart_classes), -1);
    for (Dart d = 0; d < y.skeleton.num_darts(); ++d) {
        const int nd = dart_idx[static_cast<std::size_t>(d)];
        folded.skeleton.involution[static_cast<std::size_t>(nd)] =
            dart_idx[static_cast<std::size_t>(y.skeleton.reverse(d))];
        folded.skeleton.origin[static_cast<std::size_t>(nd)] =
            vert_idx[static_cast<std::size_t>(y.skeleton.origin_of(d))];
    }

    // Faces: wrap each word to its minimal image-compatible period, then
    // identify faces with equal image and equal boundary.
    struct PendingFace {
        FaceId source_face;
        FaceId image_face;
        std::vector<Dart> wrapped;   // as written, starting at the original position
        std::vector<Dart> canonical; // minimal rotation, used as the merge key
        Area wrap;                   // phi0 multiplicity
        Area image_mult;             // phibar multiplicity
    };
    std::vector<PendingFace> pending;
    for (FaceId f = 0; f < y.num_faces(); ++f) {
        const CyclicWord& wf = y.faces[static_cast<std::size_t>(f)];
        std::vector<Dart> w;
        w.reserve(wf.darts.size());
        for (Dart d : wf.darts) w.push_back(dart_idx[static_cast<std::size_t>(d)]);
        const FaceId g = phi.face_map[static_cast<std::size_t>(f)];
        const int ng = x.faces[static_cast<std::size_t>(g)].size();
        const int len = static_cast<int>(w.size());
        int period = len;
        for (int p = ng; p < len; p += ng) {
            if (len % p != 0) continue;
            bool ok = true;
            for (int i = 0; i < len && ok; ++i) ok = (w[static_cast<std::size_t>(i)] == w[static_cast<std::size_t>((i + p) % len)]);
            if (ok) {
                period = p;
                break;
            }
        }
        PendingFace pf;
        pf.source_face = f;
        pf.image_face = g;
        pf.wrapped.assign(w.begin(), w.begin() + period);
        pf.canonical = min_rotation(pf.wrapped);
        pf.wrap = len / period;
        pf.image_mult = period / ng;
        pending.push_back(std::move(pf));
    }

    Morphism phi0;
    phi0.source = y;
    phi0.vertex_map = vert_idx;
    phi0.dart_map = dart_idx;
    phi0.face_map.resize(static_cast<std::size_t>(y.num_faces()));
    phi0.multiplicity.resize(static_cast<std::size_t>(y.num_faces()));

    Morphism phibar;
    phibar.target = x;
    for (int c = 0; c < vert_classes; ++c)
        phibar.vertex_map.push_back(phi.vertex_map[static_cast<std::size_t>(vert_rep[static_cast<std::size_t>(c)])]);
    for (int c = 0; c < dart_classes; ++c)
        phibar.dart_map.push_back(phi.dart_map[static_cast<std::size_t>(dart_rep[static_cast<std::size_t>(c)])]);

    std::map<std::pair<FaceId, std::vector<Dart>>, FaceId> merged;  // (image, canonical word) -> folded face
    for (const PendingFace& pf : pending) {
        const auto key = std::make_pair(pf.image_face, pf.canonical);
        auto it = merged.find(key);
        if (it == merged.end()) {
            const FaceId nf = folded.num_faces();
            folded.faces.push_back(CyclicWord{pf.wrapped});
            folded.area.push_back(pf.image_mult * x.area[static_cast<std::size_t>(pf.image_face)]);
            phibar.face_map.push_back(pf.image_face);
            phibar.multiplicity.push_back(pf.image_mult);
            it = merged.emplace(key, nf).first;
        }
        phi0.face_map[static_cast<std::size_t>(pf.source_face)] = it->second;
        phi0.multiplicity[static_cast<std::size_t>(pf.source_face)] = pf.wrap;
    }

    phi0.target = folded;
    phibar.source = folded;
    return FoldResult{std::move(phi0), std::move(folded), std::move(phibar)};
}

namespace detail {

/// Per-component (vertex set, rank) of a skeleton, ordered by smallest vertex.
inline std::vector<std::pair<int, int>> component_ranks(const SerreGraph& g) {
    std::vector<std::pair<int, int>> out;
    for (const auto& comp : g.components()) {
        int darts = 0;
        for (Vertex v : comp)
            for (Dart d = 0; d < g.num_darts(); ++d)
                if (g.origin_of(d) == v) ++darts;
        const int edges = darts / 2;
        out.push_back({comp.front(), edges - static_cast<int>(comp.size()) + 1});
    }
    return out;
}

}  // namespace detail

/// Essential test: fold, then check that phi0 is a homotopy equivalence on
/// 1-skeleta (component bijection plus rank preservation; sound and complete
/// because phi0 is pi_1-surjective and free groups are Hopfian) and preserves
/// faces with all multiplicities 1.
inline bool is_essential(const Morphism& phi) {
    const FoldResult fr = fold(phi);
    for (Area k : fr.phi0.multiplicity)
        if (k != 1) return false;
    if (fr.folded.num_faces() != phi.source.num_faces()) return false;
    const auto src_comps = phi.source.skeleton.components();
    const auto dst_comps = fr.folded.skeleton.components();
    if (src_comps.size() != dst_comps.size()) return false;
    // phi0 is surjective, so equal counts make the component map a bijection;
    // match ranks through it.
    std::vector<int> dst_comp_of(static_cast<std::size_t>(fr.folded.skeleton.num_vertices), -1);
    for (std::size_t c = 0; c < dst_comps.size(); ++c)
        for (Vertex v : dst_comps[c]) dst_comp_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
    const auto rank_of = [](const SerreGraph& g, const std::vector<Vertex>& comp) {
        int darts = 0;
        std::vector<bool> in(static_cast<std::size_t>(g.num_vertices), false);
        for (Vertex v : comp) in[static_cast<std::size_t>(v)] = true;
        for (Dart d = 0; d < g.num_darts(); ++d)
            if (in[static_cast<std::size_t>(g.origin_of(d))]) ++darts;
        return darts / 2 - static_cast<int>(comp.size()) + 1;
    };
    std::vector<bool> hit(dst_comps.size(), false);
    for (const auto& comp : src_comps) {
        const int dc = dst_comp_of[static_cast<std::size_t>(fr.phi0.vertex_map[static_cast<std::size_t>(comp.front())])];
        if (hit[static_cast<std::size_t>(dc)]) return false;
        hit[static_cast<std::size_t>(dc)] = true;
        if (rank_of(phi.source.skeleton, comp) != rank_of(fr.folded.skeleton, dst_comps[static_cast<std::size_t>(dc)]))
            return false;
    }
    return true;
}

/// True iff phibar of the fold is an isomorphism of complexes.
inline bool is_isomorphism(const Morphism& phi) {
    const auto& s = phi.source;
    const auto& t = phi.target;
    if (s.skeleton.num_vertices != t.skeleton.num_vertices) return false;
    if (s.skeleton.num_darts() != t.skeleton.num_darts()) return false;
    if (s.num_faces() != t.num_faces()) return false;
    std::vector<bool> v_hit(static_cast<std::size_t>(t.skeleton.num_vertices), false);
    for (Vertex v : phi.vertex_map) {
        if (v_hit[static_cast<std::size_t>(v)]) return false;
        v_hit[static_cast<std::size_t>(v)] = true;
    }
    std::vector<bool> d_hit(static_cast<std::size_t>(t.skeleton.num_darts()), false);
    for (Dart d : phi.dart_map) {
        if (d_hit[static_cast<std::size_t>(d)]) return false;
        d_hit[static_cast<std::size_t>(d)] = true;
    }
    std::vector<bool> f_hit(static_cast<std::size_t>(t.num_faces()), false);
    for (std::size_t f = 0; f < phi.face_map.size(); ++f) {
        if (phi.multiplicity[f] != 1) return false;
        if (f_hit[static_cast<std::size_t>(phi.face_map[f])]) return false;
        f_hit[static_cast<std::size_t>(phi.face_map[f])] = true;
    }
    return true;
}

inline bool is_essential_equivalence(const Morphism& phi) {
    if (!is_essential(phi)) return false;
    return is_isomorphism(fold(phi).phibar);
}

}  // namespace branched
