#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "branched/complex.hpp"
#include "branched/errors.hpp"
#include "branched/link.hpp"

namespace branched {

/// Combinatorial map of branched complexes. On faces the map may ramify at
/// the centre with the stated multiplicity; areas satisfy
/// area(f) = multiplicity(f) * area(face_map(f)).
struct Morphism {
    BranchedTwoComplex source;
    BranchedTwoComplex target;
    std::vector<Vertex> vertex_map;
    std::vector<Dart> dart_map;
    std::vector<FaceId> face_map;
    std::vector<Area> multiplicity;

    bool operator==(const Morphism&) const = default;
};

inline Morphism identity_morphism(const BranchedTwoComplex& x) {
    Morphism m;
    m.source = x;
    m.target = x;
    m.vertex_map.resize(static_cast<std::size_t>(x.skeleton.num_vertices));
    for (Vertex v = 0; v < x.skeleton.num_vertices; ++v) m.vertex_map[static_cast<std::size_t>(v)] = v;
    m.dart_map.resize(static_cast<std::size_t>(x.skeleton.num_darts()));
    for (Dart d = 0; d < x.skeleton.num_darts(); ++d) m.dart_map[static_cast<std::size_t>(d)] = d;
    m.face_map.resize(static_cast<std::size_t>(x.num_faces()));
    for (FaceId f = 0; f < x.num_faces(); ++f) m.face_map[static_cast<std::size_t>(f)] = f;
    m.multiplicity.assign(static_cast<std::size_t>(x.num_faces()), 1);
    return m;
}

/// Smallest rotation r with dart_map(word_f) = word_g rotated by r and
/// repeated multiplicity times; nullopt if the boundaries are incompatible.
inline std::optional<int> face_rotation_offset(const Morphism& phi, FaceId f) {
    const CyclicWord& wf = phi.source.faces[static_cast<std::size_t>(f)];
    const CyclicWord& wg = phi.target.faces[static_cast<std::size_t>(phi.face_map[static_cast<std::size_t>(f)])];
    const Area m = phi.multiplicity[static_cast<std::size_t>(f)];
    if (static_cast<Area>(wf.size()) != m * static_cast<Area>(wg.size())) return std::nullopt;
    for (int r = 0; r < wg.size(); ++r) {
        bool ok = true;
        for (int i = 0; i < wf.size() && ok; ++i)
            ok = phi.dart_map[static_cast<std::size_t>(wf.at(i))] == wg.at(i + r);
        if (ok) return r;
    }
    return std::nullopt;
}

/// The image of corner (f, i) under phi, using the face's smallest valid
/// rotation alignment.
inline Corner corner_image(const Morphism& phi, const Corner& c, int rotation_offset) {
    const FaceId g = phi.face_map[static_cast<std::size_t>(c.face)];
    const int ng = phi.target.faces[static_cast<std::size_t>(g)].size();
    return Corner{g, (c.position + rotation_offset) % ng};
}

inline std::vector<std::string> morphism_diagnostics(const Morphism& phi) {
    std::vector<std::string> out;
    const auto& s = phi.source;
    const auto& t = phi.target;
    if (phi.vertex_map.size() != static_cast<std::size_t>(s.skeleton.num_vertices))
        out.push_back("vertex_map size mismatch");
    if (phi.dart_map.size() != static_cast<std::size_t>(s.skeleton.num_darts()))
        out.push_back("dart_map size mismatch");
    if (phi.face_map.size() != static_cast<std::size_t>(s.num_faces())) out.push_back("face_map size mismatch");
    if (phi.multiplicity.size() != static_cast<std::size_t>(s.num_faces()))
        out.push_back("multiplicity size mismatch");
    if (!out.empty()) return out;
    for (Vertex v = 0; v < s.skeleton.num_vertices; ++v)
        if (phi.vertex_map[static_cast<std::size_t>(v)] < 0 ||
            phi.vertex_map[static_cast<std::size_t>(v)] >= t.skeleton.num_vertices)
            out.push_back("vertex " + std::to_string(v) + ": image out of range");
    for (Dart d = 0; d < s.skeleton.num_darts(); ++d) {
        const Dart img = phi.dart_map[static_cast<std::size_t>(d)];
        if (img < 0 || img >= t.skeleton.num_darts()) {
            out.push_back("dart " + std::to_string(d) + ": image out of range");
            continue;
        }
        if (phi.dart_map[static_cast<std::size_t>(s.skeleton.reverse(d))] != t.skeleton.reverse(img))
            out.push_back("dart " + std::to_string(d) + ": does not commute with involution");
        if (phi.vertex_map[static_cast<std::size_t>(s.skeleton.origin_of(d))] != t.skeleton.origin_of(img))
            out.push_back("dart " + std::to_string(d) + ": does not commute with origin");
    }
    if (!out.empty()) return out;
    for (FaceId f = 0; f < s.num_faces(); ++f) {
        const FaceId g = phi.face_map[static_cast<std::size_t>(f)];
        if (g < 0 || g >= t.num_faces()) {
            out.push_back("face " + std::to_string(f) + ": image out of range");
            continue;
        }
        const Area m = phi.multiplicity[static_cast<std::size_t>(f)];
        if (m <= 0) out.push_back("face " + std::to_string(f) + ": nonpositive multiplicity");
        if (s.area[static_cast<std::size_t>(f)] != m * t.area[static_cast<std::size_t>(g)])
            out.push_back("face " + std::to_string(f) + ": area incompatible with multiplicity");
        if (!face_rotation_offset(phi, f))
            out.push_back("face " + std::to_string(f) + ": boundary incompatible with image");
    }
    return out;
}

inline bool is_valid(const Morphism& phi) {
    return is_valid(phi.source) && is_valid(phi.target) && morphism_diagnostics(phi).empty();
}

/// Componentwise composition; multiplicities multiply.
inline Morphism compose(const Morphism& psi, const Morphism& phi) {
    if (psi.target != phi.source) throw MismatchedComplexesError();
    Morphism out;
    out.source = psi.source;
    out.target = phi.target;
    out.vertex_map.reserve(psi.vertex_map.size());
    for (Vertex v : psi.vertex_map) out.vertex_map.push_back(phi.vertex_map[static_cast<std::size_t>(v)]);
    out.dart_map.reserve(psi.dart_map.size());
    for (Dart d : psi.dart_map) out.dart_map.push_back(phi.dart_map[static_cast<std::size_t>(d)]);
    for (std::size_t f = 0; f < psi.face_map.size(); ++f) {
        const FaceId mid = psi.face_map[f];
        out.face_map.push_back(phi.face_map[static_cast<std::size_t>(mid)]);
        out.multiplicity.push_back(psi.multiplicity[f] * phi.multiplicity[static_cast<std::size_t>(mid)]);
    }
    return out;
}

/// Injectivity of every induced link map, on nodes and on corner edges.
inline bool is_branched_immersion(const Morphism& phi) {
    const auto& s = phi.source;
    // Node level: darts at a common vertex have distinct images.
    std::set<std::pair<Vertex, Dart>> seen;
    for (Dart d = 0; d < s.skeleton.num_darts(); ++d)
        if (!seen.insert({s.skeleton.origin_of(d), phi.dart_map[static_cast<std::size_t>(d)]}).second)
            return false;
    // Edge level: corners at a common vertex have distinct image corners.
    std::vector<int> offset(static_cast<std::size_t>(s.num_faces()));
    for (FaceId f = 0; f < s.num_faces(); ++f) {
        const auto r = face_rotation_offset(phi, f);
        if (!r) return false;
        offset[static_cast<std::size_t>(f)] = *r;
    }
    std::set<std::pair<Vertex, Corner>> seen_corners;
    for (const Corner& c : all_corners(s)) {
        const Corner img = corner_image(phi, c, offset[static_cast<std::size_t>(c.face)]);
        if (!seen_corners.insert({s.corner_vertex(c), img}).second) return false;
    }
    return true;
}

/// Some(degree) iff every link map is a bijection and the skeleton map is a
/// covering of the (connected) target of that constant degree.
inline std::optional<Area> is_branched_covering(const Morphism& phi) {
    const auto& s = phi.source;
    const auto& t = phi.target;
    if (!t.skeleton.connected()) throw DisconnectedError("is_branched_covering: target");
    if (s.skeleton.num_vertices == 0) return std::nullopt;
    if (!is_branched_immersion(phi)) return std::nullopt;
    // Counting: injective link maps are bijections iff node and corner counts
    // agree with the image vertex.
    std::vector<int> s_nodes(static_cast<std::size_t>(s.skeleton.num_vertices), 0);
    std::vector<int> t_nodes(static_cast<std::size_t>(t.skeleton.num_vertices), 0);
    for (Dart d = 0; d < s.skeleton.num_darts(); ++d) ++s_nodes[static_cast<std::size_t>(s.skeleton.origin_of(d))];
    for (Dart d = 0; d < t.skeleton.num_darts(); ++d) ++t_nodes[static_cast<std::size_t>(t.skeleton.origin_of(d))];
    std::vector<int> s_corners(static_cast<std::size_t>(s.skeleton.num_vertices), 0);
    std::vector<int> t_corners(static_cast<std::size_t>(t.skeleton.num_vertices), 0);
    for (const Corner& c : all_corners(s)) ++s_corners[static_cast<std::size_t>(s.corner_vertex(c))];
    for (const Corner& c : all_corners(t)) ++t_corners[static_cast<std::size_t>(t.corner_vertex(c))];
    for (Vertex v = 0; v < s.skeleton.num_vertices; ++v) {
        const Vertex w = phi.vertex_map[static_cast<std::size_t>(v)];
        if (s_nodes[static_cast<std::size_t>(v)] != t_nodes[static_cast<std::size_t>(w)]) return std::nullopt;
        if (s_corners[static_cast<std::size_t>(v)] != t_corners[static_cast<std::size_t>(w)]) return std::nullopt;
    }
    // Constant fibre cardinality over the connected target.
    std::vector<Area> fibre(static_cast<std::size_t>(t.skeleton.num_vertices), 0);
    for (Vertex v = 0; v < s.skeleton.num_vertices; ++v) ++fibre[static_cast<std::size_t>(phi.vertex_map[static_cast<std::size_t>(v)])];
    const Area d = fibre[0];
    if (d == 0) return std::nullopt;
    for (Area n : fibre)
        if (n != d) return std::nullopt;
    return d;
}

}  // namespace branched
