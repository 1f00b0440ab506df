#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zz/errors.hpp"

namespace zz {

using Face = int;
using Side = int;    // side s = 3*f + slot; slot i spans corners i and i+1 (mod 3)
using Corner = int;  // corner c = 3*f + i
using Edge = int;
using Vertex = int;

inline Face face_of(Side s) { return s / 3; }
inline int slot_of(Side s) { return s % 3; }
inline Side side_at(Face f, int slot) { return 3 * f + slot; }
inline Corner first_corner(Side s) { return s; }
inline Corner second_corner(Side s) { return 3 * (s / 3) + (s % 3 + 1) % 3; }
// the two sides meeting at corner c: side(c) and the previous one
inline Side side_before_corner(Corner c) { return 3 * (c / 3) + (c % 3 + 2) % 3; }

struct GluingEntry {
    Face f1;
    int s1;
    Face f2;
    int s2;
    bool flip;  // 0: sides traverse the edge in opposite directions, 1: same
};

struct CornerName {
    Face face;
    int corner;
    std::string name;
};

/// Triangulated closed surface stored as glued face-sides. Immutable after
/// construction; all analyses are read-only and safe to share across threads.
class SurfaceMap {
public:
    static SurfaceMap build_simplicial(const std::vector<std::array<std::string, 3>>& triangles);
    static SurfaceMap build_glued(int face_count, const std::vector<GluingEntry>& gluing,
                                  const std::vector<CornerName>& names = {});

    int face_count() const { return face_count_; }
    int side_count() const { return 3 * face_count_; }
    int edge_count() const { return static_cast<int>(edge_sides_.size()); }
    int vertex_count() const { return vertex_count_; }

    Side glue(Side s) const { return glue_[s]; }
    bool flip(Side s) const { return flip_[s] != 0; }
    Edge edge_of(Side s) const { return side_edge_[s]; }
    /// canonical side first (the smaller index)
    std::pair<Side, Side> sides_of(Edge e) const { return edge_sides_[e]; }
    Side canonical_side(Edge e) const { return edge_sides_[e].first; }

    Vertex vertex_at(Corner c) const { return corner_vertex_[c]; }
    Vertex vertex_of(Face f, int corner) const { return corner_vertex_[3 * f + corner]; }
    const std::string& vertex_name(Vertex v) const { return vertex_names_[v]; }
    std::optional<Vertex> vertex_by_name(const std::string& name) const;

    /// endpoints of the canonical side in corner order (loops give equal entries)
    std::pair<Vertex, Vertex> edge_endpoints(Edge e) const;
    const std::vector<Edge>& vertex_edges(Vertex v) const { return vertex_edges_[v]; }
    int vertex_degree(Vertex v) const { return vertex_corner_count_[v]; }
    const std::array<Edge, 3> face_edges(Face f) const;

    int euler_characteristic() const { return vertex_count_ - edge_count() + face_count_; }
    bool orientable() const { return orientable_; }

    /// face vertex triples, usable as build_simplicial input when the map is
    /// vertex-pair reconstructible
    std::vector<std::array<std::string, 3>> triangles() const;

    /// translate a direction bit from side s onto its glued partner
    int translate_dir(Side s, int d) const { return flip_[s] ? d : 1 - d; }
    /// direction of traversal (side s, dir d) expressed on the canonical side
    int canonical_dir(Side s, int d) const {
        Side cs = edge_sides_[side_edge_[s]].first;
        return s == cs ? d : translate_dir(s, d);
    }

private:
    SurfaceMap(int face_count, std::vector<int> glue, std::vector<unsigned char> flip,
               const std::vector<CornerName>& names);
    void compute_derived(const std::vector<CornerName>& names);

    int face_count_ = 0;
    std::vector<int> glue_;
    std::vector<unsigned char> flip_;
    std::vector<int> side_edge_;
    std::vector<std::pair<Side, Side>> edge_sides_;
    std::vector<int> corner_vertex_;
    int vertex_count_ = 0;
    std::vector<std::string> vertex_names_;
    std::vector<std::vector<Edge>> vertex_edges_;
    std::vector<int> vertex_corner_count_;
    bool orientable_ = false;
};

enum class ValidationLevel { Surface, Triangulation, StrictSimplicial };

struct Violation {
    std::string where;
    std::string what;
};

struct ValidationReport {
    ValidationLevel requested;
    ValidationLevel achieved;
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

ValidationReport validate(const SurfaceMap& map, ValidationLevel level);

const char* level_name(ValidationLevel level);

}  // namespace zz
