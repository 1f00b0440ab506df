#pragma once

#include <string>
#include <vector>

#include "zz/structure.hpp"

namespace zz {

/// A closed 2-cell embedding of a digraph: arcs plus face boundary walks
/// given as (arc, sense) slots, each arc referenced exactly twice.
struct DirectedEmbeddingSpec {
    struct Arc {
        std::string tail;
        std::string head;
    };
    struct Slot {
        int arc;
        bool forward;
    };
    std::vector<Arc> arcs;
    std::vector<std::vector<Slot>> faces;
};

/// throws NotSimpleDigraph / NotEulerian / NotClosed2Cell /
/// FaceNotDirectedCycle / FormatError
void validate_embedding_spec(const DirectedEmbeddingSpec& spec);

struct BuiltT {
    SurfaceMap map;
    ZigzagSet zigzags;
    ZOrientation tau;
    std::vector<Vertex> apex_of_face;  // per input face
    // provenance: T-triangle of (input face, slot)
    std::vector<std::vector<Face>> triangle_of_slot;
};

/// T(Gamma'): apex per face coned to its boundary, with the unique
/// z-orientation whose zigzags follow the arc directions (Proposition 3).
BuiltT build_T(const DirectedEmbeddingSpec& spec);

struct ShredResult {
    SurfaceMap map;
    ZigzagSet zigzags;
    ZOrientation tau;
    std::vector<std::vector<Face>> face_children;  // old face -> 1 or 3 new faces
    std::vector<Edge> edge_map;                    // old edge -> new edge
    int steps;
};

/// Proposition 2 single step: split a type-II face around a new interior
/// vertex; old edges keep their types and tau-directions.
ShredResult shred_face(const SurfaceMap& map, const ZigzagSet& zs, const ZOrientation& tau,
                       Face f);

/// Eliminate all type-II faces (Proposition 2, applied recursively).
ShredResult shred_to_type_I(const SurfaceMap& map, const ZigzagSet& zs, const ZOrientation& tau);

/// Gamma_II exported as a DirectedEmbeddingSpec; requires all zigzags
/// homogeneous (NotHomogeneous otherwise).
DirectedEmbeddingSpec extract_gamma_II_spec(const SurfaceMap& map, const ZigzagSet& zs,
                                            const ZOrientation& tau);

struct RoundtripReport {
    bool isomorphic;
    bool orientation_match;
    std::string detail;
    bool ok() const { return isomorphic && orientation_match; }
};

/// Proposition 3: verify map == T(gamma_II(map, tau)) via the constructive
/// face/corner correspondence from region provenance.
RoundtripReport extract_and_roundtrip(const SurfaceMap& map, const ZigzagSet& zs,
                                      const ZOrientation& tau);

}  // namespace zz
