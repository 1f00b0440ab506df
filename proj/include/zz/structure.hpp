#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zz/orientation.hpp"

namespace zz {

/// One traversal step of a region boundary walk: wall side crossed in
/// direction dir (side frame), leaving from the vertex at its tail corner.
struct WallStep {
    Side side;
    int dir;
    Vertex from;
};

struct RegionCircle {
    std::vector<WallStep> steps;
    bool coherent_forward;    // every step follows the type-II tau-direction
    bool coherent_backward;   // every step runs against it
    bool vertex_simple;       // no host vertex repeated along the walk
};

struct Region {
    std::vector<Face> faces;
    std::vector<Side> wall_sides;
    int interior_edge_count;
    int chi;  // Euler characteristic of the region cut along its walls
    std::vector<RegionCircle> circles;
};

/// Faces of M \ Gamma_II flood-filled across type-I sides, with traced
/// boundary circles (one representative per boundary component).
struct RegionDecomposition {
    std::vector<int> region_of_face;
    std::vector<Region> regions;
};

RegionDecomposition decompose_regions(const SurfaceMap& map, const Classification& cls);

/// Gamma_II as an embedded digraph: type-II vertices, tau-directed type-II
/// edges, and the boundary walks of the complement regions as faces.
struct EmbeddedDigraph {
    struct Arc {
        Edge edge;
        Vertex tail;
        Vertex head;
    };
    struct WalkSlot {
        int arc;
        bool forward;
    };

    std::vector<Vertex> nodes;           // host vertex ids of type II
    std::vector<Arc> arcs;               // indexed by arc id
    std::vector<int> arc_of_edge;        // host edge -> arc id (-1 for type I)
    std::vector<std::vector<WalkSlot>> faces;  // one per boundary circle
    std::vector<int> face_region;        // provenance: region of each circle
};

EmbeddedDigraph gamma_II(const SurfaceMap& map, const Classification& cls,
                         const RegionDecomposition& regions);
EmbeddedDigraph gamma_II(const SurfaceMap& map, const ZigzagSet& zs, const ZOrientation& tau);

enum class ComponentClass { Disk, Cylinder, Moebius };
const char* component_class_name(ComponentClass c);

/// Cyclic face band glued along type-I edges (Theorem 2).
struct Component {
    std::vector<Face> faces;
    std::vector<Edge> boundary_edges;  // type-II edges of the band, face order
    ComponentClass cls;
    std::optional<Vertex> center;  // the unique type-I vertex of a Disk
};

/// requires all faces type I (MixedFaceTypes otherwise)
std::vector<Component> components(const SurfaceMap& map, const ZigzagSet& zs,
                                  const ZOrientation& tau);
std::vector<Component> components(const SurfaceMap& map, const Classification& cls);

struct Theorem1Report {
    bool homogeneous;        // (1) all selected zigzags homogeneous
    bool closed_2cell;       // (2) Gamma_II simple Eulerian closed 2-cell, directed-cycle faces
    bool all_disks;          // (3) every component is a disk
};

/// The three Theorem 1 conditions, each computed by an independent code path.
Theorem1Report theorem1_report(const SurfaceMap& map, const ZigzagSet& zs,
                               const ZOrientation& tau);

}  // namespace zz
