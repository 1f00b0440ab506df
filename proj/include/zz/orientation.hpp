#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "zz/zigzag.hpp"

namespace zz {

constexpr std::uint64_t kDefaultOrientationCap = std::uint64_t{1} << 20;

/// One orientation bit per zigzag reversal pair, in canonical pair order.
/// Bit p = 0 selects the canonical orientation of pair p; index bit p is the
/// p-th least significant bit.
struct ZOrientation {
    std::vector<std::uint8_t> bits;

    static ZOrientation from_index(std::uint64_t index, int k);
    std::uint64_t index() const;
    ZOrientation reversed() const;
    bool bit(int p) const { return bits[p] != 0; }
    int k() const { return static_cast<int>(bits.size()); }
};

enum class EdgeType : std::uint8_t { I = 1, II = 2 };
enum class FaceType : std::uint8_t { I = 1, II = 2 };
enum class VertexType : std::uint8_t { I = 1, II = 2 };

struct Classification {
    std::vector<EdgeType> edge_types;
    // canonical-side direction bit of each type-II edge (unused for type I)
    std::vector<std::uint8_t> edge_dir;
    std::vector<FaceType> face_types;
    std::vector<VertexType> vertex_types;

    bool all_faces_type_I() const;
    bool all_faces_type_II() const;
    int count_edges(EdgeType t) const;
};

Classification classify(const SurfaceMap& map, const ZigzagSet& zs, const ZOrientation& tau);

/// tail/head of a type-II edge under its tau-direction
std::pair<Vertex, Vertex> type2_arc_endpoints(const SurfaceMap& map, const Classification& cls,
                                              Edge e);

/// 2^k, guarded by the cap
std::uint64_t orientation_count(const ZigzagSet& zs, std::uint64_t cap = kDefaultOrientationCap);

/// invoke fn for every orientation index in increasing order (CapExceeded guard)
void enumerate_z_orientations(const ZigzagSet& zs,
                              const std::function<void(const ZOrientation&)>& fn,
                              std::uint64_t cap = kDefaultOrientationCap);

bool is_homogeneous(const SurfaceMap& map, const ZigzagSet& zs, const ZOrientation& tau);

std::optional<ZOrientation> find_all_type_I_orientation(const SurfaceMap& map, const ZigzagSet& zs,
                                                        std::uint64_t cap = kDefaultOrientationCap);

/// Remark 1 diagnostic: types agree between tau and its reversal, with all
/// type-II directions flipped.
bool types_invariant_under_reversal(const SurfaceMap& map, const ZigzagSet& zs,
                                    const ZOrientation& tau);

}  // namespace zz
