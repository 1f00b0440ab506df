#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "zz/orientation.hpp"

namespace zz {

// Oriented edges of a face are coded 0..5: code = 2*slot + dir, dir 0 meaning
// corner slot -> slot+1. Negation flips the low bit.
inline int oriented_negate(int code) { return code ^ 1; }
int df_apply(int code);    // D_F: xy -> yz
int df_inverse(int code);

struct FacePermutation {
    std::array<std::uint8_t, 6> image;

    int apply(int code) const { return image[code]; }
    bool operator==(const FacePermutation&) const = default;
    bool is_identity() const;
    bool is_permutation() const;
};

FacePermutation df_permutation();
FacePermutation df_inverse_permutation();

FacePermutation z_monodromy(const SurfaceMap& map, Face f);

enum class MType : int { M1 = 1, M2, M3, M4, M5, M6, M7 };
const char* mtype_name(MType t);

struct MonodromyRecord {
    Face face;
    FacePermutation perm;
    MType type;
    std::array<int, 3> witness;  // the D_F cycle (e1,e2,e3) matched, -1s for M1/M2/M5
};

/// matches the permutation against the seven templates; NoTemplateMatch if none
MType classify_monodromy(const FacePermutation& perm, std::array<int, 3>* witness = nullptr);
MonodromyRecord monodromy_record(const SurfaceMap& map, Face f);

struct MonodromySubgraphs {
    // index 0..6 for M1..M7
    std::array<std::vector<Face>, 7> members;
    std::array<std::vector<std::pair<Face, Face>>, 7> adjacency;
    std::array<bool, 7> acyclic;
    bool g1_forest() const { return acyclic[0]; }
    bool g2_forest() const { return acyclic[1]; }
};

MonodromySubgraphs monodromy_subgraphs(const SurfaceMap& map);

struct Lemma2Result {
    Edge twice_edge;
    EdgeType type;
    MType predicted;  // type I -> M6, type II -> M7
};

/// Defined when exactly two zigzags of tau meet the face; requires all faces
/// type I (MixedFaceTypes).
std::optional<Lemma2Result> lemma2_analysis(const SurfaceMap& map, const ZigzagSet& zs,
                                            const ZOrientation& tau, Face f);

}  // namespace zz
