#include "zz/monodromy.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace zz {

int df_apply(int code) {
    int i = code >> 1, d = code & 1;
    return d == 0 ? (((i + 1) % 3) << 1) : ((((i + 2) % 3) << 1) | 1);
}

int df_inverse(int code) {
    int i = code >> 1, d = code & 1;
    return d == 0 ? (((i + 2) % 3) << 1) : ((((i + 1) % 3) << 1) | 1);
}

bool FacePermutation::is_identity() const {
    for (int c = 0; c < 6; ++c)
        if (image[c] != c) return false;
    return true;
}

bool FacePermutation::is_permutation() const {
    std::array<bool, 6> hit{};
    for (int c = 0; c < 6; ++c) {
        if (image[c] > 5 || hit[image[c]]) return false;
        hit[image[c]] = true;
    }
    return true;
}

FacePermutation df_permutation() {
    FacePermutation p;
    for (int c = 0; c < 6; ++c) p.image[c] = static_cast<std::uint8_t>(df_apply(c));
    return p;
}

FacePermutation df_inverse_permutation() {
    FacePermutation p;
    for (int c = 0; c < 6; ++c) p.image[c] = static_cast<std::uint8_t>(df_inverse(c));
    return p;
}

FacePermutation z_monodromy(const SurfaceMap& map, Face f) {
    FacePermutation perm{};
    for (int e = 0; e < 6; ++e) {
        int e0 = df_inverse(e);
        // state traversing e0 inside f; its zigzag successor is the traversal of e
        State st = make_state(side_at(f, e0 >> 1), e0 & 1);
        State cur = zig_next(map, st);  // the occurrence of e itself
        int found = -1;
        int guard = 6 * map.face_count() + 1;
        while (found < 0) {
            cur = zig_next(map, cur);
            if (--guard < 0) throw InvariantViolation("monodromy scan did not terminate");
            Side s = state_side(cur);
            if (face_of(s) == f) {
                found = (slot_of(s) << 1) | state_dir(cur);
            } else if (face_of(map.glue(s)) == f) {
                Side p = map.glue(s);
                found = (slot_of(p) << 1) | map.translate_dir(s, state_dir(cur));
            }
        }
        perm.image[e] = static_cast<std::uint8_t>(found);
    }
    if (!perm.is_permutation()) throw InvariantViolation("z-monodromy is not a permutation");
    return perm;
}

const char* mtype_name(MType t) {
    switch (t) {
        case MType::M1: return "M1";
        case MType::M2: return "M2";
        case MType::M3: return "M3";
        case MType::M4: return "M4";
        case MType::M5: return "M5";
        case MType::M6: return "M6";
        case MType::M7: return "M7";
    }
    return "?";
}

namespace {

// the two 3-cycles of D_F and their rotations, as candidate (e1,e2,e3)
const std::array<std::array<int, 3>, 6>& df_cycles() {
    static const std::array<std::array<int, 3>, 6> cycles = [] {
        std::array<std::array<int, 3>, 6> out{};
        std::array<int, 3> c1{0, 2, 4};  // (ab, bc, ca)
        std::array<int, 3> c2{5, 3, 1};  // (ac, cb, ba)
        int n = 0;
        for (int r = 0; r < 3; ++r) {
            out[n++] = {c1[r], c1[(r + 1) % 3], c1[(r + 2) % 3]};
            out[n++] = {c2[r], c2[(r + 1) % 3], c2[(r + 2) % 3]};
        }
        return out;
    }();
    return cycles;
}

FacePermutation from_moves(std::initializer_list<std::pair<int, int>> moves) {
    FacePermutation p;
    for (int c = 0; c < 6; ++c) p.image[c] = static_cast<std::uint8_t>(c);
    for (auto [a, b] : moves) p.image[a] = static_cast<std::uint8_t>(b);
    return p;
}

}  // namespace

MType classify_monodromy(const FacePermutation& perm, std::array<int, 3>* witness) {
    if (witness) *witness = {-1, -1, -1};
    if (perm.is_identity()) return MType::M1;
    if (perm == df_permutation()) return MType::M2;
    if (perm == df_inverse_permutation()) return MType::M5;
    auto neg = [](int c) { return c ^ 1; };
    for (const auto& cyc : df_cycles()) {
        int e1 = cyc[0], e2 = cyc[1], e3 = cyc[2];
        FacePermutation m3 = from_moves({{neg(e1), e2},
                                         {e2, e3},
                                         {e3, neg(e1)},
                                         {neg(e3), neg(e2)},
                                         {neg(e2), e1},
                                         {e1, neg(e3)}});
        FacePermutation m4 =
            from_moves({{e1, neg(e2)}, {neg(e2), e1}, {e2, neg(e1)}, {neg(e1), e2}});
        FacePermutation m6 = from_moves({{neg(e1), e3},
                                         {e3, e2},
                                         {e2, neg(e1)},
                                         {neg(e2), neg(e3)},
                                         {neg(e3), e1},
                                         {e1, neg(e2)}});
        FacePermutation m7 = from_moves({{e1, e2}, {e2, e1}, {neg(e1), neg(e2)}, {neg(e2), neg(e1)}});
        MType found = MType::M1;
        bool hit = false;
        if (perm == m3) {
            found = MType::M3;
            hit = true;
        } else if (perm == m4) {
            found = MType::M4;
            hit = true;
        } else if (perm == m6) {
            found = MType::M6;
            hit = true;
        } else if (perm == m7) {
            found = MType::M7;
            hit = true;
        }
        if (hit) {
            if (witness) *witness = cyc;
            return found;
        }
    }
    throw NoTemplateMatch("z-monodromy matches none of the seven templates");
}

MonodromyRecord monodromy_record(const SurfaceMap& map, Face f) {
    MonodromyRecord rec;
    rec.face = f;
    rec.perm = z_monodromy(map, f);
    rec.type = classify_monodromy(rec.perm, &rec.witness);
    return rec;
}

MonodromySubgraphs monodromy_subgraphs(const SurfaceMap& map) {
    MonodromySubgraphs out{};
    std::vector<int> type_of(map.face_count());
    for (Face f = 0; f < map.face_count(); ++f) {
        MType t = classify_monodromy(z_monodromy(map, f));
        type_of[f] = static_cast<int>(t) - 1;
        out.members[type_of[f]].push_back(f);
    }
    std::set<std::pair<Face, Face>> dual;
    for (Side s = 0; s < map.side_count(); ++s) {
        Face f = face_of(s), g = face_of(map.glue(s));
        if (f < g) dual.insert({f, g});
    }
    for (auto [f, g] : dual)
        if (type_of[f] == type_of[g]) out.adjacency[type_of[f]].push_back({f, g});
    for (int i = 0; i < 7; ++i) {
        // forest check: union-find cycle detection
        std::map<Face, Face> parent;
        for (Face f : out.members[i]) parent[f] = f;
        std::function<Face(Face)> find = [&](Face x) {
            while (parent[x] != x) {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            return x;
        };
        out.acyclic[i] = true;
        for (auto [f, g] : out.adjacency[i]) {
            Face rf = find(f), rg = find(g);
            if (rf == rg) {
                out.acyclic[i] = false;
                break;
            }
            parent[rf] = rg;
        }
    }
    return out;
}

std::optional<Lemma2Result> lemma2_analysis(const SurfaceMap& map, const ZigzagSet& zs,
                                            const ZOrientation& tau, Face f) {
    Classification cls = classify(map, zs, tau);
    if (!cls.all_faces_type_I())
        throw MixedFaceTypes("Lemma 2 analysis requires all faces of type I");
    // which zigzag pairs visit the face's edges, and which edge repeats a pair
    std::vector<std::vector<int>> edge_pairs(3);
    std::set<int> pairs_met;
    for (int i = 0; i < 3; ++i) {
        Edge e = map.edge_of(side_at(f, i));
        auto [sa, sb] = map.sides_of(e);
        for (Side s : {sa, sb})
            for (int d = 0; d < 2; ++d) {
                const auto& loc = zs.locate(make_state(s, d));
                if ((tau.bit(loc.pair) ? 1 : 0) == loc.orient) {
                    edge_pairs[i].push_back(loc.pair);
                    pairs_met.insert(loc.pair);
                }
            }
        if (edge_pairs[i].size() != 2)
            throw InvariantViolation("edge not traversed exactly twice by tau");
    }
    if (pairs_met.size() != 2) return std::nullopt;
    int twice_slot = -1;
    for (int i = 0; i < 3; ++i) {
        if (edge_pairs[i][0] == edge_pairs[i][1]) {
            if (twice_slot >= 0)
                throw InvariantViolation("two twice-occurring edges on one face (Lemma 2(1))");
            twice_slot = i;
        }
    }
    if (twice_slot < 0)
        throw InvariantViolation("no twice-occurring edge under the two-zigzag hypothesis");
    Edge e = map.edge_of(side_at(f, twice_slot));
    EdgeType t = cls.edge_types[e];
    return Lemma2Result{e, t, t == EdgeType::I ? MType::M6 : MType::M7};
}

}  // namespace zz
