#include "zz/orientation.hpp"

#include <algorithm>

namespace zz {

ZOrientation ZOrientation::from_index(std::uint64_t index, int k) {
    if (k < 0 || (k < 64 && index >= (std::uint64_t{1} << k)))
        throw ParameterOutOfRange("orientation index " + std::to_string(index) +
                                  " out of range for k=" + std::to_string(k));
    ZOrientation tau;
    tau.bits.resize(k);
    for (int p = 0; p < k; ++p) tau.bits[p] = static_cast<std::uint8_t>((index >> p) & 1);
    return tau;
}

std::uint64_t ZOrientation::index() const {
    if (bits.size() > 63) throw ParameterOutOfRange("orientation index overflows 64 bits");
    std::uint64_t idx = 0;
    for (int p = 0; p < k(); ++p)
        if (bits[p]) idx |= std::uint64_t{1} << p;
    return idx;
}

ZOrientation ZOrientation::reversed() const {
    ZOrientation out = *this;
    for (auto& b : out.bits) b ^= 1;
    return out;
}

bool Classification::all_faces_type_I() const {
    return std::all_of(face_types.begin(), face_types.end(),
                       [](FaceType t) { return t == FaceType::I; });
}

bool Classification::all_faces_type_II() const {
    return std::all_of(face_types.begin(), face_types.end(),
                       [](FaceType t) { return t == FaceType::II; });
}

int Classification::count_edges(EdgeType t) const {
    return static_cast<int>(std::count(edge_types.begin(), edge_types.end(), t));
}

Classification classify(const SurfaceMap& map, const ZigzagSet& zs, const ZOrientation& tau) {
    if (tau.k() != zs.k())
        throw ParameterOutOfRange("orientation has " + std::to_string(tau.k()) +
                                  " bits for a map with k=" + std::to_string(zs.k()));
    Classification cls;
    const int ne = map.edge_count();
    cls.edge_types.assign(ne, EdgeType::I);
    cls.edge_dir.assign(ne, 0);

    // every edge is traversed exactly twice across the selected zigzags
    std::vector<std::array<int, 2>> trav(ne, {-1, -1});
    for (int p = 0; p < zs.k(); ++p) {
        const Zigzag& z = zs.oriented(p, tau.bit(p) ? 1 : 0);
        for (State st : z.states) {
            Side s = state_side(st);
            Edge e = map.edge_of(s);
            int d = map.canonical_dir(s, state_dir(st));
            if (trav[e][0] < 0)
                trav[e][0] = d;
            else if (trav[e][1] < 0)
                trav[e][1] = d;
            else
                throw InvariantViolation("edge " + std::to_string(e) + " traversed thrice");
        }
    }
    for (Edge e = 0; e < ne; ++e) {
        if (trav[e][1] < 0)
            throw InvariantViolation("edge " + std::to_string(e) + " not double-covered");
        if (trav[e][0] != trav[e][1]) {
            cls.edge_types[e] = EdgeType::I;
        } else {
            cls.edge_types[e] = EdgeType::II;
            cls.edge_dir[e] = static_cast<std::uint8_t>(trav[e][0]);
        }
    }

    // Proposition 1 trichotomy per face
    cls.face_types.assign(map.face_count(), FaceType::I);
    for (Face f = 0; f < map.face_count(); ++f) {
        int n_type1 = 0;
        for (int i = 0; i < 3; ++i)
            if (cls.edge_types[map.edge_of(side_at(f, i))] == EdgeType::I) ++n_type1;
        if (n_type1 == 2) {
            cls.face_types[f] = FaceType::I;
        } else if (n_type1 == 0) {
            // all type II: must form a directed cycle in one of the two senses
            int d0 = -1;
            bool cyc = true;
            for (int i = 0; i < 3; ++i) {
                Side s = side_at(f, i);
                Edge e = map.edge_of(s);
                int d = cls.edge_dir[e];
                if (s != map.canonical_side(e)) d = map.translate_dir(s, d);
                if (d0 < 0)
                    d0 = d;
                else if (d != d0)
                    cyc = false;
            }
            if (!cyc)
                throw InvariantViolation("face " + std::to_string(f) +
                                         ": three type-II edges not forming a directed cycle");
            cls.face_types[f] = FaceType::II;
        } else {
            throw InvariantViolation("face " + std::to_string(f) + ": " +
                                     std::to_string(n_type1) + " type-I edges (trichotomy)");
        }
    }

    cls.vertex_types.assign(map.vertex_count(), VertexType::I);
    for (Vertex v = 0; v < map.vertex_count(); ++v)
        for (Edge e : map.vertex_edges(v))
            if (cls.edge_types[e] == EdgeType::II) {
                cls.vertex_types[v] = VertexType::II;
                break;
            }
    return cls;
}

std::pair<Vertex, Vertex> type2_arc_endpoints(const SurfaceMap& map, const Classification& cls,
                                              Edge e) {
    auto [a, b] = map.edge_endpoints(e);
    if (cls.edge_dir[e] == 0) return {a, b};
    return {b, a};
}

std::uint64_t orientation_count(const ZigzagSet& zs, std::uint64_t cap) {
    if (zs.k() >= 63 || (std::uint64_t{1} << zs.k()) > cap)
        throw CapExceeded("2^" + std::to_string(zs.k()) + " orientations exceed cap " +
                          std::to_string(cap));
    return std::uint64_t{1} << zs.k();
}

void enumerate_z_orientations(const ZigzagSet& zs,
                              const std::function<void(const ZOrientation&)>& fn,
                              std::uint64_t cap) {
    std::uint64_t n = orientation_count(zs, cap);
    for (std::uint64_t idx = 0; idx < n; ++idx) fn(ZOrientation::from_index(idx, zs.k()));
}

bool is_homogeneous(const SurfaceMap& map, const ZigzagSet& zs, const ZOrientation& tau) {
    Classification cls = classify(map, zs, tau);
    if (!cls.all_faces_type_I())
        throw HomogeneityUndefined("homogeneity requires all faces of type I");
    for (int p = 0; p < zs.k(); ++p) {
        const Zigzag& z = zs.oriented(p, tau.bit(p) ? 1 : 0);
        const int n = z.length();
        if (n % 3 != 0) return false;
        int phase = -1;
        for (int i = 0; i < n && phase < 0; ++i)
            if (cls.edge_types[map.edge_of(state_side(z.states[i]))] == EdgeType::II) phase = i % 3;
        if (phase < 0) return false;  // no type-II edge at all
        for (int i = 0; i < n; ++i) {
            bool is2 =
                cls.edge_types[map.edge_of(state_side(z.states[i]))] == EdgeType::II;
            if (is2 != (i % 3 == phase)) return false;
        }
    }
    return true;
}

std::optional<ZOrientation> find_all_type_I_orientation(const SurfaceMap& map, const ZigzagSet& zs,
                                                        std::uint64_t cap) {
    std::uint64_t n = orientation_count(zs, cap);
    for (std::uint64_t idx = 0; idx < n; ++idx) {
        ZOrientation tau = ZOrientation::from_index(idx, zs.k());
        if (classify(map, zs, tau).all_faces_type_I()) return tau;
    }
    return std::nullopt;
}

bool types_invariant_under_reversal(const SurfaceMap& map, const ZigzagSet& zs,
                                    const ZOrientation& tau) {
    Classification a = classify(map, zs, tau);
    Classification b = classify(map, zs, tau.reversed());
    if (a.edge_types != b.edge_types || a.face_types != b.face_types ||
        a.vertex_types != b.vertex_types)
        return false;
    for (Edge e = 0; e < map.edge_count(); ++e)
        if (a.edge_types[e] == EdgeType::II && a.edge_dir[e] == b.edge_dir[e]) return false;
    return true;
}

}  // namespace zz
