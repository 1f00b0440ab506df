#include "zz/structure.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace zz {

namespace {

bool is_wall(const SurfaceMap& map, const Classification& cls, Side s) {
    return cls.edge_types[map.edge_of(s)] == EdgeType::II;
}

// other side of the same face meeting corner c
Side other_side_at_corner(Corner c, Side came) {
    Side a = c;  // side with first corner c
    Side b = side_before_corner(c);
    return a == came ? b : a;
}

// land on the partner's corresponding corner when crossing side s from corner c
Corner cross_corner(const SurfaceMap& map, Side s, Corner c) {
    Side t = map.glue(s);
    bool at_first = (c == first_corner(s));
    if (!map.flip(s)) return at_first ? second_corner(t) : first_corner(t);
    return at_first ? first_corner(t) : second_corner(t);
}

struct DirectedWalk {
    std::vector<WallStep> steps;
    bool all_forward = true;
};

}  // namespace

RegionDecomposition decompose_regions(const SurfaceMap& map, const Classification& cls) {
    RegionDecomposition out;
    const int nf = map.face_count();
    out.region_of_face.assign(nf, -1);

    for (Face f0 = 0; f0 < nf; ++f0) {
        if (out.region_of_face[f0] >= 0) continue;
        int id = static_cast<int>(out.regions.size());
        Region reg;
        std::vector<Face> stack{f0};
        out.region_of_face[f0] = id;
        while (!stack.empty()) {
            Face f = stack.back();
            stack.pop_back();
            reg.faces.push_back(f);
            for (int i = 0; i < 3; ++i) {
                Side s = side_at(f, i);
                if (is_wall(map, cls, s)) {
                    reg.wall_sides.push_back(s);
                    continue;
                }
                Face g = face_of(map.glue(s));
                if (out.region_of_face[g] < 0) {
                    out.region_of_face[g] = id;
                    stack.push_back(g);
                }
            }
        }
        std::sort(reg.faces.begin(), reg.faces.end());
        std::sort(reg.wall_sides.begin(), reg.wall_sides.end());
        out.regions.push_back(std::move(reg));
    }

    // Euler characteristic of each region cut along its walls: corners are
    // identified only through interior (type-I) gluings
    for (auto& reg : out.regions) {
        std::map<Corner, int> local;
        for (Face f : reg.faces)
            for (int i = 0; i < 3; ++i) {
                int n = static_cast<int>(local.size());
                local[3 * f + i] = n;
            }
        std::vector<int> parent(local.size());
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            return x;
        };
        auto unite = [&](Corner a, Corner b) {
            int ra = find(local.at(a)), rb = find(local.at(b));
            if (ra != rb) parent[ra] = rb;
        };
        int interior = 0;
        for (Face f : reg.faces)
            for (int i = 0; i < 3; ++i) {
                Side s = side_at(f, i);
                Side t = map.glue(s);
                if (is_wall(map, cls, s) || t < s) continue;
                ++interior;
                if (!map.flip(s)) {
                    unite(first_corner(s), second_corner(t));
                    unite(second_corner(s), first_corner(t));
                } else {
                    unite(first_corner(s), first_corner(t));
                    unite(second_corner(s), second_corner(t));
                }
            }
        std::set<int> roots;
        for (const auto& [c, idx] : local) roots.insert(find(idx));
        int v_r = static_cast<int>(roots.size());
        int e_r = interior + static_cast<int>(reg.wall_sides.size());
        int f_r = static_cast<int>(reg.faces.size());
        reg.interior_edge_count = interior;
        reg.chi = v_r - e_r + f_r;
    }

    // boundary walks: trace every directed wall side once, then pair reversals
    std::map<std::pair<Side, int>, int> walk_of;
    std::vector<DirectedWalk> walks;
    for (const auto& reg : out.regions) {
        for (Side s0 : reg.wall_sides) {
            for (int d0 = 0; d0 < 2; ++d0) {
                if (walk_of.count({s0, d0})) continue;
                DirectedWalk w;
                Side s = s0;
                int d = d0;
                while (true) {
                    if (walk_of.count({s, d})) break;
                    walk_of[{s, d}] = static_cast<int>(walks.size());
                    Corner tail = d == 0 ? first_corner(s) : second_corner(s);
                    w.steps.push_back({s, d, map.vertex_at(tail)});
                    int cd = map.canonical_dir(s, d);
                    if (cd != cls.edge_dir[map.edge_of(s)]) w.all_forward = false;
                    // rotate around the head corner, staying inside the region
                    Corner c = d == 0 ? second_corner(s) : first_corner(s);
                    Side cur = other_side_at_corner(c, s);
                    while (!is_wall(map, cls, cur)) {
                        Corner c2 = cross_corner(map, cur, c);
                        Side nxt = other_side_at_corner(c2, map.glue(cur));
                        cur = nxt;
                        c = c2;
                    }
                    s = cur;
                    d = (c == first_corner(cur)) ? 0 : 1;
                    if (s == s0 && d == d0) break;
                }
                walks.push_back(std::move(w));
            }
        }
    }

    // group directed walks into boundary circles (reversal pairs)
    std::vector<char> used(walks.size(), 0);
    for (int wi = 0; wi < static_cast<int>(walks.size()); ++wi) {
        if (used[wi]) continue;
        const auto& first_step = walks[wi].steps.front();
        int pj = walk_of.at({first_step.side, 1 - first_step.dir});
        used[wi] = 1;
        used[pj] = 1;
        int rep = wi, other = pj;
        if (pj != wi) {
            // prefer the coherent-forward representative, else the smaller id
            if (walks[pj].all_forward && !walks[wi].all_forward) std::swap(rep, other);
        }
        RegionCircle circle;
        circle.steps = walks[rep].steps;
        circle.coherent_forward = walks[rep].all_forward;
        circle.coherent_backward = (pj == wi) ? walks[rep].all_forward : walks[other].all_forward;
        std::set<Vertex> seen;
        circle.vertex_simple = true;
        for (const auto& st : circle.steps)
            if (!seen.insert(st.from).second) circle.vertex_simple = false;
        int region = out.region_of_face[face_of(circle.steps.front().side)];
        out.regions[region].circles.push_back(std::move(circle));
    }
    return out;
}

EmbeddedDigraph gamma_II(const SurfaceMap& map, const Classification& cls,
                         const RegionDecomposition& regions) {
    EmbeddedDigraph g;
    g.arc_of_edge.assign(map.edge_count(), -1);
    std::vector<char> is_node(map.vertex_count(), 0);
    for (Edge e = 0; e < map.edge_count(); ++e) {
        if (cls.edge_types[e] != EdgeType::II) continue;
        auto [t, h] = type2_arc_endpoints(map, cls, e);
        g.arc_of_edge[e] = static_cast<int>(g.arcs.size());
        g.arcs.push_back({e, t, h});
        is_node[t] = is_node[h] = 1;
    }
    for (Vertex v = 0; v < map.vertex_count(); ++v)
        if (is_node[v]) g.nodes.push_back(v);
    for (int r = 0; r < static_cast<int>(regions.regions.size()); ++r) {
        for (const auto& circle : regions.regions[r].circles) {
            std::vector<EmbeddedDigraph::WalkSlot> slots;
            for (const auto& st : circle.steps) {
                Edge e = map.edge_of(st.side);
                int cd = map.canonical_dir(st.side, st.dir);
                slots.push_back({g.arc_of_edge[e], cd == cls.edge_dir[e]});
            }
            g.faces.push_back(std::move(slots));
            g.face_region.push_back(r);
        }
    }
    return g;
}

EmbeddedDigraph gamma_II(const SurfaceMap& map, const ZigzagSet& zs, const ZOrientation& tau) {
    Classification cls = classify(map, zs, tau);
    RegionDecomposition regions = decompose_regions(map, cls);
    return gamma_II(map, cls, regions);
}

const char* component_class_name(ComponentClass c) {
    switch (c) {
        case ComponentClass::Disk: return "disk";
        case ComponentClass::Cylinder: return "cylinder";
        case ComponentClass::Moebius: return "moebius";
    }
    return "?";
}

std::vector<Component> components(const SurfaceMap& map, const Classification& cls) {
    if (!cls.all_faces_type_I())
        throw MixedFaceTypes("component decomposition requires all faces of type I");
    const int nf = map.face_count();
    std::vector<char> seen(nf, 0);
    std::vector<Component> out;
    for (Face f0 = 0; f0 < nf; ++f0) {
        if (seen[f0]) continue;
        Component comp;
        int parity = 0;
        auto type1_sides = [&](Face f) {
            std::array<Side, 2> t1{-1, -1};
            int n = 0;
            for (int i = 0; i < 3; ++i)
                if (cls.edge_types[map.edge_of(side_at(f, i))] == EdgeType::I) t1[n++] = side_at(f, i);
            return t1;
        };
        Face f = f0;
        Side enter = -1;
        int guard = 0;
        while (true) {
            if (++guard > nf + 1) throw InvariantViolation("band walk failed to close");
            seen[f] = 1;
            comp.faces.push_back(f);
            for (int i = 0; i < 3; ++i)
                if (cls.edge_types[map.edge_of(side_at(f, i))] == EdgeType::II)
                    comp.boundary_edges.push_back(map.edge_of(side_at(f, i)));
            auto t1 = type1_sides(f);
            Side exit = (enter == -1) ? t1[0] : (t1[0] == enter ? t1[1] : t1[0]);
            parity ^= map.flip(exit) ? 1 : 0;
            Side nxt = map.glue(exit);
            f = face_of(nxt);
            enter = nxt;
            if (f == f0) {
                auto t0 = type1_sides(f0);
                Side first_exit = t0[0];
                Side expected_enter = (t0[0] == first_exit) ? t0[1] : t0[0];
                if (enter == expected_enter) break;
            }
        }
        // Theorem 2(2): a band is a disk iff it contains a type-I vertex
        std::set<Vertex> vs;
        for (Face bf : comp.faces)
            for (int i = 0; i < 3; ++i) vs.insert(map.vertex_of(bf, i));
        std::vector<Vertex> centers;
        for (Vertex v : vs)
            if (cls.vertex_types[v] == VertexType::I) centers.push_back(v);
        if (centers.size() > 1)
            throw InvariantViolation("band with " + std::to_string(centers.size()) +
                                     " type-I vertices");
        if (!centers.empty()) {
            comp.cls = ComponentClass::Disk;
            comp.center = centers.front();
        } else {
            comp.cls = parity ? ComponentClass::Moebius : ComponentClass::Cylinder;
        }
        out.push_back(std::move(comp));
    }
    return out;
}

std::vector<Component> components(const SurfaceMap& map, const ZigzagSet& zs,
                                  const ZOrientation& tau) {
    return components(map, classify(map, zs, tau));
}

Theorem1Report theorem1_report(const SurfaceMap& map, const ZigzagSet& zs,
                               const ZOrientation& tau) {
    Classification cls = classify(map, zs, tau);
    if (!cls.all_faces_type_I())
        throw MixedFaceTypes("theorem 1 report requires all faces of type I");

    Theorem1Report rep{};
    rep.homogeneous = is_homogeneous(map, zs, tau);

    // condition (2): Gamma_II is a closed 2-cell embedding of a simple
    // Eulerian digraph and every face is a directed cycle
    RegionDecomposition regions = decompose_regions(map, cls);
    EmbeddedDigraph g = gamma_II(map, cls, regions);
    bool ok = !g.arcs.empty();
    {
        std::map<std::pair<Vertex, Vertex>, int> pair_count;
        std::map<Vertex, int> indeg, outdeg;
        for (const auto& a : g.arcs) {
            if (a.tail == a.head) ok = false;  // loop
            pair_count[{std::min(a.tail, a.head), std::max(a.tail, a.head)}]++;
            outdeg[a.tail]++;
            indeg[a.head]++;
        }
        for (const auto& [pr, n] : pair_count)
            if (n > 1) ok = false;  // parallel edges
        for (Vertex v : g.nodes)
            if (indeg[v] != outdeg[v]) ok = false;  // not balanced
        // connectivity of the digraph (underlying graph)
        if (!g.nodes.empty()) {
            std::map<Vertex, std::vector<Vertex>> adj;
            for (const auto& a : g.arcs) {
                adj[a.tail].push_back(a.head);
                adj[a.head].push_back(a.tail);
            }
            std::set<Vertex> vis{g.nodes.front()};
            std::vector<Vertex> stack{g.nodes.front()};
            while (!stack.empty()) {
                Vertex v = stack.back();
                stack.pop_back();
                for (Vertex w : adj[v])
                    if (vis.insert(w).second) stack.push_back(w);
            }
            if (vis.size() != g.nodes.size()) ok = false;
        }
    }
    for (const auto& reg : regions.regions) {
        // closed 2-cell: every complement region is an open disk whose
        // closure is a closed disk (single vertex-simple boundary circle)
        if (reg.circles.size() != 1 || reg.chi != 1) ok = false;
        for (const auto& c : reg.circles) {
            if (!c.vertex_simple) ok = false;
            if (!(c.coherent_forward || c.coherent_backward)) ok = false;  // directed cycle
        }
    }
    rep.closed_2cell = ok;

    // condition (3): every component of the band decomposition is a disk
    auto comps = components(map, cls);
    rep.all_disks = std::all_of(comps.begin(), comps.end(), [](const Component& c) {
        return c.cls == ComponentClass::Disk;
    });
    return rep;
}

}  // namespace zz
