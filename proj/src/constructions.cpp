#include "zz/constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace zz {

namespace {

struct WalkPoint {
    std::string tail;
    std::string head;
};

WalkPoint slot_endpoints(const DirectedEmbeddingSpec& spec,
                         const DirectedEmbeddingSpec::Slot& sl) {
    const auto& a = spec.arcs[sl.arc];
    if (sl.forward) return {a.tail, a.head};
    return {a.head, a.tail};
}

}  // namespace

void validate_embedding_spec(const DirectedEmbeddingSpec& spec) {
    if (spec.arcs.empty() || spec.faces.empty())
        throw FormatError("embedding spec needs at least one arc and one face");
    std::vector<int> uses(spec.arcs.size(), 0);
    for (const auto& walk : spec.faces) {
        if (walk.empty()) throw FormatError("empty face walk");
        for (const auto& sl : walk) {
            if (sl.arc < 0 || sl.arc >= static_cast<int>(spec.arcs.size()))
                throw FormatError("face walk references arc " + std::to_string(sl.arc) +
                                  " out of range");
            uses[sl.arc]++;
        }
    }
    for (int a = 0; a < static_cast<int>(spec.arcs.size()); ++a)
        if (uses[a] != 2)
            throw FormatError("arc " + std::to_string(a) + " referenced " +
                              std::to_string(uses[a]) + " times (want 2)");
    for (const auto& walk : spec.faces) {
        const int n = static_cast<int>(walk.size());
        for (int i = 0; i < n; ++i) {
            if (slot_endpoints(spec, walk[i]).head != slot_endpoints(spec, walk[(i + 1) % n]).tail)
                throw FormatError("face walk does not close head-to-tail");
        }
    }

    // simple digraph: no loops, no second edge between a vertex pair
    std::set<std::pair<std::string, std::string>> pairs;
    for (const auto& a : spec.arcs) {
        if (a.tail == a.head) throw NotSimpleDigraph("loop at vertex " + a.tail);
        auto key = std::minmax(a.tail, a.head);
        if (!pairs.insert({key.first, key.second}).second)
            throw NotSimpleDigraph("multiple edges between " + a.tail + " and " + a.head);
    }

    // Eulerian: balanced and connected
    std::map<std::string, int> indeg, outdeg;
    std::map<std::string, std::vector<std::string>> adj;
    for (const auto& a : spec.arcs) {
        outdeg[a.tail]++;
        indeg[a.head]++;
        adj[a.tail].push_back(a.head);
        adj[a.head].push_back(a.tail);
    }
    for (const auto& [v, d] : outdeg)
        if (indeg[v] != d)
            throw NotEulerian("vertex " + v + " has in-degree " + std::to_string(indeg[v]) +
                              " and out-degree " + std::to_string(d));
    for (const auto& [v, d] : indeg)
        if (outdeg[v] != d)
            throw NotEulerian("vertex " + v + " has in-degree " + std::to_string(d) +
                              " and out-degree " + std::to_string(outdeg[v]));
    {
        std::set<std::string> vis{spec.arcs.front().tail};
        std::vector<std::string> stack{spec.arcs.front().tail};
        while (!stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            for (const auto& w : adj[v])
                if (vis.insert(w).second) stack.push_back(w);
        }
        if (vis.size() != adj.size()) throw NotEulerian("digraph is not connected");
    }

    // every face a directed cycle: senses within a walk must agree
    for (const auto& walk : spec.faces) {
        bool f0 = walk.front().forward;
        for (const auto& sl : walk)
            if (sl.forward != f0)
                throw FaceNotDirectedCycle("face walk mixes arc senses");
    }

    // closed 2-cell: every boundary walk is a simple closed curve
    for (const auto& walk : spec.faces) {
        std::set<std::string> seen;
        for (const auto& sl : walk)
            if (!seen.insert(slot_endpoints(spec, sl).tail).second)
                throw NotClosed2Cell("face walk repeats vertex " + slot_endpoints(spec, sl).tail);
    }
}

BuiltT build_T(const DirectedEmbeddingSpec& spec) {
    validate_embedding_spec(spec);

    std::set<std::string> vertex_names;
    for (const auto& a : spec.arcs) {
        vertex_names.insert(a.tail);
        vertex_names.insert(a.head);
    }

    // one triangle per (face, slot)
    std::vector<std::vector<Face>> tri(spec.faces.size());
    int nf = 0;
    for (int fi = 0; fi < static_cast<int>(spec.faces.size()); ++fi)
        for (int sl = 0; sl < static_cast<int>(spec.faces[fi].size()); ++sl)
            tri[fi].push_back(nf++);

    std::vector<GluingEntry> gluing;
    std::map<int, std::vector<std::pair<int, int>>> arc_slots;
    for (int fi = 0; fi < static_cast<int>(spec.faces.size()); ++fi) {
        const int n = static_cast<int>(spec.faces[fi].size());
        for (int sl = 0; sl < n; ++sl) {
            gluing.push_back({tri[fi][sl], 1, tri[fi][(sl + 1) % n], 2, false});
            arc_slots[spec.faces[fi][sl].arc].push_back({fi, sl});
        }
    }
    for (const auto& [arc, occ] : arc_slots) {
        auto [o1, o2] = std::pair{occ[0], occ[1]};
        bool fwd1 = spec.faces[o1.first][o1.second].forward;
        bool fwd2 = spec.faces[o2.first][o2.second].forward;
        gluing.push_back({tri[o1.first][o1.second], 0, tri[o2.first][o2.second], 0, fwd1 == fwd2});
    }

    std::vector<CornerName> names;
    std::vector<std::string> apex_names(spec.faces.size());
    for (int fi = 0; fi < static_cast<int>(spec.faces.size()); ++fi) {
        std::string apex = "F" + std::to_string(fi);
        while (vertex_names.count(apex)) apex += "_";
        apex_names[fi] = apex;
        for (int sl = 0; sl < static_cast<int>(spec.faces[fi].size()); ++sl) {
            auto ends = slot_endpoints(spec, spec.faces[fi][sl]);
            names.push_back({tri[fi][sl], 0, ends.tail});
            names.push_back({tri[fi][sl], 1, ends.head});
            names.push_back({tri[fi][sl], 2, apex});
        }
    }

    SurfaceMap map = SurfaceMap::build_glued(nf, gluing, names);
    ZigzagSet zs = all_zigzags(map);

    // Proposition 3: select, per face and slot, the zigzag through
    // (e_i, e'_i, e''_i, e_{i+2}) following the arc directions
    std::vector<int> bits(zs.k(), -1);
    for (int fi = 0; fi < static_cast<int>(spec.faces.size()); ++fi) {
        for (int sl = 0; sl < static_cast<int>(spec.faces[fi].size()); ++sl) {
            int dir = spec.faces[fi][sl].forward ? 0 : 1;
            State st = make_state(side_at(tri[fi][sl], 0), dir);
            const auto& loc = zs.locate(st);
            if (bits[loc.pair] < 0)
                bits[loc.pair] = loc.orient;
            else if (bits[loc.pair] != loc.orient)
                throw InvariantViolation("conflicting zigzag seeds in build_T");
        }
    }
    for (int b : bits)
        if (b < 0) throw InvariantViolation("zigzag pair not covered by build_T seeds");

    BuiltT out{std::move(map), std::move(zs), ZOrientation{}, {}, tri};
    out.tau.bits.assign(bits.begin(), bits.end());
    for (int fi = 0; fi < static_cast<int>(spec.faces.size()); ++fi)
        out.apex_of_face.push_back(out.map.vertex_of(tri[fi][0], 2));
    return out;
}

namespace {

// parity union-find for the orientation constraint system
struct ParityUF {
    std::vector<int> parent;
    std::vector<int> rel;  // bit(x) ^ bit(parent(x))
    explicit ParityUF(int n) : parent(n), rel(n, 0) { std::iota(parent.begin(), parent.end(), 0); }
    std::pair<int, int> find(int x) {
        if (parent[x] == x) return {x, 0};
        auto [r, p] = find(parent[x]);
        parent[x] = r;
        rel[x] ^= p;
        return {r, rel[x]};
    }
    // bit(x) ^ bit(y) = d ; returns false on contradiction
    bool unite(int x, int y, int d) {
        auto [rx, px] = find(x);
        auto [ry, py] = find(y);
        if (rx == ry) return (px ^ py) == d;
        parent[rx] = ry;
        rel[rx] = px ^ py ^ d;
        return true;
    }
};

}  // namespace

ShredResult shred_face(const SurfaceMap& map, const ZigzagSet& zs, const ZOrientation& tau,
                       Face f) {
    Classification cls = classify(map, zs, tau);
    if (cls.face_types[f] != FaceType::II)
        throw PreconditionError("face " + std::to_string(f) + " is not of type II");

    const int old_nf = map.face_count();
    const int nf = old_nf + 2;
    const std::array<Face, 3> child = {f, old_nf, old_nf + 1};

    // old side -> surviving side
    auto side_image = [&](Side s) -> Side {
        if (face_of(s) != f) return s;
        return side_at(child[slot_of(s)], 0);
    };

    std::vector<GluingEntry> gluing;
    for (Side s = 0; s < map.side_count(); ++s) {
        Side t = map.glue(s);
        if (t < s) continue;
        Side a = side_image(s), b = side_image(t);
        gluing.push_back({face_of(a), slot_of(a), face_of(b), slot_of(b), map.flip(s)});
    }
    for (int j = 0; j < 3; ++j)
        gluing.push_back({child[j], 1, child[(j + 1) % 3], 2, false});

    std::set<std::string> used;
    for (Vertex v = 0; v < map.vertex_count(); ++v) used.insert(map.vertex_name(v));
    std::string w = "w0";
    for (int i = 1; used.count(w); ++i) w = "w" + std::to_string(i);

    std::vector<CornerName> names;
    for (Face g = 0; g < old_nf; ++g) {
        if (g == f) continue;
        for (int i = 0; i < 3; ++i) names.push_back({g, i, map.vertex_name(map.vertex_of(g, i))});
    }
    for (int j = 0; j < 3; ++j) {
        names.push_back({child[j], 0, map.vertex_name(map.vertex_of(f, j))});
        names.push_back({child[j], 1, map.vertex_name(map.vertex_of(f, (j + 1) % 3))});
        names.push_back({child[j], 2, w});
    }

    SurfaceMap map2 = SurfaceMap::build_glued(nf, gluing, names);
    ZigzagSet zs2 = all_zigzags(map2);

    std::vector<Edge> edge_map(map.edge_count());
    for (Edge e = 0; e < map.edge_count(); ++e)
        edge_map[e] = map2.edge_of(side_image(map.sides_of(e).first));

    // old type-II direction expressed in the new map's canonical frame
    auto old_dir_new_frame = [&](Edge e) {
        Side s_new = side_image(map.sides_of(e).first);
        return map2.canonical_dir(s_new, cls.edge_dir[e]);
    };

    // constraints: type-I edges oppose, type-II edges keep the tau direction
    const int K = zs2.k();
    std::vector<std::vector<std::pair<int, int>>> trav(map2.edge_count());
    for (int p = 0; p < K; ++p)
        for (State st : zs2.oriented(p, 0).states) {
            Side s = state_side(st);
            trav[map2.edge_of(s)].push_back({p, map2.canonical_dir(s, state_dir(st))});
        }
    ParityUF uf(K);
    std::map<int, int> pinned;  // root -> bit value
    auto pin = [&](int p, int v) {
        auto [r, off] = uf.find(p);
        auto it = pinned.find(r);
        if (it == pinned.end())
            pinned[r] = v ^ off;
        else if (it->second != (v ^ off))
            throw OrientationUnsatisfiable("pinned bits conflict while shredding");
    };
    for (Edge e = 0; e < map.edge_count(); ++e) {
        const auto& ts = trav[edge_map[e]];
        if (ts.size() != 2) throw InvariantViolation("edge not double-covered after shred");
        auto [p1, d1] = ts[0];
        auto [p2, d2] = ts[1];
        if (cls.edge_types[e] == EdgeType::I) {
            if (p1 == p2) {
                if (d1 == d2)
                    throw OrientationUnsatisfiable("type-I edge rides one zigzag in one direction");
            } else if (!uf.unite(p1, p2, d1 ^ d2 ^ 1)) {
                throw OrientationUnsatisfiable("type-I constraints contradict");
            }
        } else {
            int D = old_dir_new_frame(e);
            pin(p1, d1 ^ D);
            pin(p2, d2 ^ D);
        }
    }
    // normalize pins after all unions
    {
        std::map<int, int> norm;
        for (auto [r, v] : pinned) {
            auto [root, off] = uf.find(r);
            int want = v ^ off;
            auto it = norm.find(root);
            if (it == norm.end())
                norm[root] = want;
            else if (it->second != want)
                throw OrientationUnsatisfiable("pinned bits conflict while shredding");
        }
        pinned = std::move(norm);
    }
    std::vector<int> roots;
    for (int p = 0; p < K; ++p) {
        auto [r, off] = uf.find(p);
        if (r == p && !pinned.count(r)) roots.push_back(r);
    }
    if (roots.size() > 20)
        throw OrientationUnsatisfiable("too many free zigzag components while shredding");

    for (std::uint64_t mask = 0;; ++mask) {
        if (mask >= (std::uint64_t{1} << roots.size()))
            throw OrientationUnsatisfiable(
                "no orientation of the shredded map preserves edge types");
        ZOrientation tau2;
        tau2.bits.resize(K);
        for (int p = 0; p < K; ++p) {
            auto [r, off] = uf.find(p);
            int base;
            if (auto it = pinned.find(r); it != pinned.end()) {
                base = it->second;
            } else {
                int i = static_cast<int>(std::lower_bound(roots.begin(), roots.end(), r) -
                                         roots.begin());
                base = static_cast<int>((mask >> i) & 1);
            }
            tau2.bits[p] = static_cast<std::uint8_t>(base ^ off);
        }
        Classification cls2 = classify(map2, zs2, tau2);
        bool ok = true;
        for (Edge e = 0; e < map.edge_count() && ok; ++e) {
            if (cls2.edge_types[edge_map[e]] != cls.edge_types[e]) ok = false;
            if (ok && cls.edge_types[e] == EdgeType::II &&
                cls2.edge_dir[edge_map[e]] != old_dir_new_frame(e))
                ok = false;
        }
        for (Face c : child)
            if (cls2.face_types[c] != FaceType::I) ok = false;
        if (!ok) continue;

        ShredResult out{std::move(map2), std::move(zs2), std::move(tau2), {}, std::move(edge_map), 1};
        out.face_children.resize(old_nf);
        for (Face g = 0; g < old_nf; ++g)
            out.face_children[g] = (g == f) ? std::vector<Face>{child[0], child[1], child[2]}
                                            : std::vector<Face>{g};
        return out;
    }
}

ShredResult shred_to_type_I(const SurfaceMap& map, const ZigzagSet& zs, const ZOrientation& tau) {
    ShredResult acc{map, zs, tau, {}, {}, 0};
    acc.face_children.resize(map.face_count());
    for (Face g = 0; g < map.face_count(); ++g) acc.face_children[g] = {g};
    acc.edge_map.resize(map.edge_count());
    std::iota(acc.edge_map.begin(), acc.edge_map.end(), 0);

    while (true) {
        Classification cls = classify(acc.map, acc.zigzags, acc.tau);
        Face target = -1;
        for (Face g = 0; g < acc.map.face_count(); ++g)
            if (cls.face_types[g] == FaceType::II) {
                target = g;
                break;
            }
        if (target < 0) break;
        ShredResult step = shred_face(acc.map, acc.zigzags, acc.tau, target);
        for (auto& children : acc.face_children) {
            std::vector<Face> next;
            for (Face g : children) {
                const auto& img = step.face_children[g];
                next.insert(next.end(), img.begin(), img.end());
            }
            children = std::move(next);
        }
        for (Edge& e : acc.edge_map) e = step.edge_map[e];
        acc.map = std::move(step.map);
        acc.zigzags = std::move(step.zigzags);
        acc.tau = std::move(step.tau);
        acc.steps += 1;
    }
    return acc;
}

DirectedEmbeddingSpec extract_gamma_II_spec(const SurfaceMap& map, const ZigzagSet& zs,
                                            const ZOrientation& tau) {
    Classification cls = classify(map, zs, tau);
    if (!cls.all_faces_type_I())
        throw NotHomogeneous("zigzags are not homogeneous (mixed face types)");
    if (!is_homogeneous(map, zs, tau)) throw NotHomogeneous("zigzags are not homogeneous");

    DirectedEmbeddingSpec spec;
    std::vector<int> arc_of_edge(map.edge_count(), -1);
    for (Edge e = 0; e < map.edge_count(); ++e) {
        if (cls.edge_types[e] != EdgeType::II) continue;
        auto [t, h] = type2_arc_endpoints(map, cls, e);
        arc_of_edge[e] = static_cast<int>(spec.arcs.size());
        spec.arcs.push_back({map.vertex_name(t), map.vertex_name(h)});
    }
    RegionDecomposition regions = decompose_regions(map, cls);
    for (const auto& reg : regions.regions) {
        if (reg.circles.size() != 1 || !reg.circles.front().coherent_forward)
            throw InvariantViolation("homogeneous map with non-disk or incoherent region");
        std::vector<DirectedEmbeddingSpec::Slot> walk;
        for (const auto& st : reg.circles.front().steps)
            walk.push_back({arc_of_edge[map.edge_of(st.side)], true});
        spec.faces.push_back(std::move(walk));
    }
    return spec;
}

RoundtripReport extract_and_roundtrip(const SurfaceMap& map, const ZigzagSet& zs,
                                      const ZOrientation& tau) {
    DirectedEmbeddingSpec spec = extract_gamma_II_spec(map, zs, tau);
    BuiltT built = build_T(spec);
    Classification cls = classify(map, zs, tau);
    RegionDecomposition regions = decompose_regions(map, cls);

    RoundtripReport rep{true, true, ""};
    auto fail = [&](const std::string& why) {
        rep.isomorphic = false;
        if (rep.detail.empty()) rep.detail = why;
    };

    if (built.map.face_count() != map.face_count() ||
        built.map.edge_count() != map.edge_count() ||
        built.map.vertex_count() != map.vertex_count())
        fail("cell counts differ");

    // corner correspondence: the wall side of each host face maps onto side 0
    // of the T-triangle at its (region, slot) position
    std::vector<Corner> img(3 * map.face_count(), -1);
    if (rep.isomorphic) {
        std::vector<std::map<Side, int>> slot_of_wall(regions.regions.size());
        for (int r = 0; r < static_cast<int>(regions.regions.size()); ++r) {
            const auto& steps = regions.regions[r].circles.front().steps;
            for (int sl = 0; sl < static_cast<int>(steps.size()); ++sl)
                slot_of_wall[r][steps[sl].side] = sl;
        }
        for (Face f = 0; f < map.face_count(); ++f) {
            int wall_slot = -1;
            for (int i = 0; i < 3; ++i)
                if (cls.edge_types[map.edge_of(side_at(f, i))] == EdgeType::II) wall_slot = i;
            Side wall = side_at(f, wall_slot);
            int r = regions.region_of_face[f];
            auto it = slot_of_wall[r].find(wall);
            if (it == slot_of_wall[r].end()) {
                fail("wall side missing from its region walk");
                break;
            }
            const auto& step = regions.regions[r].circles.front().steps[it->second];
            Face t = built.triangle_of_slot[r][it->second];
            Corner tail = step.dir == 0 ? first_corner(wall) : second_corner(wall);
            Corner head = step.dir == 0 ? second_corner(wall) : first_corner(wall);
            img[tail] = side_at(t, 0);                   // corner 0
            img[head] = first_corner(side_at(t, 1));     // corner 1
            img[3 * f + (wall_slot + 2) % 3] = first_corner(side_at(t, 2));  // apex corner
        }
    }

    std::vector<Side> side_img(3 * map.face_count(), -1);
    std::vector<int> side_rel(3 * map.face_count(), 0);  // 1 if corner order reversed
    if (rep.isomorphic) {
        for (Side s = 0; s < map.side_count() && rep.isomorphic; ++s) {
            Corner d1 = img[first_corner(s)], d2 = img[second_corner(s)];
            Face t = face_of(d1);
            if (t != face_of(d2)) {
                fail("corner images split across faces");
                break;
            }
            bool found = false;
            for (int j = 0; j < 3 && !found; ++j) {
                Side cand = side_at(t, j);
                if (first_corner(cand) == d1 && second_corner(cand) == d2) {
                    side_img[s] = cand;
                    side_rel[s] = 0;
                    found = true;
                } else if (first_corner(cand) == d2 && second_corner(cand) == d1) {
                    side_img[s] = cand;
                    side_rel[s] = 1;
                    found = true;
                }
            }
            if (!found) fail("corner images are not a side");
        }
    }
    if (rep.isomorphic) {
        for (Side s = 0; s < map.side_count() && rep.isomorphic; ++s) {
            Side t_host = map.glue(s);
            // the corner glued to first_corner(s) in the host
            Corner e1 = map.flip(s) ? first_corner(t_host) : second_corner(t_host);
            Side s2 = side_img[s];
            if (built.map.glue(s2) != side_img[t_host]) {
                fail("gluing not preserved");
                break;
            }
            Corner d1 = img[first_corner(s)];
            Corner glued = built.map.flip(s2)
                               ? (d1 == first_corner(s2) ? first_corner(built.map.glue(s2))
                                                         : second_corner(built.map.glue(s2)))
                               : (d1 == first_corner(s2) ? second_corner(built.map.glue(s2))
                                                         : first_corner(built.map.glue(s2)));
            if (glued != img[e1]) {
                fail("corner identification not preserved");
                break;
            }
        }
    }

    if (rep.isomorphic) {
        Classification cls2 = classify(built.map, built.zigzags, built.tau);
        for (Edge e = 0; e < map.edge_count(); ++e) {
            Side cs = map.canonical_side(e);
            Edge e2 = built.map.edge_of(side_img[cs]);
            if (cls2.edge_types[e2] != cls.edge_types[e]) {
                rep.orientation_match = false;
                rep.detail = "edge type mismatch after roundtrip";
                break;
            }
            if (cls.edge_types[e] == EdgeType::II) {
                int d = cls.edge_dir[e];
                int d_img = side_rel[cs] ? 1 - d : d;
                if (built.map.canonical_dir(side_img[cs], d_img) != cls2.edge_dir[e2]) {
                    rep.orientation_match = false;
                    rep.detail = "type-II direction mismatch after roundtrip";
                    break;
                }
            }
        }
    } else {
        rep.orientation_match = false;
    }
    return rep;
}

}  // namespace zz
