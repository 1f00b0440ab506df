#include "zz/surface_map.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace zz {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[a] = b;
    }
};

}  // namespace

SurfaceMap::SurfaceMap(int face_count, std::vector<int> glue, std::vector<unsigned char> flip,
                       const std::vector<CornerName>& names)
    : face_count_(face_count), glue_(std::move(glue)), flip_(std::move(flip)) {
    const int ns = 3 * face_count_;
    if (static_cast<int>(glue_.size()) != ns || static_cast<int>(flip_.size()) != ns)
        throw GluingError("gluing tables must cover all 3F sides");
    for (Side s = 0; s < ns; ++s) {
        if (glue_[s] < 0 || glue_[s] >= ns)
            throw GluingError("side " + std::to_string(s) + " glued out of range");
        if (glue_[s] == s)
            throw GluingError("side " + std::to_string(s) + " glued to itself");
        if (glue_[glue_[s]] != s)
            throw GluingError("gluing is not an involution at side " + std::to_string(s));
        if (flip_[s] != flip_[glue_[s]])
            throw GluingError("alignment bit mismatch at side " + std::to_string(s));
    }
    compute_derived(names);
}

void SurfaceMap::compute_derived(const std::vector<CornerName>& names) {
    const int ns = 3 * face_count_;

    // edges = side pairs
    side_edge_.assign(ns, -1);
    for (Side s = 0; s < ns; ++s) {
        if (side_edge_[s] >= 0) continue;
        Side t = glue_[s];
        int e = static_cast<int>(edge_sides_.size());
        side_edge_[s] = e;
        side_edge_[t] = e;
        edge_sides_.emplace_back(std::min(s, t), std::max(s, t));
    }

    // vertices = corner orbits under the gluing identifications
    UnionFind uf(ns);
    for (Side s = 0; s < ns; ++s) {
        Side t = glue_[s];
        if (t < s) continue;
        if (flip_[s]) {
            uf.unite(first_corner(s), first_corner(t));
            uf.unite(second_corner(s), second_corner(t));
        } else {
            uf.unite(first_corner(s), second_corner(t));
            uf.unite(second_corner(s), first_corner(t));
        }
    }
    corner_vertex_.assign(ns, -1);
    std::vector<int> root_id(ns, -1);
    vertex_count_ = 0;
    for (Corner c = 0; c < ns; ++c) {
        int r = uf.find(c);
        if (root_id[r] < 0) root_id[r] = vertex_count_++;
        corner_vertex_[c] = root_id[r];
    }

    vertex_names_.assign(vertex_count_, {});
    for (const auto& nm : names) {
        if (nm.face < 0 || nm.face >= face_count_ || nm.corner < 0 || nm.corner > 2)
            throw GluingError("vertex name hint out of range");
        vertex_names_[corner_vertex_[3 * nm.face + nm.corner]] = nm.name;
    }
    for (Vertex v = 0; v < vertex_count_; ++v)
        if (vertex_names_[v].empty()) vertex_names_[v] = "v" + std::to_string(v);

    vertex_corner_count_.assign(vertex_count_, 0);
    for (Corner c = 0; c < ns; ++c) vertex_corner_count_[corner_vertex_[c]]++;

    vertex_edges_.assign(vertex_count_, {});
    for (Edge e = 0; e < edge_count(); ++e) {
        auto [a, b] = edge_endpoints(e);
        vertex_edges_[a].push_back(e);
        if (b != a) vertex_edges_[b].push_back(e);
    }

    // face-adjacency connectivity
    {
        std::vector<char> seen(face_count_, 0);
        std::vector<Face> stack{0};
        if (face_count_ > 0) seen[0] = 1;
        while (!stack.empty()) {
            Face f = stack.back();
            stack.pop_back();
            for (int i = 0; i < 3; ++i) {
                Face g = face_of(glue_[side_at(f, i)]);
                if (!seen[g]) {
                    seen[g] = 1;
                    stack.push_back(g);
                }
            }
        }
        if (std::count(seen.begin(), seen.end(), 1) != face_count_)
            throw DisconnectedError("face-adjacency graph is not connected");
    }

    // orientability: 2-color faces, flip=1 gluings reverse orientation
    {
        orientable_ = true;
        std::vector<int> color(face_count_, -1);
        std::vector<Face> stack{0};
        if (face_count_ > 0) color[0] = 0;
        while (!stack.empty() && orientable_) {
            Face f = stack.back();
            stack.pop_back();
            for (int i = 0; i < 3; ++i) {
                Side s = side_at(f, i);
                Face g = face_of(glue_[s]);
                int want = color[f] ^ (flip_[s] ? 1 : 0);
                if (color[g] < 0) {
                    color[g] = want;
                    stack.push_back(g);
                } else if (color[g] != want) {
                    orientable_ = false;
                    break;
                }
            }
        }
    }
}

std::optional<Vertex> SurfaceMap::vertex_by_name(const std::string& name) const {
    for (Vertex v = 0; v < vertex_count_; ++v)
        if (vertex_names_[v] == name) return v;
    return std::nullopt;
}

std::pair<Vertex, Vertex> SurfaceMap::edge_endpoints(Edge e) const {
    Side s = edge_sides_[e].first;
    return {corner_vertex_[first_corner(s)], corner_vertex_[second_corner(s)]};
}

const std::array<Edge, 3> SurfaceMap::face_edges(Face f) const {
    return {side_edge_[3 * f], side_edge_[3 * f + 1], side_edge_[3 * f + 2]};
}

std::vector<std::array<std::string, 3>> SurfaceMap::triangles() const {
    std::vector<std::array<std::string, 3>> out;
    out.reserve(face_count_);
    for (Face f = 0; f < face_count_; ++f)
        out.push_back({vertex_name(vertex_of(f, 0)), vertex_name(vertex_of(f, 1)),
                       vertex_name(vertex_of(f, 2))});
    return out;
}

SurfaceMap SurfaceMap::build_simplicial(const std::vector<std::array<std::string, 3>>& triangles) {
    const int nf = static_cast<int>(triangles.size());
    if (nf == 0) throw EdgeDegreeError("empty triangle list");
    for (const auto& t : triangles)
        if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2])
            throw EdgeDegreeError("triangle with repeated vertex: {" + t[0] + "," + t[1] + "," +
                                  t[2] + "}");

    // occurrences of each unordered vertex pair
    std::map<std::pair<std::string, std::string>, std::vector<Side>> occ;
    for (int f = 0; f < nf; ++f) {
        for (int i = 0; i < 3; ++i) {
            std::string a = triangles[f][i], b = triangles[f][(i + 1) % 3];
            if (b < a) std::swap(a, b);
            occ[{a, b}].push_back(side_at(f, i));
        }
    }
    std::vector<int> glue(3 * nf, -1);
    std::vector<unsigned char> flip(3 * nf, 0);
    for (const auto& [pr, sides] : occ) {
        if (sides.size() != 2)
            throw EdgeDegreeError("vertex pair {" + pr.first + "," + pr.second + "} occurs in " +
                                  std::to_string(sides.size()) + " triangles (want 2)");
        Side s = sides[0], t = sides[1];
        const auto& ts = triangles[face_of(s)];
        const auto& tt = triangles[face_of(t)];
        bool same = ts[slot_of(s)] == tt[slot_of(t)];  // both traverse tail->head identically
        glue[s] = t;
        glue[t] = s;
        flip[s] = flip[t] = same ? 1 : 0;
    }
    // reject the degenerate case of two faces glued along more than one edge
    std::map<std::pair<int, int>, int> shared;
    for (Side s = 0; s < 3 * nf; ++s) {
        Face f = face_of(s), g = face_of(glue[s]);
        if (f < g && ++shared[{f, g}] > 1)
            throw EdgeDegreeError("faces " + std::to_string(f) + " and " + std::to_string(g) +
                                  " share more than one edge");
    }

    // link condition first: the corners of each input id must form a single
    // orbit under the gluing identifications
    {
        UnionFind uf(3 * nf);
        for (Side s = 0; s < 3 * nf; ++s) {
            Side t = glue[s];
            if (t < s) continue;
            if (flip[s]) {
                uf.unite(first_corner(s), first_corner(t));
                uf.unite(second_corner(s), second_corner(t));
            } else {
                uf.unite(first_corner(s), second_corner(t));
                uf.unite(second_corner(s), first_corner(t));
            }
        }
        std::map<std::string, std::set<int>> classes;
        for (int f = 0; f < nf; ++f)
            for (int i = 0; i < 3; ++i) classes[triangles[f][i]].insert(uf.find(3 * f + i));
        for (const auto& [name, orbits] : classes)
            if (orbits.size() != 1)
                throw LinkError("link of vertex '" + name + "' is not a single cycle (" +
                                std::to_string(orbits.size()) + " fans)");
    }

    std::vector<CornerName> names;
    names.reserve(3 * nf);
    for (int f = 0; f < nf; ++f)
        for (int i = 0; i < 3; ++i) names.push_back({f, i, triangles[f][i]});
    return SurfaceMap(nf, std::move(glue), std::move(flip), names);
}

SurfaceMap SurfaceMap::build_glued(int face_count, const std::vector<GluingEntry>& gluing,
                                   const std::vector<CornerName>& names) {
    if (face_count <= 0) throw GluingError("face count must be positive");
    const int ns = 3 * face_count;
    std::vector<int> glue(ns, -1);
    std::vector<unsigned char> flip(ns, 0);
    for (const auto& g : gluing) {
        if (g.f1 < 0 || g.f1 >= face_count || g.f2 < 0 || g.f2 >= face_count || g.s1 < 0 ||
            g.s1 > 2 || g.s2 < 0 || g.s2 > 2)
            throw GluingError("gluing entry out of range");
        Side a = side_at(g.f1, g.s1), b = side_at(g.f2, g.s2);
        if (a == b) throw GluingError("involution has a fixed side: " + std::to_string(a));
        if (glue[a] != -1 || glue[b] != -1)
            throw GluingError("side glued more than once: " +
                              std::to_string(glue[a] != -1 ? a : b));
        glue[a] = b;
        glue[b] = a;
        flip[a] = flip[b] = g.flip ? 1 : 0;
    }
    for (Side s = 0; s < ns; ++s)
        if (glue[s] == -1) throw GluingError("side " + std::to_string(s) + " left unglued");
    return SurfaceMap(face_count, std::move(glue), std::move(flip), names);
}

const char* level_name(ValidationLevel level) {
    switch (level) {
        case ValidationLevel::Surface: return "surface";
        case ValidationLevel::Triangulation: return "triangulation";
        case ValidationLevel::StrictSimplicial: return "strict-simplicial";
    }
    return "?";
}

ValidationReport validate(const SurfaceMap& map, ValidationLevel level) {
    ValidationReport rep{level, ValidationLevel::Surface, {}};
    std::vector<Violation> tri_v, strict_v;

    // surface level holds by construction (involution, single-cycle links by
    // corner-orbit definition, connectivity); recheck the involution anyway
    for (Side s = 0; s < map.side_count(); ++s) {
        if (map.glue(map.glue(s)) != s || map.glue(s) == s) {
            rep.violations.push_back({"side " + std::to_string(s), "gluing is not a fixed-point-free involution"});
        }
    }
    if (!rep.violations.empty()) return rep;

    // triangulation level: the two faces of every edge are distinct
    for (Edge e = 0; e < map.edge_count(); ++e) {
        auto [s, t] = map.sides_of(e);
        if (face_of(s) == face_of(t))
            tri_v.push_back({"edge " + std::to_string(e),
                             "both sides lie in face " + std::to_string(face_of(s))});
    }

    // strict level: simple graph + face-intersection condition
    std::map<std::pair<Vertex, Vertex>, std::vector<Edge>> by_pair;
    for (Edge e = 0; e < map.edge_count(); ++e) {
        auto [a, b] = map.edge_endpoints(e);
        if (a == b) {
            strict_v.push_back({"edge " + std::to_string(e),
                                "loop at vertex " + map.vertex_name(a)});
            continue;
        }
        by_pair[{std::min(a, b), std::max(a, b)}].push_back(e);
    }
    for (const auto& [pr, es] : by_pair)
        if (es.size() > 1)
            strict_v.push_back({"vertices {" + map.vertex_name(pr.first) + "," +
                                    map.vertex_name(pr.second) + "}",
                                std::to_string(es.size()) + " parallel edges"});
    {
        std::vector<std::set<Vertex>> fverts(map.face_count());
        for (Face f = 0; f < map.face_count(); ++f)
            for (int i = 0; i < 3; ++i) fverts[f].insert(map.vertex_of(f, i));
        std::map<std::pair<Face, Face>, int> shared_edges;
        for (Edge e = 0; e < map.edge_count(); ++e) {
            auto [s, t] = map.sides_of(e);
            Face f = face_of(s), g = face_of(t);
            if (f == g) continue;
            shared_edges[{std::min(f, g), std::max(f, g)}]++;
        }
        for (Face f = 0; f < map.face_count(); ++f) {
            for (Face g = f + 1; g < map.face_count(); ++g) {
                int se = 0;
                if (auto it = shared_edges.find({f, g}); it != shared_edges.end()) se = it->second;
                std::vector<Vertex> common;
                std::set_intersection(fverts[f].begin(), fverts[f].end(), fverts[g].begin(),
                                      fverts[g].end(), std::back_inserter(common));
                bool ok = (se == 0 && common.size() <= 1) || (se == 1 && common.size() == 2);
                if (!ok)
                    strict_v.push_back(
                        {"faces {" + std::to_string(f) + "," + std::to_string(g) + "}",
                         "intersection is " + std::to_string(se) + " edges / " +
                             std::to_string(common.size()) + " vertices"});
            }
        }
    }

    rep.achieved = ValidationLevel::Surface;
    if (tri_v.empty()) {
        rep.achieved = ValidationLevel::Triangulation;
        if (strict_v.empty()) rep.achieved = ValidationLevel::StrictSimplicial;
    }
    if (level == ValidationLevel::Triangulation || level == ValidationLevel::StrictSimplicial)
        rep.violations.insert(rep.violations.end(), tri_v.begin(), tri_v.end());
    if (level == ValidationLevel::StrictSimplicial)
        rep.violations.insert(rep.violations.end(), strict_v.begin(), strict_v.end());
    return rep;
}

}  // namespace zz
