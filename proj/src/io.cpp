#include "zz/io.hpp"

#include <sstream>

namespace zz {

using nlohmann::json;

namespace {

void require_keys(const json& j, std::initializer_list<const char*> keys,
                  const std::string& what) {
    if (!j.is_object()) throw FormatError(what + ": expected a JSON object");
    for (const char* k : keys)
        if (!j.contains(k)) throw FormatError(what + ": missing key '" + std::string(k) + "'");
    for (const auto& [k, v] : j.items()) {
        bool known = false;
        for (const char* want : keys) known = known || k == want;
        if (!known) throw FormatError(what + ": unknown key '" + k + "'");
    }
}

}  // namespace

SurfaceMap parse_tri_json(const json& j) {
    require_keys(j, {"triangles"}, ".tri.json");
    const auto& ts = j["triangles"];
    if (!ts.is_array()) throw FormatError(".tri.json: 'triangles' must be an array");
    std::vector<std::array<std::string, 3>> tris;
    for (const auto& t : ts) {
        if (!t.is_array() || t.size() != 3) throw FormatError(".tri.json: triangle must have 3 ids");
        std::array<std::string, 3> tri;
        for (int i = 0; i < 3; ++i) {
            if (!t[i].is_string()) throw FormatError(".tri.json: vertex ids must be strings");
            tri[i] = t[i].get<std::string>();
        }
        tris.push_back(std::move(tri));
    }
    return SurfaceMap::build_simplicial(tris);
}

SurfaceMap parse_map_json(const json& j) {
    require_keys(j, {"faces", "gluing"}, ".map.json");
    if (!j["faces"].is_number_integer()) throw FormatError(".map.json: 'faces' must be an integer");
    int nf = j["faces"].get<int>();
    if (!j["gluing"].is_array()) throw FormatError(".map.json: 'gluing' must be an array");
    std::vector<GluingEntry> entries;
    for (const auto& e : j["gluing"]) {
        if (!e.is_array() || e.size() != 3 || !e[0].is_array() || e[0].size() != 2 ||
            !e[1].is_array() || e[1].size() != 2 || !e[2].is_number_integer())
            throw FormatError(".map.json: gluing entry must be [[f,s],[f',s'],flip]");
        int flip = e[2].get<int>();
        if (flip != 0 && flip != 1) throw FormatError(".map.json: flip must be 0 or 1");
        entries.push_back({e[0][0].get<int>(), e[0][1].get<int>(), e[1][0].get<int>(),
                           e[1][1].get<int>(), flip == 1});
    }
    return SurfaceMap::build_glued(nf, entries);
}

SurfaceMap parse_surface_json(const json& j) {
    if (j.is_object() && j.contains("triangles")) return parse_tri_json(j);
    if (j.is_object() && j.contains("gluing")) return parse_map_json(j);
    throw FormatError("input is neither a .tri.json nor a .map.json object");
}

DirectedEmbeddingSpec parse_dig_json(const json& j) {
    require_keys(j, {"arcs", "faces"}, ".dig.json");
    DirectedEmbeddingSpec spec;
    if (!j["arcs"].is_array() || !j["faces"].is_array())
        throw FormatError(".dig.json: 'arcs' and 'faces' must be arrays");
    for (const auto& a : j["arcs"]) {
        if (!a.is_array() || a.size() != 2 || !a[0].is_string() || !a[1].is_string())
            throw FormatError(".dig.json: arc must be [tail, head] strings");
        spec.arcs.push_back({a[0].get<std::string>(), a[1].get<std::string>()});
    }
    for (const auto& w : j["faces"]) {
        if (!w.is_array()) throw FormatError(".dig.json: face must be an array of slots");
        std::vector<DirectedEmbeddingSpec::Slot> walk;
        for (const auto& sl : w) {
            if (!sl.is_array() || sl.size() != 2 || !sl[0].is_number_integer() ||
                !sl[1].is_number_integer())
                throw FormatError(".dig.json: slot must be [arcIdx, sense]");
            int sense = sl[1].get<int>();
            if (sense != 1 && sense != -1) throw FormatError(".dig.json: sense must be 1 or -1");
            walk.push_back({sl[0].get<int>(), sense == 1});
        }
        spec.faces.push_back(std::move(walk));
    }
    return spec;
}

json emit_tri_json(const SurfaceMap& map) {
    json ts = json::array();
    for (const auto& t : map.triangles()) ts.push_back({t[0], t[1], t[2]});
    return json{{"triangles", ts}};
}

json emit_map_json(const SurfaceMap& map) {
    json gs = json::array();
    for (Side s = 0; s < map.side_count(); ++s) {
        Side t = map.glue(s);
        if (t < s) continue;
        gs.push_back({{face_of(s), slot_of(s)}, {face_of(t), slot_of(t)}, map.flip(s) ? 1 : 0});
    }
    return json{{"faces", map.face_count()}, {"gluing", gs}};
}

json emit_dig_json(const DirectedEmbeddingSpec& spec) {
    json arcs = json::array();
    for (const auto& a : spec.arcs) arcs.push_back({a.tail, a.head});
    json faces = json::array();
    for (const auto& w : spec.faces) {
        json walk = json::array();
        for (const auto& sl : w) walk.push_back({sl.arc, sl.forward ? 1 : -1});
        faces.push_back(walk);
    }
    return json{{"arcs", arcs}, {"faces", faces}};
}

std::string digraph_to_dot(const SurfaceMap& map, const EmbeddedDigraph& g) {
    std::ostringstream os;
    os << "digraph gamma_ii {\n";
    for (Vertex v : g.nodes) os << "  \"" << map.vertex_name(v) << "\";\n";
    for (const auto& a : g.arcs)
        os << "  \"" << map.vertex_name(a.tail) << "\" -> \"" << map.vertex_name(a.head)
           << "\" [label=\"e" << a.edge << "\"];\n";
    os << "}\n";
    return os.str();
}

std::string subgraph_to_dot(const SurfaceMap& map, const MonodromySubgraphs& gs, int which) {
    (void)map;
    std::ostringstream os;
    os << "graph g" << which + 1 << " {\n";
    for (Face f : gs.members[which]) os << "  f" << f << ";\n";
    for (auto [a, b] : gs.adjacency[which]) os << "  f" << a << " -- f" << b << ";\n";
    os << "}\n";
    return os.str();
}

std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string digest_hex(const std::string& data) {
    static const char* hex = "0123456789abcdef";
    std::uint64_t h = fnv1a64(data);
    std::string out = "fnv1a:";
    for (int i = 15; i >= 0; --i) out += hex[(h >> (4 * i)) & 0xF];
    return out;
}

}  // namespace zz
