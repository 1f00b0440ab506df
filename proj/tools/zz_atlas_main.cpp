// zz-atlas: zigzag / z-orientation analyses of triangulated closed surfaces.
// Subcommands read a map (.tri.json or .map.json) on stdin or --in and write
// JSON reports (or maps, for the construction subcommands) to stdout or --out.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "zz/constructions.hpp"
#include "zz/generators.hpp"
#include "zz/io.hpp"
#include "zz/monodromy.hpp"
#include "zz/structure.hpp"

using nlohmann::json;
using namespace zz;

namespace {

constexpr const char* kToolVersion = "1.0.0";

std::string read_stream(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_stream(const std::string& path, const std::string& data) {
    if (path == "-") {
        std::cout << data;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot open output file: " + path);
    out << data;
}

json parse_json_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw FormatError("input is not valid JSON");
    return j;
}

struct Common {
    std::string in = "-";
    std::string out = "-";
    std::string report_path;
    std::string orientation = "auto";
    std::uint64_t cap = kDefaultOrientationCap;
    bool strict = false;
};

json base_report(const std::string& input_text) {
    return json{{"schema", 1},
                {"tool", "zz-atlas"},
                {"version", kToolVersion},
                {"input_digest", digest_hex(input_text)}};
}

json map_summary(const SurfaceMap& m) {
    return json{{"vertices", m.vertex_count()},
                {"edges", m.edge_count()},
                {"faces", m.face_count()},
                {"euler_characteristic", m.euler_characteristic()},
                {"orientable", m.orientable()}};
}

SurfaceMap load_map(const Common& c, std::string& text_out) {
    text_out = read_stream(c.in);
    SurfaceMap m = parse_surface_json(parse_json_text(text_out));
    if (c.strict) {
        auto rep = validate(m, ValidationLevel::StrictSimplicial);
        if (!rep.ok())
            throw PreconditionError("input fails strict validation (" +
                                    std::to_string(rep.violations.size()) + " violations)");
    }
    return m;
}

std::string orientation_bit_string(const ZOrientation& tau) {
    std::string s;
    for (int p = 0; p < tau.k(); ++p) s += tau.bit(p) ? '1' : '0';
    return s;
}

json orientation_json(const ZOrientation& tau) {
    json j{{"k", tau.k()}, {"bits", orientation_bit_string(tau)}};
    if (tau.k() <= 63) j["index"] = tau.index();
    return j;
}

ZOrientation resolve_orientation(const std::string& spec, const SurfaceMap& m,
                                 const ZigzagSet& zs, std::uint64_t cap) {
    if (spec == "auto") {
        auto tau = find_all_type_I_orientation(m, zs, cap);
        return tau ? *tau : ZOrientation::from_index(0, zs.k());
    }
    if (spec == "all-type-1") {
        auto tau = find_all_type_I_orientation(m, zs, cap);
        if (!tau) throw PreconditionError("no all-type-I z-orientation exists");
        return *tau;
    }
    std::uint64_t idx = 0;
    try {
        idx = std::stoull(spec);
    } catch (const std::exception&) {
        throw FormatError("--orientation must be an index, 'auto', or 'all-type-1'");
    }
    if (zs.k() > 63 || idx >= (std::uint64_t{1} << zs.k()))
        throw ParameterOutOfRange("orientation index out of range (k=" + std::to_string(zs.k()) +
                                  ")");
    return ZOrientation::from_index(idx, zs.k());
}

json classification_json(const SurfaceMap& m, const Classification& cls) {
    json edges = json::array();
    for (Edge e = 0; e < m.edge_count(); ++e) {
        auto [a, b] = m.edge_endpoints(e);
        json je{{"edge", e},
                {"ends", {m.vertex_name(a), m.vertex_name(b)}},
                {"type", cls.edge_types[e] == EdgeType::I ? "I" : "II"}};
        if (cls.edge_types[e] == EdgeType::II) {
            auto [t, h] = type2_arc_endpoints(m, cls, e);
            je["direction"] = {m.vertex_name(t), m.vertex_name(h)};
        }
        edges.push_back(je);
    }
    json faces = json::array();
    for (Face f = 0; f < m.face_count(); ++f)
        faces.push_back(json{{"face", f}, {"type", cls.face_types[f] == FaceType::I ? "I" : "II"}});
    json vertices = json::array();
    for (Vertex v = 0; v < m.vertex_count(); ++v)
        vertices.push_back(json{{"vertex", m.vertex_name(v)},
                                {"type", cls.vertex_types[v] == VertexType::I ? "I" : "II"}});
    int f1 = 0;
    for (Face f = 0; f < m.face_count(); ++f)
        if (cls.face_types[f] == FaceType::I) ++f1;
    json counts{{"edges_type_I", cls.count_edges(EdgeType::I)},
                {"edges_type_II", cls.count_edges(EdgeType::II)},
                {"faces_type_I", f1},
                {"faces_type_II", m.face_count() - f1}};
    return json{{"edges", edges}, {"faces", faces}, {"vertices", vertices}, {"counts", counts}};
}

void emit(const Common& c, const json& j) { write_stream(c.out, j.dump(2) + "\n"); }

void emit_side_report(const Common& c, const json& j) {
    if (!c.report_path.empty()) write_stream(c.report_path, j.dump(2) + "\n");
}

int cmd_validate(const Common& c, const std::string& level_str) {
    std::string input = read_stream(c.in);
    SurfaceMap m = parse_surface_json(parse_json_text(input));
    ValidationLevel level;
    if (level_str == "surface")
        level = ValidationLevel::Surface;
    else if (level_str == "triangulation")
        level = ValidationLevel::Triangulation;
    else if (level_str == "strict")
        level = ValidationLevel::StrictSimplicial;
    else
        throw FormatError("--level must be surface, triangulation, or strict");
    auto rep = validate(m, level);
    json j = base_report(input);
    j["map"] = map_summary(m);
    j["level_requested"] = level_name(rep.requested);
    j["level_achieved"] = level_name(rep.achieved);
    j["ok"] = rep.ok();
    json vs = json::array();
    for (const auto& viol : rep.violations)
        vs.push_back(json{{"where", viol.where}, {"what", viol.what}});
    j["violations"] = vs;
    emit(c, j);
    return 0;
}

int cmd_zigzags(const Common& c) {
    std::string input;
    SurfaceMap m = load_map(c, input);
    auto zs = all_zigzags(m);
    json j = base_report(input);
    j["map"] = map_summary(m);
    j["pairs"] = zs.k();
    json lengths = json::array(), zigzags = json::array();
    for (int p = 0; p < zs.k(); ++p) {
        const auto& z = zs.oriented(p, 0);
        lengths.push_back(z.length());
        json edges = json::array();
        for (State st : z.states) {
            auto d = state_directed_edge(m, st);
            edges.push_back(json{{"edge", d.edge},
                                 {"from", m.vertex_name(d.tail)},
                                 {"to", m.vertex_name(d.head)}});
        }
        zigzags.push_back(json{{"pair", p}, {"length", z.length()}, {"edges", edges}});
    }
    j["lengths"] = lengths;
    j["zigzags"] = zigzags;
    j["z_knotted"] = (zs.k() == 1);
    emit(c, j);
    return 0;
}

int cmd_classify(const Common& c, bool all_type_1_flag) {
    std::string input;
    SurfaceMap m = load_map(c, input);
    auto zs = all_zigzags(m);
    ZOrientation tau =
        resolve_orientation(all_type_1_flag ? "all-type-1" : c.orientation, m, zs, c.cap);
    auto cls = classify(m, zs, tau);
    json j = base_report(input);
    j["map"] = map_summary(m);
    j["orientation"] = orientation_json(tau);
    j["classification"] = classification_json(m, cls);
    emit(c, j);
    return 0;
}

int cmd_structure(const Common& c, const std::string& dot_path) {
    std::string input;
    SurfaceMap m = load_map(c, input);
    auto zs = all_zigzags(m);
    ZOrientation tau = resolve_orientation(c.orientation, m, zs, c.cap);
    auto cls = classify(m, zs, tau);
    if (!cls.all_faces_type_I())
        throw MixedFaceTypes("structure analysis requires an all-type-I orientation");
    auto regions = decompose_regions(m, cls);
    auto g = gamma_II(m, cls, regions);
    auto comps = components(m, cls);
    auto t1 = theorem1_report(m, zs, tau);

    json j = base_report(input);
    j["map"] = map_summary(m);
    j["orientation"] = orientation_json(tau);
    json jc = json::array();
    for (const auto& comp : comps) {
        json e{{"class", component_class_name(comp.cls)},
               {"faces", comp.faces},
               {"boundary_edges", comp.boundary_edges}};
        if (comp.center) e["center"] = m.vertex_name(*comp.center);
        jc.push_back(e);
    }
    j["components"] = jc;
    json nodes = json::array();
    for (Vertex vx : g.nodes) nodes.push_back(m.vertex_name(vx));
    json arcs = json::array();
    for (const auto& a : g.arcs)
        arcs.push_back(json{{"edge", a.edge},
                            {"tail", m.vertex_name(a.tail)},
                            {"head", m.vertex_name(a.head)}});
    json faces = json::array();
    for (const auto& walk : g.faces) {
        json w = json::array();
        for (const auto& sl : walk) w.push_back(json{{"arc", sl.arc}, {"forward", sl.forward}});
        faces.push_back(w);
    }
    j["gamma_ii"] = json{{"nodes", nodes}, {"arcs", arcs}, {"faces", faces}};
    j["theorem1"] = json{{"homogeneous", t1.homogeneous},
                         {"closed_2cell_eulerian", t1.closed_2cell},
                         {"all_disks", t1.all_disks}};
    if (!dot_path.empty()) write_stream(dot_path, digraph_to_dot(m, g));
    emit(c, j);
    return 0;
}

int cmd_monodromy(const Common& c, const std::string& gi_dot_prefix) {
    std::string input;
    SurfaceMap m = load_map(c, input);
    json j = base_report(input);
    j["map"] = map_summary(m);
    json faces = json::array();
    std::map<std::string, int> histogram;
    for (Face f = 0; f < m.face_count(); ++f) {
        auto rec = monodromy_record(m, f);
        histogram[mtype_name(rec.type)]++;
        json perm = json::array();
        for (int code = 0; code < 6; ++code) perm.push_back(rec.perm.image[code]);
        json witness = json::array();
        if (rec.witness[0] >= 0)
            for (int x : rec.witness) witness.push_back(x);
        faces.push_back(json{{"face", f},
                             {"type", mtype_name(rec.type)},
                             {"witness", witness},
                             {"perm", perm}});
    }
    j["faces"] = faces;
    j["histogram"] = histogram;
    auto gs = monodromy_subgraphs(m);
    j["g_forests"] = json{{"G1", gs.g1_forest()}, {"G2", gs.g2_forest()}};
    if (!gi_dot_prefix.empty())
        for (int i = 0; i < 7; ++i)
            write_stream(gi_dot_prefix + ".g" + std::to_string(i + 1) + ".dot",
                         subgraph_to_dot(m, gs, i));
    emit(c, j);
    return 0;
}

int cmd_shred(const Common& c) {
    std::string input;
    SurfaceMap m = load_map(c, input);
    auto zs = all_zigzags(m);
    ZOrientation tau = resolve_orientation(c.orientation, m, zs, c.cap);
    auto res = shred_to_type_I(m, zs, tau);
    emit(c, emit_map_json(res.map));
    json r = base_report(input);
    r["map_in"] = map_summary(m);
    r["map_out"] = map_summary(res.map);
    r["orientation_in"] = orientation_json(tau);
    r["orientation_out"] = orientation_json(res.tau);
    r["steps"] = res.steps;
    r["face_children"] = res.face_children;
    r["edge_map"] = res.edge_map;
    emit_side_report(c, r);
    return 0;
}

int cmd_build_t(const Common& c) {
    std::string input = read_stream(c.in);
    DirectedEmbeddingSpec spec = parse_dig_json(parse_json_text(input));
    auto built = build_T(spec);
    emit(c, emit_map_json(built.map));
    json r = base_report(input);
    r["map_out"] = map_summary(built.map);
    r["orientation"] = orientation_json(built.tau);
    json apexes = json::array();
    for (Vertex vx : built.apex_of_face) apexes.push_back(built.map.vertex_name(vx));
    r["apexes"] = apexes;
    emit_side_report(c, r);
    return 0;
}

int cmd_extract(const Common& c) {
    std::string input;
    SurfaceMap m = load_map(c, input);
    auto zs = all_zigzags(m);
    ZOrientation tau = resolve_orientation(c.orientation, m, zs, c.cap);
    auto spec = extract_gamma_II_spec(m, zs, tau);
    emit(c, emit_dig_json(spec));
    auto round = extract_and_roundtrip(m, zs, tau);
    json r = base_report(input);
    r["map"] = map_summary(m);
    r["orientation"] = orientation_json(tau);
    r["roundtrip"] = json{{"isomorphic", round.isomorphic},
                          {"orientation_match", round.orientation_match},
                          {"detail", round.detail}};
    emit_side_report(c, r);
    return 0;
}

int cmd_sweep(const Common& c) {
    std::string input;
    SurfaceMap m = load_map(c, input);
    auto zs = all_zigzags(m);
    json j = base_report(input);
    j["map"] = map_summary(m);
    j["pairs"] = zs.k();
    json records = json::array();
    enumerate_z_orientations(
        zs,
        [&](const ZOrientation& tau) {
            auto cls = classify(m, zs, tau);
            int f1 = 0;
            for (Face f = 0; f < m.face_count(); ++f)
                if (cls.face_types[f] == FaceType::I) ++f1;
            json rec{{"index", tau.index()},
                     {"faces_type_I", f1},
                     {"faces_type_II", m.face_count() - f1},
                     {"all_type_I", cls.all_faces_type_I()},
                     {"all_type_II", cls.all_faces_type_II()}};
            if (cls.all_faces_type_I()) {
                auto t1 = theorem1_report(m, zs, tau);
                rec["homogeneous"] = t1.homogeneous;
                rec["theorem1"] = json{{"homogeneous", t1.homogeneous},
                                       {"closed_2cell_eulerian", t1.closed_2cell},
                                       {"all_disks", t1.all_disks}};
            } else {
                rec["homogeneous"] = nullptr;
                rec["theorem1"] = nullptr;
            }
            records.push_back(rec);
        },
        c.cap);
    j["records"] = records;
    emit(c, j);
    return 0;
}

int cmd_gen(const Common& c, const std::string& family, int n, int m, int k, std::uint64_t seed,
            int size) {
    SurfaceMap out = [&]() -> SurfaceMap {
        if (family == "bipyramid") return bipyramid(n);
        if (family == "torus-shift") return torus_shift(n, k);
        if (family == "toric-grid") return toric_grid(n, m);
        if (family == "projective-moebius-wheel") return projective_moebius_wheel(n);
        if (family == "sphere-example11") return sphere_example11();
        if (family == "random") return random_triangulation(seed, size);
        throw FormatError("unknown family '" + family +
                          "' (bipyramid, torus-shift, toric-grid, projective-moebius-wheel, "
                          "sphere-example11, random)");
    }();
    // torus-shift is not vertex-pair reconstructible; emit explicit gluing
    if (family == "torus-shift")
        emit(c, emit_map_json(out));
    else
        emit(c, emit_tri_json(out));
    json r = base_report(family);
    r["map"] = map_summary(out);
    auto v = validate(out, ValidationLevel::StrictSimplicial);
    r["strict_ok"] = v.ok();
    r["level_achieved"] = level_name(v.achieved);
    emit_side_report(c, r);
    return 0;
}

void add_common(CLI::App* sub, Common& c, bool with_orientation) {
    sub->add_option("--in", c.in, "input path ('-' for stdin)");
    sub->add_option("--out", c.out, "output path ('-' for stdout)");
    sub->add_option("--cap", c.cap, "orientation sweep cap")->envname("ZZ_ATLAS_CAP");
    sub->add_flag("--strict", c.strict, "require strict-simplicial input");
    if (with_orientation)
        sub->add_option("--orientation", c.orientation, "orientation: index, auto, all-type-1");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"zigzag / z-orientation analyses of triangulated closed surfaces"};
    app.require_subcommand(1);

    Common c;
    std::string level = "strict";
    std::string dot_path, gi_dot_prefix;
    bool all_type_1_flag = false;
    std::string family;
    int gn = 3, gm = 3, gk = 2, gsize = 4;
    std::uint64_t gseed = 1;

    auto* v = app.add_subcommand("validate", "validate a map at a chosen level");
    add_common(v, c, false);
    v->add_option("--level", level, "surface | triangulation | strict");

    auto* z = app.add_subcommand("zigzags", "zigzag census with edge sequences");
    add_common(z, c, false);

    auto* cl = app.add_subcommand("classify", "edge/face/vertex types under a z-orientation");
    add_common(cl, c, true);
    cl->add_flag("--all-type-1", all_type_1_flag, "search for an all-type-I orientation");

    auto* st = app.add_subcommand("structure", "components, Gamma_II, Theorem-1 verdicts");
    add_common(st, c, true);
    st->add_option("--dot", dot_path, "write Gamma_II as a DOT digraph");

    auto* mo = app.add_subcommand("monodromy", "per-face z-monodromy table and histogram");
    add_common(mo, c, false);
    mo->add_option("--gi-dot", gi_dot_prefix, "write G1..G7 DOT files with this prefix");

    auto* sh = app.add_subcommand("shred", "shred all type-II faces (Proposition 2)");
    add_common(sh, c, true);
    sh->add_option("--report", c.report_path, "write the shredding report here");

    auto* bt = app.add_subcommand("build-t", "T(.) of a directed embedding (.dig.json)");
    add_common(bt, c, false);
    bt->add_option("--report", c.report_path, "write the construction report here");

    auto* ex = app.add_subcommand("extract", "Gamma_II as .dig.json plus round-trip check");
    add_common(ex, c, true);
    ex->add_option("--report", c.report_path, "write the round-trip report here");

    auto* sw = app.add_subcommand("sweep", "per-orientation census over all 2^k orientations");
    add_common(sw, c, false);

    auto* g = app.add_subcommand("gen", "generate a named family");
    g->add_option("family", family,
                  "bipyramid | torus-shift | toric-grid | projective-moebius-wheel | "
                  "sphere-example11 | random")
        ->required();
    g->add_option("-n", gn, "family size parameter");
    g->add_option("-m", gm, "second grid parameter");
    g->add_option("-k", gk, "torus shift");
    g->add_option("--seed", gseed, "random seed");
    g->add_option("--size", gsize, "random triangulation vertex count");
    g->add_option("--out", c.out, "output path ('-' for stdout)");
    g->add_option("--report", c.report_path, "write generator verdict report here");

    try {
        app.parse(argc, argv);
        if (v->parsed()) return cmd_validate(c, level);
        if (z->parsed()) return cmd_zigzags(c);
        if (cl->parsed()) return cmd_classify(c, all_type_1_flag);
        if (st->parsed()) return cmd_structure(c, dot_path);
        if (mo->parsed()) return cmd_monodromy(c, gi_dot_prefix);
        if (sh->parsed()) return cmd_shred(c);
        if (bt->parsed()) return cmd_build_t(c);
        if (ex->parsed()) return cmd_extract(c);
        if (sw->parsed()) return cmd_sweep(c);
        if (g->parsed()) return cmd_gen(c, family, gn, gm, gk, gseed, gsize);
        return 1;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        json err{{"schema", 1}, {"error", {{"kind", "UsageError"}, {"message", e.what()}}}};
        std::cout << err.dump(2) << "\n";
        return 1;
    } catch (const Error& e) {
        json err{{"schema", 1}, {"error", {{"kind", e.kind()}, {"message", e.what()}}}};
        std::cout << err.dump(2) << "\n";
        return e.error_class() == ErrorClass::Invariant ? 2 : 1;
    } catch (const std::exception& e) {
        json err{{"schema", 1}, {"error", {{"kind", "InternalError"}, {"message", e.what()}}}};
        std::cout << err.dump(2) << "\n";
        return 2;
    }
}
