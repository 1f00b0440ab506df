#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "zz/generators.hpp"
#include "zz/orientation.hpp"

using namespace zz;

namespace {

EdgeType type_by_names(const SurfaceMap& m, const Classification& cls, const std::string& a,
                       const std::string& b) {
    for (Edge e = 0; e < m.edge_count(); ++e) {
        auto [x, y] = m.edge_endpoints(e);
        if ((m.vertex_name(x) == a && m.vertex_name(y) == b) ||
            (m.vertex_name(x) == b && m.vertex_name(y) == a))
            return cls.edge_types[e];
    }
    FAIL("no edge {" << a << "," << b << "}");
    return EdgeType::I;
}

VertexType vtype_by_name(const SurfaceMap& m, const Classification& cls, const std::string& a) {
    auto v = m.vertex_by_name(a);
    REQUIRE(v.has_value());
    return cls.vertex_types[*v];
}

}  // namespace

TEST_CASE("BP5 unique orientation types (Example-4 pattern)") {
    auto m = bipyramid(5);
    auto zs = all_zigzags(m);
    REQUIRE(zs.k() == 1);
    auto tau = ZOrientation::from_index(0, 1);
    auto cls = classify(m, zs, tau);

    CHECK(cls.all_faces_type_I());
    CHECK(vtype_by_name(m, cls, "a") == VertexType::I);
    CHECK(vtype_by_name(m, cls, "b") == VertexType::I);
    for (int i = 1; i <= 5; ++i)
        CHECK(vtype_by_name(m, cls, std::to_string(i)) == VertexType::II);
    for (int i = 1; i <= 5; ++i) {
        std::string v = std::to_string(i), w = std::to_string(i % 5 + 1);
        CHECK(type_by_names(m, cls, v, w) == EdgeType::II);
        CHECK(type_by_names(m, cls, "a", v) == EdgeType::I);
        CHECK(type_by_names(m, cls, "b", v) == EdgeType::I);
    }

    // the base edges form a directed cycle: each base vertex has exactly one
    // outgoing and one incoming type-II edge
    std::map<Vertex, int> indeg, outdeg;
    for (Edge e = 0; e < m.edge_count(); ++e) {
        if (cls.edge_types[e] != EdgeType::II) continue;
        auto [t, h] = type2_arc_endpoints(m, cls, e);
        outdeg[t]++;
        indeg[h]++;
    }
    for (int i = 1; i <= 5; ++i) {
        Vertex v = *m.vertex_by_name(std::to_string(i));
        CHECK(indeg[v] == 1);
        CHECK(outdeg[v] == 1);
    }
    CHECK(cls.count_edges(EdgeType::I) == 10);
    CHECK(cls.count_edges(EdgeType::II) == 5);
}

TEST_CASE("BP6 sweep finds all-type-I and all-type-II orientations") {
    auto m = bipyramid(6);
    auto zs = all_zigzags(m);
    REQUIRE(zs.k() == 2);
    int all1 = 0, all2 = 0;
    enumerate_z_orientations(zs, [&](const ZOrientation& tau) {
        auto cls = classify(m, zs, tau);
        if (cls.all_faces_type_I()) ++all1;
        if (cls.all_faces_type_II()) ++all2;
    });
    CHECK(all1 == 2);
    CHECK(all2 == 2);
}

TEST_CASE("BP8 sweep exhibits mixed face types") {
    auto m = bipyramid(8);
    auto zs = all_zigzags(m);
    REQUIRE(zs.k() == 4);
    int all1 = 0, all2 = 0, mixed = 0;
    enumerate_z_orientations(zs, [&](const ZOrientation& tau) {
        auto cls = classify(m, zs, tau);
        if (cls.all_faces_type_I())
            ++all1;
        else if (cls.all_faces_type_II())
            ++all2;
        else
            ++mixed;
    });
    CHECK(all1 + all2 + mixed == 16);
    CHECK(all1 > 0);
    CHECK(all2 > 0);
    CHECK(mixed > 0);
}

TEST_CASE("enumerate counts and cap") {
    CHECK(orientation_count(all_zigzags(bipyramid(3))) == 2);
    CHECK(orientation_count(all_zigzags(bipyramid(6))) == 4);
    CHECK(orientation_count(all_zigzags(bipyramid(8))) == 16);
    CHECK_THROWS_AS(orientation_count(all_zigzags(bipyramid(8)), 8), CapExceeded);
    int seen = 0;
    std::uint64_t last = 0;
    enumerate_z_orientations(all_zigzags(bipyramid(6)), [&](const ZOrientation& tau) {
        CHECK(tau.index() >= last);
        last = tau.index();
        ++seen;
    });
    CHECK(seen == 4);
}

TEST_CASE("homogeneity") {
    auto bp5 = bipyramid(5);
    auto zs5 = all_zigzags(bp5);
    CHECK(is_homogeneous(bp5, zs5, ZOrientation::from_index(0, 1)));
    // reversal stays homogeneous (types are reversal-invariant)
    CHECK(is_homogeneous(bp5, zs5, ZOrientation::from_index(1, 1)));

    // torus_shift(7,3): all-type-I orientations exist but none is homogeneous
    auto ts = torus_shift(7, 3);
    auto zst = all_zigzags(ts);
    auto tau = find_all_type_I_orientation(ts, zst);
    REQUIRE(tau.has_value());
    CHECK_FALSE(is_homogeneous(ts, zst, *tau));

    // toric_grid(3,3): every orientation is all-type-I, none homogeneous
    // (odd-by-odd parity obstruction; the complement splits into cylinders)
    auto tg = toric_grid(3, 3);
    auto zsg = all_zigzags(tg);
    bool any_homog = false;
    enumerate_z_orientations(zsg, [&](const ZOrientation& t) {
        if (is_homogeneous(tg, zsg, t)) any_homog = true;
    });
    CHECK_FALSE(any_homog);
}

TEST_CASE("HomogeneityUndefined on mixed or all-II orientations") {
    auto m = bipyramid(6);
    auto zs = all_zigzags(m);
    // index 0 selects the all-type-II orientation of BP6
    auto cls = classify(m, zs, ZOrientation::from_index(0, 2));
    REQUIRE(cls.all_faces_type_II());
    CHECK_THROWS_AS(is_homogeneous(m, zs, ZOrientation::from_index(0, 2)), HomogeneityUndefined);
}

TEST_CASE("find_all_type_I_orientation") {
    auto bp4 = bipyramid(4);
    CHECK(find_all_type_I_orientation(bp4, all_zigzags(bp4)).has_value());
    auto ex11 = sphere_example11();
    CHECK(find_all_type_I_orientation(ex11, all_zigzags(ex11)).has_value());

    // hunt for a map with no all-type-I orientation and verify exhaustively
    bool found_absent = false;
    for (std::uint64_t seed = 1; seed <= 40 && !found_absent; ++seed) {
        auto m = random_triangulation(seed, 4 + static_cast<int>(seed % 11));
        auto zs = all_zigzags(m);
        if (zs.k() > 10) continue;
        if (!find_all_type_I_orientation(m, zs).has_value()) {
            found_absent = true;
            int with_type2_face = 0;
            enumerate_z_orientations(zs, [&](const ZOrientation& tau) {
                if (!classify(m, zs, tau).all_faces_type_I()) ++with_type2_face;
            });
            CHECK(with_type2_face == (1 << zs.k()));
        }
    }
    CHECK(found_absent);
}

TEST_CASE("types invariant under reversal (Remark 1)") {
    auto bp5 = bipyramid(5);
    auto zs5 = all_zigzags(bp5);
    CHECK(types_invariant_under_reversal(bp5, zs5, ZOrientation::from_index(0, 1)));

    auto bp8 = bipyramid(8);
    auto zs8 = all_zigzags(bp8);
    enumerate_z_orientations(zs8, [&](const ZOrientation& tau) {
        CHECK(types_invariant_under_reversal(bp8, zs8, tau));
    });

    auto tg = toric_grid(3, 3);
    auto zsg = all_zigzags(tg);
    CHECK(types_invariant_under_reversal(tg, zsg, ZOrientation::from_index(11, zsg.k())));
}

TEST_CASE("classification invariants across maps and orientations") {
    auto battery = [](const SurfaceMap& m) {
        auto zs = all_zigzags(m);
        if (zs.k() > 8) return;
        enumerate_z_orientations(zs, [&](const ZOrientation& tau) {
            auto cls = classify(m, zs, tau);  // trichotomy enforced internally
            // Lemma 1 balance at every type-II vertex
            std::map<Vertex, int> indeg, outdeg;
            for (Edge e = 0; e < m.edge_count(); ++e) {
                if (cls.edge_types[e] != EdgeType::II) continue;
                auto [t, h] = type2_arc_endpoints(m, cls, e);
                outdeg[t]++;
                indeg[h]++;
            }
            for (Vertex v = 0; v < m.vertex_count(); ++v) {
                if (cls.vertex_types[v] == VertexType::II) CHECK(indeg[v] == outdeg[v]);
                // vertex type I iff all incident edges type I
                bool all_I = true;
                for (Edge e : m.vertex_edges(v))
                    all_I = all_I && cls.edge_types[e] == EdgeType::I;
                CHECK((cls.vertex_types[v] == VertexType::I) == all_I);
            }
            if (cls.all_faces_type_I())
                CHECK(cls.count_edges(EdgeType::I) == 2 * cls.count_edges(EdgeType::II));
        });
    };
    battery(bipyramid(5));
    battery(bipyramid(6));
    battery(bipyramid(8));
    battery(torus_shift(5, 2));
    battery(torus_shift(6, 2));
    battery(toric_grid(3, 3));
    battery(projective_moebius_wheel(3));
    battery(sphere_example11());
    for (std::uint64_t seed = 1; seed <= 12; ++seed)
        battery(random_triangulation(seed, 4 + static_cast<int>(seed % 9)));
}

TEST_CASE("orientation index round trip") {
    auto tau = ZOrientation::from_index(11, 5);
    CHECK(tau.index() == 11);
    CHECK(tau.reversed().index() == 20);  // bitwise complement in 5 bits
    CHECK(tau.reversed().reversed().index() == 11);
    CHECK_THROWS_AS(ZOrientation::from_index(4, 2), ParameterOutOfRange);
}
