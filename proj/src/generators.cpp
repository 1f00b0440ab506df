#include "zz/generators.hpp"

#include <random>
#include <string>
#include <vector>

namespace zz {

SurfaceMap bipyramid(int n) {
    if (n < 3) throw ParameterOutOfRange("bipyramid needs n >= 3");
    std::vector<std::array<std::string, 3>> tris;
    auto base = [&](int i) { return std::to_string((i - 1) % n + 1); };
    for (int i = 1; i <= n; ++i) tris.push_back({"a", base(i), base(i + 1)});
    for (int i = 1; i <= n; ++i) tris.push_back({"b", base(i), base(i + 1)});
    return SurfaceMap::build_simplicial(tris);
}

SurfaceMap torus_shift(int n, int k) {
    if (n < 5 || k < 2 || k > n - 3)
        throw ParameterOutOfRange("torus_shift needs n >= 5 and 2 <= k <= n-3");
    // faces: lower_l = l with corners (b_l, b_{l+1}, t_l), upper_l = n+l with
    // corners (t_l, b_{l+1}, t_{l+1}); t_l is b_{l+k} after the shift gluing
    std::vector<GluingEntry> gluing;
    auto mod = [&](int x) { return ((x % n) + n) % n; };
    for (int l = 0; l < n; ++l) {
        gluing.push_back({l, 1, n + l, 0, false});           // diagonal d_l
        gluing.push_back({l, 2, n + mod(l - 1), 1, false});  // vertical e_l
        gluing.push_back({l, 0, n + mod(l - k), 2, false});  // horizontal h_l
    }
    std::vector<CornerName> names;
    for (int l = 0; l < n; ++l) names.push_back({l, 0, std::to_string(l)});
    return SurfaceMap::build_glued(2 * n, gluing, names);
}

SurfaceMap toric_grid(int n, int m) {
    if (n < 3 || m < 3 || n % 2 == 0 || m % 2 == 0)
        throw ParameterOutOfRange("toric_grid needs odd n, m >= 3");
    std::vector<std::array<std::string, 3>> tris;
    auto g = [&](int i, int j) {
        return "g" + std::to_string(((i % n) + n) % n) + "_" + std::to_string(((j % m) + m) % m);
    };
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) {
            std::string apex = "a" + std::to_string(i) + "_" + std::to_string(j);
            tris.push_back({g(i, j), g(i + 1, j), apex});
            tris.push_back({g(i + 1, j), g(i + 1, j + 1), apex});
            tris.push_back({g(i + 1, j + 1), g(i, j + 1), apex});
            tris.push_back({g(i, j + 1), g(i, j), apex});
        }
    }
    return SurfaceMap::build_simplicial(tris);
}

SurfaceMap projective_moebius_wheel(int n) {
    if (n < 3) throw ParameterOutOfRange("projective_moebius_wheel needs n >= 3");
    // strip of n squares with p_n identified to q_0 and q_n to p_0 (the flip),
    // wheel hub c coned onto the 2n-gon boundary
    auto P = [&](int i) { return i < n ? "p" + std::to_string(i) : "q0"; };
    auto Q = [&](int i) { return i < n ? "q" + std::to_string(i) : "p0"; };
    std::vector<std::array<std::string, 3>> tris;
    for (int i = 0; i < n; ++i) {
        tris.push_back({P(i), Q(i), P(i + 1)});
        tris.push_back({Q(i), P(i + 1), Q(i + 1)});
    }
    std::vector<std::string> rim;
    for (int i = 0; i < n; ++i) rim.push_back("p" + std::to_string(i));
    for (int i = 0; i < n; ++i) rim.push_back("q" + std::to_string(i));
    for (int j = 0; j < 2 * n; ++j) tris.push_back({"c", rim[j], rim[(j + 1) % (2 * n)]});
    return SurfaceMap::build_simplicial(tris);
}

SurfaceMap sphere_example11() {
    // Transcribed from the two-disk figure: outer hexagon o1..o6 (directed
    // o1->o2->...->o6->o1), inner bowtie triangles R->T->S->R and R->Q->P->R
    // with apexes U (upper) and W (lower), a 12-triangle annulus between the
    // hexagon and the bowtie, and a second disk coning hub H onto the hexagon.
    static const std::vector<std::array<std::string, 3>> tris = {
        // annulus between hexagon and bowtie, walking around
        {"o5", "P", "o6"},
        {"P", "o6", "R"},
        {"o6", "R", "o1"},
        {"R", "o1", "T"},
        {"o1", "T", "o2"},
        {"T", "o2", "S"},
        {"o2", "S", "o3"},
        {"S", "o3", "R"},
        {"o3", "R", "o4"},
        {"R", "o4", "Q"},
        {"o4", "Q", "o5"},
        {"Q", "o5", "P"},
        // upper bowtie triangle coned to U
        {"R", "T", "U"},
        {"T", "S", "U"},
        {"S", "R", "U"},
        // lower bowtie triangle coned to W
        {"R", "Q", "W"},
        {"Q", "P", "W"},
        {"P", "R", "W"},
        // wheel disk: hub H coned onto the hexagon
        {"H", "o1", "o2"},
        {"H", "o2", "o3"},
        {"H", "o3", "o4"},
        {"H", "o4", "o5"},
        {"H", "o5", "o6"},
        {"H", "o6", "o1"},
    };
    return SurfaceMap::build_simplicial(tris);
}

SurfaceMap random_triangulation(std::uint64_t seed, int size) {
    if (size < 4) throw ParameterOutOfRange("random_triangulation needs size >= 4");
    std::mt19937_64 rng(seed);
    std::vector<std::array<int, 3>> tris = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    int nv = 4;
    while (nv < size) {
        std::uniform_int_distribution<std::size_t> pick(0, tris.size() - 1);
        std::size_t i = pick(rng);
        auto [a, b, c] = tris[i];
        tris.erase(tris.begin() + static_cast<std::ptrdiff_t>(i));
        int w = nv++;
        tris.push_back({a, b, w});
        tris.push_back({b, c, w});
        tris.push_back({c, a, w});
    }
    std::vector<std::array<std::string, 3>> named;
    named.reserve(tris.size());
    for (const auto& t : tris)
        named.push_back(
            {std::to_string(t[0]), std::to_string(t[1]), std::to_string(t[2])});
    return SurfaceMap::build_simplicial(named);
}

}  // namespace zz
