#pragma once

#include <cstdint>

#include "zz/surface_map.hpp"

namespace zz {

/// n-gonal bipyramid: base vertices 1..n, apexes a and b. n >= 3.
SurfaceMap bipyramid(int n);

/// Torus built from a cyclic row of n squares, each split by a diagonal, with
/// the top side glued to the bottom shifted by k. Built as explicit gluing
/// because the vertex-pair encoding collapses edges for some (n, k).
/// Requires n >= 5, 2 <= k <= n-3.
SurfaceMap torus_shift(int n, int k);

/// T(n x m grid on the torus): nm grid vertices, one apex per square,
/// 4nm faces. Requires n, m odd and >= 3.
SurfaceMap toric_grid(int n, int m);

/// Real projective plane: one-row Moebius band of n diagonal-split squares
/// whose boundary is glued to the rim of a 2n-wheel. Requires n >= 3.
SurfaceMap projective_moebius_wheel(int n);

/// Fixed sphere triangulation transcribed from the two-disk figure:
/// hexagon o1..o6, inner bowtie P,Q,R,S,T with apexes U and W, wheel hub H.
SurfaceMap sphere_example11();

/// Sphere grown from the tetrahedron by seeded random vertex insertions until
/// `size` vertices. Deterministic per seed; always strict-simplicial.
SurfaceMap random_triangulation(std::uint64_t seed, int size);

}  // namespace zz
