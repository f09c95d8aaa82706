#pragma once

#include "kneser/triangulation.hpp"

namespace kneser {

/// Boundary of the 4-simplex: tet i omits vertex i of {0..4}, faces glued by
/// the order-preserving correspondence of shared vertices. 5 tets, 5 vertices.
Triangulation boundary_4simplex();

/// Stacked chain: tet k spans global vertices {k, k+1, k+2, k+3}; tet k is
/// glued to tet k+1 along {k+1, k+2, k+3}. Has boundary unless n == 0.
Triangulation stacked_chain(int n);

/// Two-tetrahedron, two-vertex triangulation of RP^3.
Triangulation projective_space();

/// Two-tetrahedron, one-vertex triangulation of the lens space L(3,1).
Triangulation lens_space_3_1();

/// Two-tetrahedron, one-vertex triangulation with H_1 = Z/5 (the minimal
/// layered triangulation of L(5,2)).
Triangulation lens_space_5_2();

/// Subdivides tetrahedron `tet` into four around a new interior vertex. The
/// pieces replace `tet` (the one opposite local vertex 0 keeps index `tet`)
/// and three tets are appended.
GluingTable one_four_move(const GluingTable& table, int tet);

/// Swaps the indices of two tetrahedra.
GluingTable swap_tetrahedra(const GluingTable& table, int a, int b);

}  // namespace kneser
