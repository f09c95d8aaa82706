#include <gtest/gtest.h>

#include "corpus.hpp"
#include "generators.hpp"
#include "kneser/construct.hpp"
#include "kneser/error.hpp"
#include "kneser/homology.hpp"

using namespace kneser;

namespace {

ErrorCode parse_error(const std::string& text) {
  try {
    validate(parse_tri(text));
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(Perm4, CompositionAndInverse) {
  const Perm4 p(1, 2, 3, 0), q(0, 2, 1, 3);
  EXPECT_EQ((p * q)[1], p[q[1]]);
  EXPECT_EQ(p * p.inverse(), Perm4());
  EXPECT_EQ(Perm4::transposition(0, 3).sign(), -1);
  EXPECT_EQ(p.sign(), -1);
  EXPECT_EQ(p.str(), "1230");
}

TEST(TriFormat, BoundarySimplexSkeleton) {
  const auto t = boundary_4simplex();
  const auto& sk = t.skeleton();
  EXPECT_EQ(t.size(), 5);
  EXPECT_EQ(sk.num_vertices, 5);
  EXPECT_EQ(sk.num_edges, 10);
  EXPECT_EQ(sk.num_faces, 10);
  EXPECT_EQ(sk.euler_characteristic(), 0);
  EXPECT_TRUE(t.is_closed());
  EXPECT_TRUE(t.is_orientable());
  EXPECT_TRUE(is_closed_manifold(t));
}

TEST(TriFormat, RoundTripsCorpus) {
  for (const auto& [name, t] : corpus::closed()) {
    const auto text = format_tri(t);
    EXPECT_EQ(format_tri(parse_tri(text)), text) << name;
    EXPECT_EQ(validate(parse_tri(text)), t) << name;
  }
}

TEST(TriFormat, AcceptsCommentsAndBlankLines) {
  const auto text = format_tri(projective_space());
  const auto commented = "# header comment\n\n" + text.substr(0, text.find('\n')) + "  # trailing\n" +
                         text.substr(text.find('\n') + 1);
  EXPECT_EQ(parse_tri(commented), projective_space().table());
}

TEST(TriFormat, RejectsMalformedInput) {
  EXPECT_EQ(parse_error(""), ErrorCode::Parse);
  EXPECT_EQ(parse_error("tri 2\nntet 1\nb b b b\n"), ErrorCode::Parse);
  EXPECT_EQ(parse_error("tri 1\nntet 1\nb b b\n"), ErrorCode::Parse);
  EXPECT_EQ(parse_error("tri 1\nntet 1\nb b b b extra\n"), ErrorCode::Parse);
  EXPECT_EQ(parse_error("tri 1\nntet 1\nb b b b\nb b b b\n"), ErrorCode::Parse);
  EXPECT_EQ(parse_error("tri 1\nntet 1\n0:1:1023 0:0:1023 b 5:0:0123\n"), ErrorCode::Parse);
  EXPECT_EQ(parse_error("tri 1\nntet 1\n0:1:1123 b b b\n"), ErrorCode::Parse);
}

TEST(Validate, DetectsStructuralDefects) {
  // One-sided gluing.
  EXPECT_EQ(parse_error("tri 1\nntet 2\n1:0:0123 b b b\nb b b b\n"), ErrorCode::NonInvolutiveGluing);
  // A face glued to itself.
  EXPECT_EQ(parse_error("tri 1\nntet 1\n0:0:0132 b b b\n"), ErrorCode::SelfGluedFace);
  GluingTable open(1);
  EXPECT_THROW(validate(open, Requirements::closed_orientable()), Error);
  // Even gluing of two faces of a single tetrahedron reverses orientation.
  GluingTable twisted(1);
  twisted.glue(0, 0, 0, Perm4(1, 0, 2, 3) * Perm4(0, 1, 3, 2));
  twisted.glue(0, 2, 0, Perm4(0, 1, 3, 2));
  try {
    validate(twisted, Requirements::closed_orientable());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonOrientable);
  }
}

TEST(Validate, StackedChainHasBoundary) {
  const auto c = stacked_chain(4);
  EXPECT_EQ(c.size(), 4);
  EXPECT_FALSE(c.is_closed());
  EXPECT_TRUE(c.is_orientable());
  EXPECT_EQ(c.skeleton().num_vertices, 7);
  EXPECT_EQ(homology(c, 1), AbelianGroup{});
}

TEST(Components, SplitAndUnion) {
  const auto u = disjoint_union(boundary_4simplex(), projective_space());
  EXPECT_EQ(u.num_components(), 2);
  const auto parts = split_components(u);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0].size(), 5);
  EXPECT_EQ(parts[1].size(), 2);
}

// Property: isomorphic relabellings preserve every invariant we compute and
// survive a format round trip.
TEST(Properties, RelabellingPreservesInvariants) {
  oracle::Rng rng(11);
  for (const auto& [name, t] : corpus::closed()) {
    for (int trial = 0; trial < 5; ++trial) {
      const auto copy = validate(gen::relabel(t.table(), rng), Requirements::closed_orientable());
      EXPECT_EQ(copy.skeleton().num_vertices, t.skeleton().num_vertices) << name;
      EXPECT_EQ(copy.skeleton().num_edges, t.skeleton().num_edges) << name;
      EXPECT_EQ(homology(copy, 1), homology(t, 1)) << name;
      EXPECT_EQ(is_closed_manifold(copy), is_closed_manifold(t)) << name;
      EXPECT_EQ(validate(parse_tri(format_tri(copy))), copy) << name;
    }
  }
}

TEST(Properties, RandomClosedTriangulationsAreConsistent) {
  oracle::Rng rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + rng.below(5);
    const auto tri = validate(gen::random_closed(n, rng), Requirements::closed_orientable());
    const auto& sk = tri.skeleton();
    EXPECT_EQ(sk.num_faces, 2 * n);
    EXPECT_EQ(sk.num_tetrahedra, n);
    int degrees = 0;
    for (int d : sk.edge_degree) degrees += d;
    EXPECT_EQ(degrees, 6 * n);
    // Closed orientable pseudomanifold with valid edges: chi = 0 exactly when
    // every vertex link is a sphere.
    const auto links = vertex_link_euler(tri);
    EXPECT_EQ(is_closed_manifold(tri), sk.edges_valid && sk.euler_characteristic() == 0 &&
                                           std::all_of(links.begin(), links.end(), [](long long x) { return x == 2; }));
  }
}

TEST(Moves, OneFourPreservesTopology) {
  oracle::Rng rng(3);
  for (const auto& [name, t] : corpus::summands()) {
    const int tet = rng.below(t.size());
    const auto moved = validate(one_four_move(t.table(), tet), Requirements::closed_orientable());
    EXPECT_EQ(moved.size(), t.size() + 3) << name;
    EXPECT_EQ(moved.skeleton().num_vertices, t.skeleton().num_vertices + 1) << name;
    EXPECT_TRUE(is_closed_manifold(moved)) << name;
    EXPECT_EQ(homology(moved, 1), homology(t, 1)) << name;
  }
}

TEST(Moves, SwapTetrahedraIsIsomorphism) {
  const auto t = boundary_4simplex();
  const auto swapped = validate(swap_tetrahedra(t.table(), 0, 3), Requirements::closed_orientable());
  EXPECT_EQ(homology(swapped, 1), homology(t, 1));
  EXPECT_EQ(validate(swap_tetrahedra(swapped.table(), 0, 3)), t);
}
