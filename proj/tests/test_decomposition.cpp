#include <gtest/gtest.h>

#include <cstdlib>

#include "corpus.hpp"
#include "kneser/construct.hpp"
#include "kneser/decomposition.hpp"
#include "kneser/error.hpp"
#include "kneser/homology.hpp"

using namespace kneser;

namespace {

AbelianGroup cyclic(long long n) { return {0, {n}}; }

std::vector<NormalCoordinates> nontrivial_spheres(const Triangulation& t) {
  std::vector<NormalCoordinates> out;
  for (const auto& s : enumerate_vertex_solutions(t))
    if (is_nontrivial_sphere(t, s)) out.push_back(s);
  return out;
}

}  // namespace

TEST(Certificate, KnownCases) {
  EXPECT_EQ(nontrivial_spheres(boundary_4simplex()).size(), 10u);
  EXPECT_FALSE(certify_weakly_irreducible(boundary_4simplex()).certified());
  for (const auto& t : {projective_space(), lens_space_5_2()}) {
    const auto c = certify_weakly_irreducible(t);
    EXPECT_TRUE(c.certified());
    EXPECT_TRUE(c.witnesses.empty());
    EXPECT_GT(c.inspected, 0u);
  }
  EXPECT_STREQ(to_string(CertificateKind::CertifiedWeaklyIrreducible), "CertifiedWeaklyIrreducible");
}

TEST(EssentialSphere, SelectionIsLeastByArea) {
  for (const auto& [name, t] : corpus::closed()) {
    if (t.size() > 11) continue;
    const auto sols = enumerate_vertex_solutions(t);
    const auto chosen = select_essential_sphere(t, sols);
    std::optional<PLArea> best;
    for (const auto& s : sols)
      if (is_nontrivial_sphere(t, s)) {
        const auto a = pl_area(t, s);
        if (!best || a < *best) best = a;
      }
    ASSERT_EQ(chosen.has_value(), best.has_value()) << name;
    if (chosen) {
      EXPECT_TRUE(chosen->area.equivalent(*best)) << name;
      EXPECT_TRUE(is_nontrivial_sphere(t, chosen->coords)) << name;
    }
  }
}

TEST(Crush, BoundarySimplexSphere) {
  const auto t = boundary_4simplex();
  for (const auto& s : nontrivial_spheres(t)) {
    int total = 0;
    for (const auto& piece : crush(t, s)) {
      EXPECT_TRUE(piece.is_closed());
      EXPECT_TRUE(piece.is_orientable());
      EXPECT_TRUE(is_closed_manifold(piece));
      EXPECT_EQ(homology(piece, 1), AbelianGroup{});
      total += piece.size();
    }
    EXPECT_LT(total, t.size());
  }
}

TEST(Crush, RejectsVertexLinks) {
  const auto t = boundary_4simplex();
  for (const auto& s : enumerate_vertex_solutions(t)) {
    if (s.has_quad()) continue;
    try {
      crush(t, s);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::VertexLinkingRejected);
    }
  }
}

// Property: the uncut flag subdivision is the same manifold.
TEST(FlagSubdivision, UncutPreservesHomology) {
  for (const auto& [name, t] : corpus::closed()) {
    if (t.size() > 5) continue;
    for (const auto& s : enumerate_vertex_solutions(t)) {
      const auto sub = validate(flag_subdivision(t, s, false), Requirements::closed_orientable());
      EXPECT_EQ(homology(sub, 1), homology(t, 1)) << name;
      EXPECT_TRUE(is_closed_manifold(sub)) << name;
    }
  }
}

TEST(CutAndCap, SplitsAlongSeparatingSphere) {
  const auto sum = connected_sum(projective_space(), lens_space_5_2());
  const auto sphere = find_essential_sphere(sum);
  ASSERT_TRUE(sphere);
  const auto pieces = cut_and_cap(sum, sphere->coords);
  std::vector<AbelianGroup> h1;
  for (const auto& p : pieces) {
    EXPECT_TRUE(is_closed_manifold(p));
    h1.push_back(homology(p, 1));
  }
  EXPECT_TRUE(same_nontrivial_multiset(h1, {cyclic(2), cyclic(5)}));
}

TEST(ConeBoundary, ClosesStackedChain) {
  const auto cone = validate(cone_boundary(stacked_chain(3).table()), Requirements::closed_orientable());
  EXPECT_TRUE(is_closed_manifold(cone));
  EXPECT_EQ(homology(cone, 1), AbelianGroup{});
}

TEST(ConnectedSum, SizesAndHomology) {
  const auto bd4 = boundary_4simplex();
  const auto twice = connected_sum(bd4, bd4);
  EXPECT_EQ(twice.size(), 8);
  EXPECT_TRUE(is_closed_manifold(twice));
  for (const auto& [a, b] : corpus::pairs()) {
    const auto A = corpus::summand(a), B = corpus::summand(b);
    const auto sum = connected_sum(A, B);
    EXPECT_TRUE(is_closed_manifold(sum)) << a << "#" << b;
    EXPECT_TRUE(isomorphic(homology(sum, 1), direct_sum(homology(A, 1), homology(B, 1)))) << a << "#" << b;
  }
}

TEST(Simplify, ShrinksBoundarySimplex) {
  const auto s = simplify(boundary_4simplex());
  EXPECT_EQ(s.size(), 4);
  EXPECT_TRUE(is_closed_manifold(s));
  for (const auto& [name, t] : corpus::closed()) {
    const auto r = simplify(t);
    EXPECT_LE(r.size(), t.size()) << name;
    EXPECT_EQ(homology(r, 1), homology(t, 1)) << name;
  }
}

TEST(Ledger, MultisetComparisonIgnoresTrivialGroups) {
  EXPECT_TRUE(same_nontrivial_multiset({cyclic(2), AbelianGroup{}}, {cyclic(2)}));
  EXPECT_FALSE(same_nontrivial_multiset({cyclic(2), cyclic(2)}, {cyclic(2)}));
  EXPECT_TRUE(same_nontrivial_multiset({cyclic(5), cyclic(2)}, {cyclic(2), AbelianGroup{}, cyclic(5)}));
}

TEST(Decompose, ProjectiveSpaceSums) {
  const auto rp3 = projective_space();
  DecompositionOptions options;
  options.oracle_check = true;
  const auto report = decompose(connected_sum(rp3, rp3), options);
  EXPECT_TRUE(report.balanced);
  EXPECT_TRUE(report.all_certified());
  EXPECT_TRUE(report.oracle_agrees());
  EXPECT_EQ(report.pieces_h1, (std::vector<AbelianGroup>{cyclic(2), cyclic(2)}));
  EXPECT_LE(report.crushes, report.input_tetrahedra);
  EXPECT_EQ(report.c1, report.c3 * report.c3);
  for (const auto& s : report.spheres) {
    EXPECT_TRUE(s.diameter_ok);
    EXPECT_LE(s.area.weight, report.c3);
  }
}

TEST(Decompose, MixedSumAndDeterminism) {
  const auto sum = connected_sum(boundary_4simplex(), projective_space());
  ::setenv("KNESER_THREADS", "1", 1);
  const auto a = decompose(sum);
  ::setenv("KNESER_THREADS", "3", 1);
  const auto b = decompose(sum);
  ::unsetenv("KNESER_THREADS");
  EXPECT_TRUE(a.balanced);
  EXPECT_EQ(a.pieces_h1, (std::vector<AbelianGroup>{cyclic(2)}));
  ASSERT_EQ(a.spheres.size(), b.spheres.size());
  for (std::size_t i = 0; i < a.spheres.size(); ++i) EXPECT_EQ(a.spheres[i].coords, b.spheres[i].coords);
  EXPECT_EQ(a.crushes, b.crushes);
}

TEST(Decompose, IrreducibleInputIsOnePiece) {
  const auto report = decompose(lens_space_5_2());
  EXPECT_EQ(report.crushes, 0);
  ASSERT_EQ(report.pieces.size(), 1u);
  EXPECT_TRUE(report.balanced);
  EXPECT_EQ(report.c3, 0);
}

// Crushing this triangulation loses the Z/3; the ledger must say so.
TEST(Decompose, LedgerFlagsLostSummand) {
  DecompositionOptions options;
  options.oracle_check = true;
  const auto report = decompose(lens_space_3_1(), options);
  EXPECT_GT(report.crushes, 0);
  EXPECT_FALSE(report.balanced);
  EXPECT_FALSE(report.oracle_agrees());
}

TEST(Decompose, RejectsOpenInput) {
  EXPECT_THROW(decompose(stacked_chain(2)), Error);
}
