#include <gtest/gtest.h>

#include <cstdlib>
#include <numeric>
#include <regex>
#include <set>

#include "corpus.hpp"
#include "kneser/construct.hpp"
#include "kneser/error.hpp"
#include "kneser/normal.hpp"
#include "oracles.hpp"

using namespace kneser;

namespace {

long long content(const NormalCoordinates& s) {
  long long g = 0;
  for (long long v : s.values) g = std::gcd(g, v);
  return g;
}

}  // namespace

TEST(QuadTypes, PairsAndCrossings) {
  EXPECT_EQ(quad_type_of_pair(0, 1), 0);
  EXPECT_EQ(quad_type_of_pair(2, 3), 0);
  EXPECT_EQ(quad_type_of_pair(1, 3), 1);
  EXPECT_EQ(quad_type_of_pair(3, 0), 2);
  // A quad crosses the four edges it does not separate.
  for (int q = 0; q < 3; ++q) {
    int crossed = 0;
    for (const auto& e : kEdgeVertices) crossed += quad_crosses_edge(q, e[0], e[1]);
    EXPECT_EQ(crossed, 4);
  }
}

TEST(Enumeration, BoundarySimplex) {
  const auto t = boundary_4simplex();
  const auto sols = enumerate_vertex_solutions(t);
  ASSERT_EQ(sols.size(), 15u);
  int links = 0;
  for (const auto& s : sols) {
    const auto surf = reconstruct(t, s);
    EXPECT_TRUE(surf.is_connected_sphere());
    if (!s.has_quad()) {
      ++links;
      EXPECT_EQ(weight(t, s), 4);
      EXPECT_EQ(surf.vertices, 4);
      EXPECT_EQ(surf.edges, 6);
      EXPECT_EQ(surf.faces, 4);
    } else {
      EXPECT_EQ(weight(t, s), 6);
    }
  }
  EXPECT_EQ(links, 5);
}

TEST(Enumeration, SolutionsAreExtremePrimitiveAndAdmissible) {
  for (const auto& [name, t] : corpus::closed()) {
    const auto sys = matching_system(t);
    const auto sols = enumerate_vertex_solutions(t);
    EXPECT_TRUE(std::is_sorted(sols.begin(), sols.end())) << name;
    for (const auto& s : sols) {
      EXPECT_TRUE(sys.satisfied_by(s)) << name;
      EXPECT_TRUE(s.satisfies_quad_constraint()) << name;
      EXPECT_EQ(content(s), 1) << name;
      EXPECT_TRUE(oracle::is_extreme_ray(t, s)) << name;
    }
  }
}

// Completeness against exhaustive search: every primitive extreme admissible
// vector in the box is a reported vertex solution, and vice versa.
TEST(Enumeration, MatchesExhaustiveSearchOnSmallTriangulations) {
  for (const auto& [name, t] : corpus::closed()) {
    if (t.size() > 2) continue;
    const int bound = 4;
    const auto sols = enumerate_vertex_solutions(t);
    std::set<NormalCoordinates> expected;
    for (const auto& s : oracle::admissible_solutions(t, bound))
      if (content(s) == 1 && oracle::is_extreme_ray(t, s)) expected.insert(s);
    std::set<NormalCoordinates> in_box;
    for (const auto& s : sols)
      if (*std::max_element(s.values.begin(), s.values.end()) <= bound) in_box.insert(s);
    EXPECT_EQ(in_box, expected) << name;
  }
}

TEST(Enumeration, RequiresClosedAndRespectsBudget) {
  EXPECT_THROW(enumerate_vertex_solutions(stacked_chain(3)), Error);
  EnumerationOptions tight;
  tight.max_rays = 0;
  try {
    enumerate_vertex_solutions(boundary_4simplex(), tight);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
  }
  EnumerationOptions small;
  small.max_tetrahedra = 4;
  EXPECT_THROW(enumerate_vertex_solutions(boundary_4simplex(), small), Error);
}

TEST(Enumeration, IndependentOfThreadCount) {
  const auto t = connected_sum(boundary_4simplex(), projective_space());
  ::setenv("KNESER_THREADS", "1", 1);
  const auto one = enumerate_vertex_solutions(t);
  ::setenv("KNESER_THREADS", "4", 1);
  const auto four = enumerate_vertex_solutions(t);
  ::unsetenv("KNESER_THREADS");
  EXPECT_EQ(one, four);
}

TEST(Reconstruction, CellEulerMatchesFormula) {
  for (const auto& [name, t] : corpus::closed())
    for (const auto& s : enumerate_vertex_solutions(t)) {
      const auto surf = reconstruct(t, s);
      EXPECT_EQ(surf.euler, euler_from_coordinates(t, s)) << name;
      long long chi = 0;
      for (const auto& c : surf.components) chi += c.euler;
      EXPECT_EQ(chi, surf.euler) << name;
    }
}

// Property: on admissible sums of vertex solutions, weight and Euler
// characteristic are additive and reconstruction agrees with the formula.
TEST(Reconstruction, AdditiveOnAdmissibleSums) {
  oracle::Rng rng(23);
  for (const auto& [name, t] : corpus::closed()) {
    const auto sols = enumerate_vertex_solutions(t);
    for (int trial = 0; trial < 30; ++trial) {
      const auto& a = sols[static_cast<std::size_t>(rng.below(static_cast<int>(sols.size())))];
      const auto& b = sols[static_cast<std::size_t>(rng.below(static_cast<int>(sols.size())))];
      const long long k = 1 + rng.below(2);
      const auto s = a.scaled(k) + b;
      if (!s.satisfies_quad_constraint()) continue;
      EXPECT_EQ(weight(t, s), k * weight(t, a) + weight(t, b)) << name;
      EXPECT_EQ(euler_from_coordinates(t, s), k * euler_from_coordinates(t, a) + euler_from_coordinates(t, b)) << name;
      EXPECT_EQ(reconstruct(t, s).euler, euler_from_coordinates(t, s)) << name;
      long long disks = 0;
      for (long long v : s.values) disks += v;
      EXPECT_EQ(reconstruct(t, s).faces, disks) << name;
    }
  }
}

TEST(Reconstruction, ProjectivePlaneInProjectiveSpace) {
  const auto t = projective_space();
  bool found = false;
  for (const auto& s : enumerate_vertex_solutions(t)) {
    const auto surf = reconstruct(t, s);
    if (surf.connected() && !surf.orientable() && surf.euler == 1) {
      found = true;
      EXPECT_EQ(surf.components.front().genus, -1);
      // Its double bounds a regular neighbourhood: a two-sphere.
      EXPECT_TRUE(reconstruct(t, s.scaled(2)).is_connected_sphere());
    }
  }
  EXPECT_TRUE(found);
}

TEST(Reconstruction, EdgeWeightsDetectInconsistency) {
  const auto t = boundary_4simplex();
  NormalCoordinates s(t.size());
  s.triangle(0, 0) = 1;
  try {
    edge_weights(t, s);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InconsistentCrossings);
  }
}

TEST(SurfaceDump, LineFormat) {
  const auto t = boundary_4simplex();
  const std::regex pattern("^S( [0-9]+){35} # wt=[0-9]+ chi=-?[0-9]+ vl=[01]$");
  for (const auto& s : enumerate_vertex_solutions(t)) {
    const auto line = format_surface_line(t, s);
    EXPECT_TRUE(std::regex_match(line, pattern)) << line;
    EXPECT_NE(line.find(s.has_quad() ? "vl=0" : "vl=1"), std::string::npos);
  }
}
