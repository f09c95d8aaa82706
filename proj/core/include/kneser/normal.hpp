#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kneser/triangulation.hpp"

namespace kneser {

/// Standard normal coordinates: for each tetrahedron, four triangle counts
/// (one per vertex) followed by three quad counts. Quad type q separates
/// vertex v from kQuadPartner[q][v]'s complementary pair:
///   q = 0: {0,1} | {2,3},  q = 1: {0,2} | {1,3},  q = 2: {0,3} | {1,2}.
inline constexpr int kCoordsPerTet = 7;
inline constexpr int kQuadPartner[3][4] = {{1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};

/// Quad type whose vertex pairing contains {a, b}.
constexpr int quad_type_of_pair(int a, int b) {
  if (a > b) {
    const int t = a;
    a = b;
    b = t;
  }
  if ((a == 0 && b == 1) || (a == 2 && b == 3)) return 0;
  if ((a == 0 && b == 2) || (a == 1 && b == 3)) return 1;
  return 2;
}

/// A quad of type q meets edge {a, b} iff it separates a from b.
constexpr bool quad_crosses_edge(int q, int a, int b) { return kQuadPartner[q][a] != b; }

struct NormalCoordinates {
  std::vector<long long> values;

  NormalCoordinates() = default;
  explicit NormalCoordinates(int ntet) : values(static_cast<std::size_t>(ntet) * kCoordsPerTet, 0) {}
  explicit NormalCoordinates(std::vector<long long> v) : values(std::move(v)) {}

  int num_tets() const { return static_cast<int>(values.size()) / kCoordsPerTet; }

  long long triangle(int tet, int vertex) const { return values[index(tet, vertex)]; }
  long long quad(int tet, int type) const { return values[index(tet, 4 + type)]; }
  long long& triangle(int tet, int vertex) { return values[index(tet, vertex)]; }
  long long& quad(int tet, int type) { return values[index(tet, 4 + type)]; }

  /// The nonzero quad type of the tetrahedron, or -1.
  int quad_type(int tet) const;
  long long quad_count(int tet) const;

  bool is_zero() const;
  bool has_quad() const;
  bool satisfies_quad_constraint() const;
  bool touches(int tet) const;
  std::vector<int> support() const;

  NormalCoordinates operator+(const NormalCoordinates& o) const;
  NormalCoordinates scaled(long long k) const;

  auto operator<=>(const NormalCoordinates&) const = default;
  bool operator==(const NormalCoordinates&) const = default;

  static std::size_t index(int tet, int slot) {
    return static_cast<std::size_t>(tet) * kCoordsPerTet + static_cast<std::size_t>(slot);
  }
};

/// One row per (face orbit, corner): counts of pieces inducing the corner's
/// normal arc must agree on both sides of the face.
struct MatchingSystem {
  int columns = 0;
  std::vector<std::vector<int>> rows;

  bool satisfied_by(const NormalCoordinates& s) const;
};

MatchingSystem matching_system(const Triangulation& tri);

struct EnumerationOptions {
  int max_tetrahedra = 20;
  std::size_t max_rays = 2'000'000;
};

/// Admissible vertex solutions (extreme rays of the solution cone obeying the
/// quad constraint), each scaled to its least integer representative and
/// sorted lexicographically. Uses the double description method with exact
/// integer ray arithmetic. Requires a closed triangulation.
std::vector<NormalCoordinates> enumerate_vertex_solutions(const Triangulation& tri,
                                                          const EnumerationOptions& options = {});

/// Number of crossings of the surface with edge `e` of tetrahedron `tet`.
long long edge_crossings(const NormalCoordinates& s, int tet, int e);

/// Per edge orbit crossing counts; throws InconsistentCrossings if two
/// incidences of an edge disagree.
std::vector<long long> edge_weights(const Triangulation& tri, const NormalCoordinates& s);

long long weight(const Triangulation& tri, const NormalCoordinates& s);

/// Number of arcs at corner `vertex` of face `face` of tetrahedron `tet`.
long long corner_arcs(const NormalCoordinates& s, int tet, int face, int vertex);

/// A normal disk inside one tetrahedron. slot 0..3 is a triangle at that
/// vertex (layer 1 nearest the vertex); slot 4..6 a quad (layer 1 nearest the
/// side containing vertex 0).
struct NormalDisk {
  int tet = 0;
  int slot = 0;
  long long layer = 0;
};

struct SurfaceComponent {
  NormalCoordinates coords;
  long long vertices = 0;
  long long edges = 0;
  long long faces = 0;
  long long euler = 0;
  bool orientable = true;
  int genus = 0;  // -1 when nonorientable
  bool vertex_linking = false;

  bool is_sphere() const { return orientable && euler == 2; }
};

struct ReconstructedSurface {
  long long vertices = 0;  // edge crossings
  long long edges = 0;     // normal arcs
  long long faces = 0;     // normal disks
  long long euler = 0;
  std::vector<NormalDisk> disks;
  std::vector<int> disk_component;
  std::vector<SurfaceComponent> components;

  bool connected() const { return components.size() == 1; }
  bool orientable() const;
  bool vertex_linking() const;
  bool is_connected_sphere() const { return connected() && components.front().is_sphere(); }
};

ReconstructedSurface reconstruct(const Triangulation& tri, const NormalCoordinates& s);

/// Euler characteristic from the coordinates alone:
///   sum over disks of (1 - arcs/2 + sum over crossed edges of 1/degree).
long long euler_from_coordinates(const Triangulation& tri, const NormalCoordinates& s);

/// One line of the surface dump: "S <7t integers> # wt=<w> chi=<c> vl=<0|1>".
std::string format_surface_line(const Triangulation& tri, const NormalCoordinates& s);

}  // namespace kneser
