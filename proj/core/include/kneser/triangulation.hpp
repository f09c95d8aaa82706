#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kneser/perm.hpp"

namespace kneser {

/// Local edge numbering of a tetrahedron: edge e joins kEdgeVertices[e].
/// Edges e and 5 - e are opposite.
inline constexpr std::array<std::array<int, 2>, 6> kEdgeVertices = {
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

constexpr int edge_index(int a, int b) {
  if (a > b) std::swap(a, b);
  if (a == 0) return b - 1;
  if (a == 1) return b + 1;
  return 5;
}

/// Face `face` of this tetrahedron is glued to face `perm[face]` of `tet`;
/// local vertex v maps to vertex perm[v] of the target.
struct Gluing {
  int tet = 0;
  int face = 0;
  Perm4 perm;

  bool operator==(const Gluing&) const = default;
};

/// A raw, unvalidated face-pairing table. This is the mutable builder type;
/// all checks happen in validate().
class GluingTable {
 public:
  GluingTable() = default;
  explicit GluingTable(int ntet) : faces_(static_cast<std::size_t>(ntet)) {}

  int size() const { return static_cast<int>(faces_.size()); }

  int add_tetrahedron() {
    faces_.emplace_back();
    return size() - 1;
  }

  const std::optional<Gluing>& at(int tet, int face) const {
    return faces_[static_cast<std::size_t>(tet)][static_cast<std::size_t>(face)];
  }

  /// One-sided assignment; used by parsers and by tests that build broken tables.
  void set(int tet, int face, std::optional<Gluing> g) {
    faces_[static_cast<std::size_t>(tet)][static_cast<std::size_t>(face)] = g;
  }

  /// Symmetric gluing of (tet, face) to (other, perm[face]).
  void glue(int tet, int face, int other, Perm4 perm) {
    set(tet, face, Gluing{other, perm[face], perm});
    set(other, perm[face], Gluing{tet, face, perm.inverse()});
  }

  /// Removes a gluing from both sides.
  void unglue(int tet, int face) {
    const auto g = at(tet, face);
    if (!g) return;
    set(g->tet, g->face, std::nullopt);
    set(tet, face, std::nullopt);
  }

  bool operator==(const GluingTable&) const = default;

 private:
  std::vector<std::array<std::optional<Gluing>, 4>> faces_;
};

/// Orbits of vertices, edges and faces of the tetrahedra under the gluings.
/// Orbit k's representative is the lexicographically least (tet, simplex)
/// pair, and orbits are numbered by increasing representative.
struct SkeletonTable {
  int num_vertices = 0;
  int num_edges = 0;
  int num_faces = 0;
  int num_tetrahedra = 0;

  std::vector<std::array<int, 4>> vertex_of;
  std::vector<std::array<int, 6>> edge_of;
  /// +1 if (tet, a<b) runs along the orbit representative's direction.
  std::vector<std::array<std::int8_t, 6>> edge_sign;
  std::vector<std::array<int, 4>> face_of;
  /// Relative orientation of the sorted vertex order of (tet, face) against
  /// the orbit representative.
  std::vector<std::array<std::int8_t, 4>> face_sign;

  std::vector<std::vector<std::pair<int, int>>> vertex_members;
  std::vector<std::vector<std::pair<int, int>>> edge_members;
  std::vector<std::vector<std::pair<int, int>>> face_members;
  std::vector<int> edge_degree;

  /// False if some edge is identified with itself in reverse.
  bool edges_valid = true;

  long long euler_characteristic() const {
    return static_cast<long long>(num_vertices) - num_edges + num_faces - num_tetrahedra;
  }
};

struct Requirements {
  bool closed = false;
  bool orientable = false;

  static constexpr Requirements closed_orientable() { return {true, true}; }
};

/// A validated semi-simplicial triangulation. Immutable; obtained from
/// validate().
class Triangulation {
 public:
  Triangulation() = default;

  int size() const { return table_.size(); }
  bool empty() const { return size() == 0; }

  const GluingTable& table() const { return table_; }
  const std::optional<Gluing>& gluing(int tet, int face) const { return table_.at(tet, face); }

  const SkeletonTable& skeleton() const { return skeleton_; }
  bool is_closed() const { return closed_; }
  bool is_orientable() const { return orientable_; }
  bool is_connected() const { return num_components_ <= 1; }
  int num_components() const { return num_components_; }

  /// Coherent orientation (+1/-1 per tet) when orientable, empty otherwise.
  const std::vector<std::int8_t>& orientation() const { return orientation_; }

  const std::vector<std::string>& labels() const { return labels_; }

  bool operator==(const Triangulation& other) const { return table_ == other.table_; }

 private:
  friend Triangulation validate(const GluingTable&, Requirements, std::vector<std::string>);

  GluingTable table_;
  SkeletonTable skeleton_;
  std::vector<std::int8_t> orientation_;
  std::vector<std::string> labels_;
  bool closed_ = false;
  bool orientable_ = false;
  int num_components_ = 0;
};

/// Checks every structural invariant of the table and builds the skeleton.
/// Throws Error{NonInvolutiveGluing, SelfGluedFace, NonOrientable, NotClosed}
/// naming the offending (tet, face).
Triangulation validate(const GluingTable& table, Requirements req = {},
                       std::vector<std::string> labels = {});

SkeletonTable compute_skeleton(const GluingTable& table);

/// Euler characteristic of the link of each vertex orbit.
std::vector<long long> vertex_link_euler(const Triangulation& tri);

/// Closed, every vertex link a 2-sphere, every edge valid.
bool is_closed_manifold(const Triangulation& tri);

/// Per-tet component index (components numbered by least tet).
std::vector<int> component_labels(const Triangulation& tri);

/// Splits into connected components. Tets keep their relative order.
std::vector<Triangulation> split_components(const Triangulation& tri,
                                            Requirements req = {});

Triangulation disjoint_union(const Triangulation& a, const Triangulation& b);

/// Keeps only the listed tetrahedra (in the given order); gluings to
/// dropped tets become boundary.
GluingTable restrict_table(const GluingTable& table, const std::vector<int>& keep);

/// "tri v1" text format.
GluingTable parse_tri(std::string_view text);
std::string format_tri(const GluingTable& table);
inline std::string format_tri(const Triangulation& tri) { return format_tri(tri.table()); }

}  // namespace kneser
