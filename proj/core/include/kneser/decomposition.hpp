#pragma once

#include <optional>
#include <vector>

#include "kneser/homology.hpp"
#include "kneser/normal.hpp"
#include "kneser/pl_area.hpp"

namespace kneser {

enum class CertificateKind { CertifiedWeaklyIrreducible, NotCertified };

const char* to_string(CertificateKind kind);

struct Certificate {
  CertificateKind kind = CertificateKind::NotCertified;
  std::size_t inspected = 0;  // vertex solutions examined
  std::vector<NormalCoordinates> witnesses;

  bool certified() const { return kind == CertificateKind::CertifiedWeaklyIrreducible; }
};

/// Connected, orientable, Euler characteristic 2, with at least one quad.
bool is_nontrivial_sphere(const Triangulation& tri, const NormalCoordinates& s);

Certificate certify_from_solutions(const Triangulation& tri, const std::vector<NormalCoordinates>& solutions);
Certificate certify_weakly_irreducible(const Triangulation& tri, const EnumerationOptions& options = {});

struct EssentialSphere {
  NormalCoordinates coords;
  PLArea area;
};

/// Least nontrivial sphere by (PLArea, coordinates) among the given solutions.
std::optional<EssentialSphere> select_essential_sphere(const Triangulation& tri,
                                                       const std::vector<NormalCoordinates>& solutions);
std::optional<EssentialSphere> find_essential_sphere(const Triangulation& tri, const EnumerationOptions& options = {});

/// Deletes the tetrahedra carrying quads of `sphere`, flattens them, and
/// regroups the survivors into closed orientable components (possibly none).
/// Throws VertexLinkingRejected for a quad-free surface.
std::vector<Triangulation> crush(const Triangulation& tri, const NormalCoordinates& sphere);

/// Subdivides every tetrahedron into the cells cut out by the normal disks of
/// `s` and takes the flag (barycentric) triangulation of that cell complex.
/// With `cut`, flag tetrahedra are not glued across the normal disks.
GluingTable flag_subdivision(const Triangulation& tri, const NormalCoordinates& s, bool cut);

/// Cones every boundary component of a triangulation to a new vertex.
GluingTable cone_boundary(const GluingTable& table);

/// Cuts along the sphere and caps each boundary sphere with a ball.
/// Topologically faithful; meant as a cross-check for crush().
std::vector<Triangulation> cut_and_cap(const Triangulation& tri, const NormalCoordinates& sphere);

/// Removes tet 0 from each summand and glues the two boundary spheres. When
/// tet 0 does not have four distinct vertices it is first subdivided by
/// 1-4 moves until a tetrahedron with four distinct vertices sits at index 0.
Triangulation connected_sum(const Triangulation& a, const Triangulation& b);

/// Greedy 3-2 moves on degree-three edges lying in three distinct tets.
Triangulation simplify(const Triangulation& tri);

struct DecompositionOptions {
  EnumerationOptions enumeration;
  bool oracle_check = false;
};

struct SphereRecord {
  NormalCoordinates coords;
  PLArea area;
  int piece = 0;  // index of the piece it was found in (creation order)
  int support_size = 0;
  int diameter = 0;
  bool diameter_ok = false;
};

struct PieceRecord {
  Triangulation tri;
  Certificate certificate;
  AbelianGroup h1;
};

struct OracleRecord {
  std::vector<AbelianGroup> crush_h1;
  std::vector<AbelianGroup> cut_h1;
  bool agree = false;
};

struct DecompositionReport {
  int input_tetrahedra = 0;
  AbelianGroup input_h1;
  std::vector<SphereRecord> spheres;
  std::vector<PieceRecord> pieces;
  std::vector<OracleRecord> oracle;
  long long c3 = 0;
  long long c1 = 0;
  std::vector<AbelianGroup> pieces_h1;  // nontrivial entries, sorted
  bool balanced = false;
  int crushes = 0;
  int enumerations = 0;

  bool all_certified() const;
  bool oracle_agrees() const;
};

/// Multisets of groups equal after dropping trivial groups.
bool same_nontrivial_multiset(std::vector<AbelianGroup> a, std::vector<AbelianGroup> b);

DecompositionReport decompose(const Triangulation& tri, const DecompositionOptions& options = {});

}  // namespace kneser
