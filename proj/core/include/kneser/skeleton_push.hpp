#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kneser/rational.hpp"

namespace kneser {

struct Vec3 {
  double x = 0, y = 0, z = 0;

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  bool operator==(const Vec3&) const = default;
};

double dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);
double norm(const Vec3& a);

struct PatchTriangle {
  std::array<Vec3, 3> v;

  double area() const;
  Vec3 unit_normal() const;
};

/// A triangulated surface patch inside the model simplex.
struct Patch {
  std::vector<PatchTriangle> triangles;

  double area() const;
};

/// "patch v1": header "patch 1", then "triangles <n>", then n lines of nine
/// floats. '#' starts a comment.
Patch parse_patch(std::string_view text);
std::string format_patch(const Patch& patch);

struct ProjectionConfig {
  /// Regular unit-edge tetrahedron with barycenter at the origin.
  std::array<Vec3, 4> sigma;
  double r = 0;
  double nu = 50;
  std::size_t samples = 10000;
  std::uint64_t seed = 0;

  static ProjectionConfig standard();
  double inradius() const;
  /// Outward unit normals and offsets of the faces: n_k . y <= h_k inside.
  std::array<std::pair<Vec3, double>, 4> faces() const;
  bool strictly_inside(const Vec3& p) const;
};

struct Constants {
  double r = 0;
  double ball_volume = 0;  // |B|_3 = 4/3 pi r^3
  double k = 0;            // 32 pi r^3
  double nu0 = 0;
  /// The closed forms as multiples of pi r^3, and nu0 from them exactly.
  Rational ball_coefficient;
  Rational k_coefficient;
  Rational nu0_exact;
};

Constants constants(const ProjectionConfig& config);

/// Integral of 4 r^2 / |z|^2 over B(0, 2r) by nested adaptive quadrature in
/// cylindrical coordinates (independent of the polar closed form).
double k_by_quadrature(double r);

/// Throws CenterHit when x == u.
Vec3 radial_project(const ProjectionConfig& config, const Vec3& u, const Vec3& x);

/// Ray from u through x meets the boundary of the simplex at the returned
/// point. Throws CenterHit when x == u.
Vec3 boundary_project(const ProjectionConfig& config, const Vec3& u, const Vec3& x);

/// Area scale factor of radial_project at x on a surface with unit normal n.
double projection_jacobian(const ProjectionConfig& config, const Vec3& u, const Vec3& x, const Vec3& n);
/// The bound (2r / |x - u|)^2, valid inside B_u.
double jacobian_bound(const ProjectionConfig& config, const Vec3& u, const Vec3& x);

double distance_to_triangle(const Vec3& p, const PatchTriangle& t);

struct ProjectedArea {
  double projected = 0;       // |pi_u(Q)|_2
  double outside = 0;         // |Q - B_u|_2
  double bound_integral = 0;  // integral over Q in B_u of (2r/|x-u|)^2
  std::size_t points = 0;     // quadrature points inside B_u
  std::size_t violations = 0; // points where the Jacobian exceeded the bound
};

/// Throws CenterOnSurface if u lies on the patch.
ProjectedArea projected_area(const ProjectionConfig& config, const Vec3& u, const Patch& patch);

/// Area of the boundary projection from u, integrated with multiplicity.
double boundary_projected_area(const ProjectionConfig& config, const Vec3& u, const Patch& patch);

/// The i-th deterministic sample point of B(0, r) for the seed.
Vec3 sample_ball(std::uint64_t seed, std::uint64_t index, double r);

struct ProjectionEstimate {
  double nu = 0;
  double estimate = 0;
  double stderr_ = 0;
  double bound = 0;
  bool pass = false;
  std::size_t samples = 0;
  std::size_t bad = 0;
  std::size_t jacobian_checks = 0;
  std::size_t jacobian_violations = 0;
};

/// Per-sample dilatation ratios |pi_u(Q)|_2 / |Q|_2 for u = sample_ball(i).
struct DilatationSamples {
  std::vector<double> ratio;
  std::size_t jacobian_checks = 0;
  std::size_t jacobian_violations = 0;
};

/// Throws ZeroArea for a patch without area.
DilatationSamples sample_dilatations(const ProjectionConfig& config, const Patch& patch);

ProjectionEstimate estimate_from_samples(const ProjectionConfig& config, const DilatationSamples& samples, double nu);

ProjectionEstimate bad_set_volume(const ProjectionConfig& config, const Patch& patch, double nu);

struct GoodCenter {
  Vec3 u;
  std::uint64_t attempts = 0;
  double dilatation = 0;  // |pi_u(Q)|_2 / |Q|_2
  double lambda = 0;      // |psi_u(Q)|_2 / |Q|_2
};

/// Throws SampleBudgetExhausted after max_attempts samples.
GoodCenter find_good_center(const ProjectionConfig& config, const Patch& patch, std::uint64_t max_attempts = 10000);

/// A triangulated 2-sphere: vertex triples.
struct SphereMesh {
  std::vector<std::array<int, 3>> triangles;
};

/// Validates a closed connected triangulated surface of Euler characteristic 2
/// with circular vertex links. Throws NotASphere.
void check_sphere(const SphereMesh& mesh);

inline constexpr int kDegenerate = -1;

struct Generator {
  std::vector<int> triangles;  // indices into the input mesh
  std::size_t count() const { return triangles.size(); }
};

/// Collapses the kDegenerate triangles in listed order and returns the
/// maximal edge-connected groups of the remaining triangles in the quotient.
/// labels[i] is a face orbit index (>= 0) or kDegenerate.
std::vector<Generator> collapse_extract(const SphereMesh& mesh, const std::vector<int>& labels);

}  // namespace kneser
