#pragma once

#include <string>
#include <utility>
#include <vector>

#include "kneser/skeleton_push.hpp"

namespace kneser {

/// Subdivided icosahedron with vertices pushed to the sphere.
Patch icosphere(const Vec3& center, double radius, int subdivisions);

/// Axis-aligned square in the plane z = height, split into 2 n^2 triangles.
Patch flat_square(double half_width, double height, int n);

/// Graph of a product of sines over a square.
Patch wavy_sheet(double half_width, double amplitude, int n);

/// A small triangle near vertex 0 of the standard simplex, far from B(0, 3r).
Patch corner_patch();

/// Named patches used by the acceptance checks.
std::vector<std::pair<std::string, Patch>> corpus_patches();

struct LabelledSphere {
  SphereMesh mesh;
  std::vector<int> labels;
};

/// Two capped disks joined by a degenerate annulus: 4n triangles, with both
/// caps nondegenerate (labels 0 and 1) and the band kDegenerate.
LabelledSphere two_sphere_instance(int n = 6);

}  // namespace kneser
