#pragma once

#include <vector>

#include "kneser/triangulation.hpp"

namespace kneser {

/// Size and d_T-diameter of a set of tetrahedra.
struct SupportMetrics {
  std::vector<int> support;  // sorted, distinct
  int size = 0;
  int diameter = 0;
};

/// Distances d_T(source, .) to every tetrahedron; -1 where unreachable.
/// Two tetrahedra are adjacent when they share a vertex of the triangulation,
/// so d_T counts the tetrahedra a path must cross, minus one.
std::vector<int> quasimetric_from(const Triangulation& tri, int source);

/// d_T(a, b). Throws Disconnected when no chain of tetrahedra joins them.
int quasimetric(const Triangulation& tri, int a, int b);

/// Throws EmptySupport for an empty set.
SupportMetrics support_metrics(const Triangulation& tri, std::vector<int> support);

}  // namespace kneser
