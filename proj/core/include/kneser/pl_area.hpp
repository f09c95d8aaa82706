#pragma once

#include <compare>
#include <vector>

#include "kneser/normal.hpp"

namespace kneser {

inline constexpr double kLengthTolerance = 1e-9;
inline constexpr const char* kLengthModel = "canonical-h1";

/// (weight, length), ordered lexicographically; lengths within
/// kLengthTolerance compare equal.
struct PLArea {
  long long weight = 0;
  double length = 0.0;

  bool operator<(const PLArea& o) const {
    return weight < o.weight || (weight == o.weight && length < o.length - kLengthTolerance);
  }
  bool equivalent(const PLArea& o) const {
    return weight == o.weight && !(length < o.length - kLengthTolerance) && !(o.length < length - kLengthTolerance);
  }
};

/// The three edges of the ideal triangle with vertices 0, 1, infinity:
/// 0 = (0, inf) parametrized by i e^s, 1 = its image under z -> 1/(1-z)
/// (the edge (1, 0)), 2 = the image of edge 1 (the edge (inf, 1)).
/// s = 0 is the incircle touch point.
struct IdealPoint {
  int edge = 0;
  double s = 0.0;
};

double arc_length(IdealPoint p, IdealPoint q);

/// Signed offset from the edge midpoint of the k-th (1-based) of m crossings.
inline double crossing_position(long long k, long long m, double spacing = 1.0) {
  return (static_cast<double>(k) - static_cast<double>(m + 1) / 2.0) * spacing;
}

struct ArcPlacement {
  struct EdgeCrossings {
    long long count = 0;
    std::vector<double> positions;  // measured from the orbit's first vertex
  };
  struct Arc {
    int face = 0;                // face orbit
    int corner = 0;              // local vertex in the face orbit representative
    long long layer = 0;         // 1 nearest the corner
    std::array<int, 2> edges{};  // edge orbits of the two endpoints
    std::array<long long, 2> index{};  // crossing index along each edge, 1-based
  };
  std::vector<EdgeCrossings> edges;
  std::vector<Arc> arcs;
};

ArcPlacement canonical_placement(const Triangulation& tri, const NormalCoordinates& s);

PLArea pl_area(const Triangulation& tri, const NormalCoordinates& s);

struct DiameterCheck {
  int diameter = 0;
  long long weight = 0;
  bool pass = false;
};

/// Throws EmptySurface on the zero vector.
DiameterCheck verify_diameter_bound(const Triangulation& tri, const NormalCoordinates& s);

}  // namespace kneser
