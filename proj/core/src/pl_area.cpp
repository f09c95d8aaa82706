#include "kneser/pl_area.hpp"

#include <cmath>
#include <complex>

#include "kneser/error.hpp"
#include "kneser/metric.hpp"

namespace kneser {

namespace {

using cd = std::complex<double>;

std::size_t U(long long x) { return static_cast<std::size_t>(x); }

cd rotate(cd z) { return 1.0 / (1.0 - z); }

cd point(IdealPoint p) {
  cd z(0.0, std::exp(p.s));
  for (int k = 0; k < p.edge; ++k) z = rotate(z);
  return z;
}

// Length of the arc at a corner whose endpoints sit d1 and d2 from the edge
// midpoints toward the corner.
double corner_arc(double d1, double d2) { return arc_length({0, d1}, {2, -d2}); }

double toward(long long k, long long m) { return -crossing_position(k, m); }

}  // namespace

double arc_length(IdealPoint p, IdealPoint q) {
  const cd z = point(p);
  const cd w = point(q);
  const double c = 1.0 + std::norm(z - w) / (2.0 * z.imag() * w.imag());
  return std::acosh(std::max(1.0, c));
}

ArcPlacement canonical_placement(const Triangulation& tri, const NormalCoordinates& s) {
  const auto& sk = tri.skeleton();
  ArcPlacement out;
  const auto weights = edge_weights(tri, s);
  for (long long m : weights) {
    ArcPlacement::EdgeCrossings e;
    e.count = m;
    for (long long k = 1; k <= m; ++k) e.positions.push_back(crossing_position(k, m));
    out.edges.push_back(std::move(e));
  }
  for (int f = 0; f < sk.num_faces; ++f) {
    auto [t, lf] = sk.face_members[U(f)].front();
    for (int v = 0; v < 4; ++v) {
      if (v == lf) continue;
      std::array<int, 2> others{};
      for (int u = 0, n = 0; u < 4; ++u)
        if (u != v && u != lf) others[U(n++)] = u;
      for (long long l = 1; l <= corner_arcs(s, t, lf, v); ++l) {
        ArcPlacement::Arc arc{f, v, l, {}, {}};
        for (int k = 0; k < 2; ++k) {
          const int le = edge_index(v, others[U(k)]);
          const int orbit = sk.edge_of[U(t)][U(le)];
          arc.edges[U(k)] = orbit;
          // Index from the orbit's first vertex.
          const bool from_low = v < others[U(k)];
          const bool forward = (sk.edge_sign[U(t)][U(le)] > 0) == from_low;
          arc.index[U(k)] = forward ? l : weights[U(orbit)] + 1 - l;
        }
        out.arcs.push_back(arc);
      }
    }
  }
  return out;
}

PLArea pl_area(const Triangulation& tri, const NormalCoordinates& s) {
  PLArea area;
  area.weight = weight(tri, s);
  for (int t = 0; t < tri.size(); ++t)
    for (int f = 0; f < 4; ++f)
      for (int v = 0; v < 4; ++v) {
        if (v == f) continue;
        const long long c = corner_arcs(s, t, f, v);
        if (c == 0) continue;
        std::array<long long, 2> m{};
        for (int u = 0, n = 0; u < 4; ++u)
          if (u != v && u != f) m[U(n++)] = edge_crossings(s, t, edge_index(u, v));
        for (long long l = 1; l <= c; ++l) area.length += corner_arc(toward(l, m[0]), toward(l, m[1]));
      }
  return area;
}

DiameterCheck verify_diameter_bound(const Triangulation& tri, const NormalCoordinates& s) {
  if (s.is_zero()) throw Error(ErrorCode::EmptySurface, "surface has no normal disks");
  DiameterCheck out;
  out.weight = weight(tri, s);
  out.diameter = support_metrics(tri, s.support()).diameter;
  out.pass = static_cast<long long>(out.diameter) <= out.weight * out.weight;
  return out;
}

}  // namespace kneser
