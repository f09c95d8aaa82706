#include "kneser/normal.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

#include "kneser/error.hpp"
#include "kneser/rational.hpp"

namespace kneser {

namespace {

std::size_t U(long long x) { return static_cast<std::size_t>(x); }

// Triangle or quad containing the arc at (face, corner vertex, layer) in tet.
NormalDisk disk_of_arc(const NormalCoordinates& s, int tet, int face, int vertex, long long layer) {
  const long long tri = s.triangle(tet, vertex);
  if (layer <= tri) return {tet, vertex, layer};
  const int q = quad_type_of_pair(face, vertex);
  const long long k = layer - tri;
  const bool zero_side = vertex == 0 || kQuadPartner[q][0] == vertex;
  return {tet, 4 + q, zero_side ? k : s.quad(tet, q) + 1 - k};
}

// Which side of the arc the disk's chosen transverse direction points to:
// +1 toward the corner vertex. Triangles point at their vertex, quads at the
// vertex pair containing 0.
int disk_side(const NormalDisk& d, int vertex) {
  if (d.slot < 4) return 1;
  const int q = d.slot - 4;
  return (vertex == 0 || kQuadPartner[q][0] == vertex) ? 1 : -1;
}

}  // namespace

int NormalCoordinates::quad_type(int tet) const {
  for (int q = 0; q < 3; ++q)
    if (quad(tet, q) != 0) return q;
  return -1;
}

long long NormalCoordinates::quad_count(int tet) const {
  return quad(tet, 0) + quad(tet, 1) + quad(tet, 2);
}

bool NormalCoordinates::is_zero() const {
  return std::all_of(values.begin(), values.end(), [](long long v) { return v == 0; });
}

bool NormalCoordinates::has_quad() const {
  for (int t = 0; t < num_tets(); ++t)
    if (quad_count(t) != 0) return true;
  return false;
}

bool NormalCoordinates::satisfies_quad_constraint() const {
  for (int t = 0; t < num_tets(); ++t) {
    int nonzero = 0;
    for (int q = 0; q < 3; ++q) nonzero += quad(t, q) != 0;
    if (nonzero > 1) return false;
  }
  return true;
}

bool NormalCoordinates::touches(int tet) const {
  for (int k = 0; k < kCoordsPerTet; ++k)
    if (values[index(tet, k)] != 0) return true;
  return false;
}

std::vector<int> NormalCoordinates::support() const {
  std::vector<int> out;
  for (int t = 0; t < num_tets(); ++t)
    if (touches(t)) out.push_back(t);
  return out;
}

NormalCoordinates NormalCoordinates::operator+(const NormalCoordinates& o) const {
  NormalCoordinates out = *this;
  for (std::size_t i = 0; i < values.size(); ++i) out.values[i] += o.values[i];
  return out;
}

NormalCoordinates NormalCoordinates::scaled(long long k) const {
  NormalCoordinates out = *this;
  for (auto& v : out.values) v *= k;
  return out;
}

bool MatchingSystem::satisfied_by(const NormalCoordinates& s) const {
  if (static_cast<int>(s.values.size()) != columns) return false;
  for (const auto& row : rows) {
    long long sum = 0;
    for (std::size_t i = 0; i < row.size(); ++i) sum += row[i] * s.values[i];
    if (sum != 0) return false;
  }
  return true;
}

MatchingSystem matching_system(const Triangulation& tri) {
  MatchingSystem sys;
  sys.columns = tri.size() * kCoordsPerTet;
  const auto& sk = tri.skeleton();
  for (const auto& members : sk.face_members) {
    if (members.size() != 2) continue;
    auto [t, f] = members.front();
    const auto& g = *tri.gluing(t, f);
    for (int v = 0; v < 4; ++v) {
      if (v == f) continue;
      std::vector<int> row(static_cast<std::size_t>(sys.columns), 0);
      const int w = g.perm[v];
      row[NormalCoordinates::index(t, v)] += 1;
      row[NormalCoordinates::index(t, 4 + quad_type_of_pair(f, v))] += 1;
      row[NormalCoordinates::index(g.tet, w)] -= 1;
      row[NormalCoordinates::index(g.tet, 4 + quad_type_of_pair(g.face, w))] -= 1;
      sys.rows.push_back(std::move(row));
    }
  }
  return sys;
}

long long edge_crossings(const NormalCoordinates& s, int tet, int e) {
  const int a = kEdgeVertices[U(e)][0];
  const int b = kEdgeVertices[U(e)][1];
  long long c = s.triangle(tet, a) + s.triangle(tet, b);
  for (int q = 0; q < 3; ++q)
    if (quad_crosses_edge(q, a, b)) c += s.quad(tet, q);
  return c;
}

std::vector<long long> edge_weights(const Triangulation& tri, const NormalCoordinates& s) {
  const auto& sk = tri.skeleton();
  std::vector<long long> out(U(sk.num_edges), 0);
  for (int e = 0; e < sk.num_edges; ++e) {
    const auto& members = sk.edge_members[U(e)];
    const long long first = edge_crossings(s, members.front().first, members.front().second);
    for (auto [t, le] : members)
      if (edge_crossings(s, t, le) != first)
        throw Error(ErrorCode::InconsistentCrossings,
                    "edge orbit " + std::to_string(e) + " has disagreeing crossing counts");
    out[U(e)] = first;
  }
  return out;
}

long long weight(const Triangulation& tri, const NormalCoordinates& s) {
  const auto w = edge_weights(tri, s);
  return std::accumulate(w.begin(), w.end(), 0LL);
}

long long corner_arcs(const NormalCoordinates& s, int tet, int face, int vertex) {
  return s.triangle(tet, vertex) + s.quad(tet, quad_type_of_pair(face, vertex));
}

bool ReconstructedSurface::orientable() const {
  return std::all_of(components.begin(), components.end(),
                     [](const SurfaceComponent& c) { return c.orientable; });
}

bool ReconstructedSurface::vertex_linking() const {
  return !components.empty() && std::all_of(components.begin(), components.end(),
                                            [](const SurfaceComponent& c) { return c.vertex_linking; });
}

namespace {

struct CellCounts {
  long long vertices = 0, edges = 0, faces = 0;
};

CellCounts count_cells(const Triangulation& tri, const NormalCoordinates& s) {
  CellCounts c;
  c.vertices = weight(tri, s);
  for (const auto& members : tri.skeleton().face_members) {
    auto [t, f] = members.front();
    for (int v = 0; v < 4; ++v)
      if (v != f) c.edges += corner_arcs(s, t, f, v);
  }
  for (long long v : s.values) c.faces += v;
  return c;
}

}  // namespace

ReconstructedSurface reconstruct(const Triangulation& tri, const NormalCoordinates& s) {
  ReconstructedSurface out;
  const auto total = count_cells(tri, s);
  out.vertices = total.vertices;
  out.edges = total.edges;
  out.faces = total.faces;
  out.euler = total.vertices - total.edges + total.faces;

  // Disk numbering: per tet, triangles by vertex then layer, then quads.
  const int n = tri.size();
  std::vector<std::array<long long, kCoordsPerTet>> offset(U(n));
  for (int t = 0; t < n; ++t)
    for (int k = 0; k < kCoordsPerTet; ++k) {
      offset[U(t)][U(k)] = static_cast<long long>(out.disks.size());
      for (long long l = 1; l <= s.values[NormalCoordinates::index(t, k)]; ++l)
        out.disks.push_back({t, k, l});
    }
  const auto id = [&](const NormalDisk& d) { return offset[U(d.tet)][U(d.slot)] + d.layer - 1; };

  std::vector<std::vector<std::pair<long long, int>>> adj(out.disks.size());
  for (const auto& members : tri.skeleton().face_members) {
    if (members.size() != 2) continue;
    auto [t, f] = members.front();
    const auto& g = *tri.gluing(t, f);
    for (int v = 0; v < 4; ++v) {
      if (v == f) continue;
      const int w = g.perm[v];
      for (long long l = 1; l <= corner_arcs(s, t, f, v); ++l) {
        const auto d1 = disk_of_arc(s, t, f, v, l);
        const auto d2 = disk_of_arc(s, g.tet, g.face, w, l);
        const int rel = disk_side(d1, v) * disk_side(d2, w);
        adj[U(id(d1))].emplace_back(id(d2), rel);
        adj[U(id(d2))].emplace_back(id(d1), rel);
      }
    }
  }

  out.disk_component.assign(out.disks.size(), -1);
  std::vector<int> orient(out.disks.size(), 0);
  for (std::size_t start = 0; start < out.disks.size(); ++start) {
    if (out.disk_component[start] >= 0) continue;
    const int comp = static_cast<int>(out.components.size());
    SurfaceComponent piece;
    piece.coords = NormalCoordinates(n);
    std::queue<std::size_t> q;
    q.push(start);
    out.disk_component[start] = comp;
    orient[start] = 1;
    while (!q.empty()) {
      const auto x = q.front();
      q.pop();
      const auto& d = out.disks[x];
      ++piece.coords.values[NormalCoordinates::index(d.tet, d.slot)];
      for (auto [y, rel] : adj[x]) {
        const int want = orient[x] * rel;
        if (out.disk_component[U(y)] < 0) {
          out.disk_component[U(y)] = comp;
          orient[U(y)] = want;
          q.push(U(y));
        } else if (orient[U(y)] != want) {
          piece.orientable = false;
        }
      }
    }
    const auto cells = count_cells(tri, piece.coords);
    piece.vertices = cells.vertices;
    piece.edges = cells.edges;
    piece.faces = cells.faces;
    piece.euler = cells.vertices - cells.edges + cells.faces;
    piece.genus = piece.orientable ? static_cast<int>((2 - piece.euler) / 2) : -1;
    piece.vertex_linking = !piece.coords.has_quad();
    out.components.push_back(std::move(piece));
  }
  return out;
}

long long euler_from_coordinates(const Triangulation& tri, const NormalCoordinates& s) {
  const auto& sk = tri.skeleton();
  Rational chi;
  for (int t = 0; t < tri.size(); ++t) {
    for (int v = 0; v < 4; ++v) {
      const long long x = s.triangle(t, v);
      if (x == 0) continue;
      Rational term(-1, 2);  // 1 - 3/2
      for (int u = 0; u < 4; ++u)
        if (u != v) term += Rational(1, sk.edge_degree[U(sk.edge_of[U(t)][U(edge_index(u, v))])]);
      chi += term * Rational(x);
    }
    for (int q = 0; q < 3; ++q) {
      const long long x = s.quad(t, q);
      if (x == 0) continue;
      Rational term(-1);  // 1 - 4/2
      for (int e = 0; e < 6; ++e)
        if (quad_crosses_edge(q, kEdgeVertices[U(e)][0], kEdgeVertices[U(e)][1]))
          term += Rational(1, sk.edge_degree[U(sk.edge_of[U(t)][U(e)])]);
      chi += term * Rational(x);
    }
  }
  if (!chi.is_integer())
    throw Error(ErrorCode::InconsistentCrossings, "coordinate Euler formula is not an integer");
  return chi.num();
}

std::string format_surface_line(const Triangulation& tri, const NormalCoordinates& s) {
  std::ostringstream out;
  out << 'S';
  for (long long v : s.values) out << ' ' << v;
  const auto surf = reconstruct(tri, s);
  out << " # wt=" << weight(tri, s) << " chi=" << surf.euler << " vl=" << (s.has_quad() ? 0 : 1);
  return out.str();
}

}  // namespace kneser
