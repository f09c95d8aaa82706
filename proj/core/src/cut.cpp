#include <algorithm>
#include <functional>
#include <map>

#include "kneser/decomposition.hpp"
#include "kneser/error.hpp"

namespace kneser {

namespace {

std::size_t U(long long x) { return static_cast<std::size_t>(x); }

enum Kind : int {
  kVertex,
  kCrossing,
  kSeg,
  kArc,
  kFaceRegion,
  kFaceCentral,
  kTri,
  kQuad,
  kCorner,
  kCentral,
  kSideA,
  kPrism,
  kSideB,
};

struct Key {
  int kind = 0;
  int a = 0;
  int b = 0;
  long long c = 0;

  auto operator<=>(const Key&) const = default;
};

int dim_of(int kind) {
  switch (kind) {
    case kVertex:
    case kCrossing:
      return 0;
    case kSeg:
    case kArc:
      return 1;
    case kFaceRegion:
    case kFaceCentral:
    case kTri:
    case kQuad:
      return 2;
    default:
      return 3;
  }
}

bool on_face(const Key& k) { return k.kind == kFaceRegion || k.kind == kFaceCentral; }

// The cells one tetrahedron is cut into by the normal disks.
class LocalComplex {
 public:
  LocalComplex(const NormalCoordinates& s, int tet) : s_(s), tet_(tet) {
    for (int v = 0; v < 4; ++v) tri_[U(v)] = s.triangle(tet, v);
    type_ = s.quad_type(tet);
    q_ = type_ < 0 ? 0 : s.quad(tet, type_);
    for (int e = 0; e < 6; ++e) m_[U(e)] = edge_crossings(s, tet, e);
    build();
    check();
  }

  long long crossings(int e) const { return m_[U(e)]; }
  int id(const Key& k) const {
    auto it = ids_.find(k);
    if (it == ids_.end()) throw Error(ErrorCode::InvalidArgument, "missing cell in subdivision");
    return it->second;
  }
  const Key& key(int id) const { return cells_[U(id)]; }
  int size() const { return static_cast<int>(cells_.size()); }
  const std::vector<int>& facets(int id) const { return facets_[U(id)]; }
  const std::vector<int>& cofacets(int id) const { return cofacets_[U(id)]; }

 private:
  long long arcs(int f, int v) const { return corner_arcs(s_, tet_, f, v); }

  Key point(int e, long long j) const {
    const auto [a, b] = kEdgeVertices[U(e)];
    if (j == 0) return {kVertex, a, 0, 0};
    if (j == m_[U(e)] + 1) return {kVertex, b, 0, 0};
    return {kCrossing, e, 0, j};
  }
  Key point_from(int v, int other, long long i) const {
    const int e = edge_index(v, other);
    return point(e, v < other ? i : m_[U(e)] + 1 - i);
  }
  Key seg_from(int v, int other, long long i) const {
    const int e = edge_index(v, other);
    return {kSeg, e, 0, v < other ? i : m_[U(e)] - i};
  }
  std::array<int, 2> others(int f, int v) const {
    std::array<int, 2> out{};
    for (int u = 0, n = 0; u < 4; ++u)
      if (u != f && u != v) out[U(n++)] = u;
    return out;
  }
  bool zero_side(int v) const { return v == 0 || kQuadPartner[type_][0] == v; }
  long long quad_layer(int f, long long j) const {
    const int w = kQuadPartner[type_][f];
    return tri_[U(w)] + (zero_side(w) ? j : q_ + 1 - j);
  }

  void add(const Key& k, std::vector<Key> boundary) {
    ids_.emplace(k, static_cast<int>(cells_.size()));
    cells_.push_back(k);
    pending_.push_back(std::move(boundary));
  }

  void build() {
    for (int v = 0; v < 4; ++v) add({kVertex, v, 0, 0}, {});
    for (int e = 0; e < 6; ++e)
      for (long long k = 1; k <= m_[U(e)]; ++k) add({kCrossing, e, 0, k}, {});
    for (int e = 0; e < 6; ++e)
      for (long long j = 0; j <= m_[U(e)]; ++j) add({kSeg, e, 0, j}, {point(e, j), point(e, j + 1)});
    for (int f = 0; f < 4; ++f)
      for (int v = 0; v < 4; ++v) {
        if (v == f) continue;
        const auto [x, y] = others(f, v);
        for (long long l = 1; l <= arcs(f, v); ++l) add({kArc, f, v, l}, {point_from(v, x, l), point_from(v, y, l)});
      }
    for (int f = 0; f < 4; ++f) {
      std::vector<Key> central;
      for (int v = 0; v < 4; ++v) {
        if (v == f) continue;
        const auto [x, y] = others(f, v);
        const long long c = arcs(f, v);
        for (long long l = 1; l <= c; ++l) {
          std::vector<Key> b{{kArc, f, v, l}, seg_from(v, x, l - 1), seg_from(v, y, l - 1)};
          if (l >= 2) b.push_back({kArc, f, v, l - 1});
          add({kFaceRegion, f, v, l}, std::move(b));
        }
        if (c > 0) central.push_back({kArc, f, v, c});
        if (v < x) central.push_back(seg_from(v, x, c));
        if (v < y) central.push_back(seg_from(v, y, c));
      }
      add({kFaceCentral, f, 0, 0}, std::move(central));
    }
    for (int v = 0; v < 4; ++v)
      for (long long k = 1; k <= tri_[U(v)]; ++k) {
        std::vector<Key> b;
        for (int f = 0; f < 4; ++f)
          if (f != v) b.push_back({kArc, f, v, k});
        add({kTri, v, 0, k}, std::move(b));
      }
    for (long long j = 1; j <= q_; ++j) {
      std::vector<Key> b;
      for (int f = 0; f < 4; ++f) b.push_back({kArc, f, kQuadPartner[type_][f], quad_layer(f, j)});
      add({kQuad, 0, 0, j}, std::move(b));
    }

    for (int v = 0; v < 4; ++v)
      for (long long k = 1; k <= tri_[U(v)]; ++k) {
        std::vector<Key> b{{kTri, v, 0, k}};
        if (k >= 2) b.push_back({kTri, v, 0, k - 1});
        for (int f = 0; f < 4; ++f)
          if (f != v) b.push_back({kFaceRegion, f, v, k});
        add({kCorner, v, 0, k}, std::move(b));
      }
    const auto outer_tri = [&](std::vector<Key>& b, int v) {
      if (tri_[U(v)] > 0) b.push_back({kTri, v, 0, tri_[U(v)]});
    };
    if (q_ == 0) {
      std::vector<Key> b;
      for (int v = 0; v < 4; ++v) outer_tri(b, v);
      for (int f = 0; f < 4; ++f) b.push_back({kFaceCentral, f, 0, 0});
      add({kCentral, 0, 0, 0}, std::move(b));
      return;
    }
    const int x = 0;
    const int y = kQuadPartner[type_][0];
    int z = -1, w = -1;
    for (int v = 1; v < 4; ++v)
      if (v != y) (z < 0 ? z : w) = v;
    const auto strip = [&](int face, int corner, long long layer) { return Key{kFaceRegion, face, corner, layer}; };
    {
      std::vector<Key> b{{kQuad, 0, 0, 1}, {kFaceCentral, z, 0, 0}, {kFaceCentral, w, 0, 0},
                         strip(x, y, tri_[U(y)] + 1), strip(y, x, tri_[U(x)] + 1)};
      outer_tri(b, x);
      outer_tri(b, y);
      add({kSideA, 0, 0, 0}, std::move(b));
    }
    for (long long j = 1; j < q_; ++j)
      add({kPrism, 0, 0, j},
          {{kQuad, 0, 0, j}, {kQuad, 0, 0, j + 1}, strip(x, y, tri_[U(y)] + j + 1), strip(y, x, tri_[U(x)] + j + 1),
           strip(z, w, tri_[U(w)] + q_ - j + 1), strip(w, z, tri_[U(z)] + q_ - j + 1)});
    {
      std::vector<Key> b{{kQuad, 0, 0, q_}, {kFaceCentral, x, 0, 0}, {kFaceCentral, y, 0, 0},
                         strip(z, w, tri_[U(w)] + 1), strip(w, z, tri_[U(z)] + 1)};
      outer_tri(b, z);
      outer_tri(b, w);
      add({kSideB, 0, 0, 0}, std::move(b));
    }
  }

  void check() {
    facets_.assign(cells_.size(), {});
    cofacets_.assign(cells_.size(), {});
    for (std::size_t i = 0; i < cells_.size(); ++i)
      for (const auto& k : pending_[i]) {
        const int j = id(k);
        if (dim_of(k.kind) + 1 != dim_of(cells_[i].kind))
          throw Error(ErrorCode::InvalidArgument, "cell boundary has the wrong dimension");
        facets_[i].push_back(j);
        cofacets_[U(j)].push_back(static_cast<int>(i));
      }
    for (std::size_t i = 0; i < cells_.size(); ++i) {
      const int d = dim_of(cells_[i].kind);
      if (d == 1 && facets_[i].size() != 2) throw Error(ErrorCode::InvalidArgument, "1-cell without two ends");
      if (d == 2) {
        const std::size_t expect = on_face(cells_[i]) ? 1 : 2;
        if (cofacets_[i].size() != expect) throw Error(ErrorCode::InvalidArgument, "2-cell with wrong cofaces");
      }
      if (d < 2) continue;
      // Each codimension-two face of the cell lies on exactly two facets.
      std::map<int, int> count;
      for (int f : facets_[i])
        for (int g : facets_[U(f)]) ++count[g];
      for (auto [g, c] : count)
        if (c != 2) throw Error(ErrorCode::InvalidArgument, "cell boundary is not a closed manifold");
    }
  }

  const NormalCoordinates& s_;
  int tet_;
  std::array<long long, 4> tri_{};
  int type_ = -1;
  long long q_ = 0;
  std::array<long long, 6> m_{};
  std::vector<Key> cells_;
  std::map<Key, int> ids_;
  std::vector<std::vector<Key>> pending_;
  std::vector<std::vector<int>> facets_;
  std::vector<std::vector<int>> cofacets_;
};

Key map_key(const Key& k, const Perm4& p, const LocalComplex& target) {
  const auto along = [&](int e, bool& forward) {
    const int a = p[kEdgeVertices[U(e)][0]];
    const int b = p[kEdgeVertices[U(e)][1]];
    forward = a < b;
    return edge_index(a, b);
  };
  bool forward = true;
  switch (k.kind) {
    case kVertex:
      return {kVertex, p[k.a], 0, 0};
    case kCrossing: {
      const int e = along(k.a, forward);
      return {kCrossing, e, 0, forward ? k.c : target.crossings(e) + 1 - k.c};
    }
    case kSeg: {
      const int e = along(k.a, forward);
      return {kSeg, e, 0, forward ? k.c : target.crossings(e) - k.c};
    }
    case kArc:
    case kFaceRegion:
      return {k.kind, p[k.a], p[k.b], k.c};
    case kFaceCentral:
      return {kFaceCentral, p[k.a], 0, 0};
    default:
      throw Error(ErrorCode::InvalidArgument, "cell does not lie on a face");
  }
}

int other_in(const std::vector<int>& cells, int skip, const std::function<bool(int)>& pred) {
  for (int c : cells)
    if (c != skip && pred(c)) return c;
  throw Error(ErrorCode::InvalidArgument, "flag has no neighbour");
}

bool contains(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

}  // namespace

GluingTable flag_subdivision(const Triangulation& tri, const NormalCoordinates& s, bool cut) {
  if (!s.satisfies_quad_constraint()) throw Error(ErrorCode::InvalidArgument, "surface violates the quadrilateral constraint");
  std::vector<LocalComplex> local;
  local.reserve(U(tri.size()));
  for (int t = 0; t < tri.size(); ++t) local.emplace_back(s, t);

  using Flag = std::array<int, 5>;
  std::map<Flag, int> index;
  std::vector<Flag> flags;
  for (int t = 0; t < tri.size(); ++t) {
    const auto& lc = local[U(t)];
    for (int c3 = 0; c3 < lc.size(); ++c3) {
      if (dim_of(lc.key(c3).kind) != 3) continue;
      for (int c2 : lc.facets(c3))
        for (int c1 : lc.facets(c2))
          for (int c0 : lc.facets(c1)) {
            const Flag f{t, c3, c2, c1, c0};
            index.emplace(f, static_cast<int>(flags.size()));
            flags.push_back(f);
          }
    }
  }

  GluingTable out(static_cast<int>(flags.size()));
  const Perm4 id;
  for (std::size_t i = 0; i < flags.size(); ++i) {
    const auto [t, c3, c2, c1, c0] = flags[i];
    const auto& lc = local[U(t)];
    const auto link = [&](int face, const Flag& other) {
      out.set(static_cast<int>(i), face, Gluing{index.at(other), face, id});
    };
    link(3, {t, c3, c2, c1, other_in(lc.facets(c1), c0, [](int) { return true; })});
    link(2, {t, c3, c2, other_in(lc.facets(c2), c1, [&](int x) { return contains(lc.facets(x), c0); }), c0});
    link(1, {t, c3, other_in(lc.facets(c3), c2, [&](int x) { return contains(lc.facets(x), c1); }), c1, c0});
    const Key& k2 = lc.key(c2);
    if (on_face(k2)) {
      const auto& g = tri.gluing(t, k2.a);
      if (!g) continue;
      const auto& far = local[U(g->tet)];
      const int d2 = far.id(map_key(k2, g->perm, far));
      const int d1 = far.id(map_key(lc.key(c1), g->perm, far));
      const int d0 = far.id(map_key(lc.key(c0), g->perm, far));
      link(0, {g->tet, far.cofacets(d2).front(), d2, d1, d0});
    } else if (!cut) {
      link(0, {t, other_in(lc.cofacets(c2), c3, [](int) { return true; }), c2, c1, c0});
    }
  }
  return out;
}

GluingTable cone_boundary(const GluingTable& table) {
  const int n = table.size();
  std::vector<std::pair<int, int>> boundary;
  std::map<std::pair<int, int>, int> cone;
  for (int t = 0; t < n; ++t)
    for (int f = 0; f < 4; ++f)
      if (!table.at(t, f)) {
        cone.emplace(std::pair{t, f}, n + static_cast<int>(boundary.size()));
        boundary.emplace_back(t, f);
      }
  GluingTable out = table;
  for (std::size_t i = 0; i < boundary.size(); ++i) out.add_tetrahedron();
  const Perm4 id;
  for (std::size_t i = 0; i < boundary.size(); ++i) {
    const auto [t, f] = boundary[i];
    const int c = n + static_cast<int>(i);
    out.set(t, f, Gluing{c, f, id});
    out.set(c, f, Gluing{t, f, id});
    for (int j = 0; j < 4; ++j) {
      if (j == f) continue;
      int a = -1, b = -1;
      for (int v = 0; v < 4; ++v)
        if (v != f && v != j) (a < 0 ? a : b) = v;
      // Walk around the boundary edge {a, b} to the adjacent boundary face.
      int x = t;
      int leave = j;
      Perm4 phi;
      for (int steps = 0;; ++steps) {
        if (steps > 4 * n + 4) throw Error(ErrorCode::InvalidArgument, "boundary edge walk does not close");
        const auto& g = table.at(x, leave);
        if (!g) break;
        phi = g->perm * phi;
        x = g->tet;
        const int entered = g->face;
        for (int v = 0; v < 4; ++v)
          if (v != phi[a] && v != phi[b] && v != entered) leave = v;
      }
      const int A = phi[a], B = phi[b];
      int k = -1;
      for (int v = 0; v < 4; ++v)
        if (v != A && v != B && v != leave) k = v;
      std::array<int, 4> img{};
      img[U(a)] = A;
      img[U(b)] = B;
      img[U(f)] = leave;
      img[U(j)] = k;
      const Perm4 sigma(img[0], img[1], img[2], img[3]);
      out.set(c, j, Gluing{cone.at({x, leave}), k, sigma});
    }
  }
  return out;
}

std::vector<Triangulation> cut_and_cap(const Triangulation& tri, const NormalCoordinates& sphere) {
  const auto capped = cone_boundary(flag_subdivision(tri, sphere, true));
  return split_components(validate(capped, Requirements::closed_orientable()), Requirements::closed_orientable());
}

}  // namespace kneser
