#include <algorithm>
#include <set>

#include "kneser/construct.hpp"
#include "kneser/decomposition.hpp"
#include "kneser/error.hpp"

namespace kneser {

namespace {

std::size_t U(int x) { return static_cast<std::size_t>(x); }

int distinct_vertices(const SkeletonTable& sk, int tet) {
  std::set<int> v(sk.vertex_of[U(tet)].begin(), sk.vertex_of[U(tet)].end());
  return static_cast<int>(v.size());
}

// Brings a tetrahedron with four distinct vertices to index 0.
GluingTable embedded_first(const Triangulation& tri) {
  GluingTable table = tri.table();
  auto sk = compute_skeleton(table);
  while (distinct_vertices(sk, 0) < 4) {
    const int n = table.size();
    table = one_four_move(table, 0);
    sk = compute_skeleton(table);
    int best = 0;
    for (int t : {0, n, n + 1, n + 2})
      if (distinct_vertices(sk, t) > distinct_vertices(sk, best)) best = t;
    if (best != 0) {
      table = swap_tetrahedra(table, 0, best);
      sk = compute_skeleton(table);
    }
  }
  return table;
}

}  // namespace

Triangulation connected_sum(const Triangulation& a, const Triangulation& b) {
  if (a.empty() || b.empty()) throw Error(ErrorCode::InvalidArgument, "connected sum of an empty triangulation");
  if (!a.is_closed() || !a.is_orientable() || !b.is_closed() || !b.is_orientable())
    throw Error(ErrorCode::InvalidArgument, "connected sum requires closed orientable summands");
  const Triangulation ta = validate(embedded_first(a), Requirements::closed_orientable());
  const Triangulation tb = validate(embedded_first(b), Requirements::closed_orientable());
  const int na = ta.size() - 1;
  const int nb = tb.size() - 1;
  GluingTable out(na + nb);
  for (int t = 1; t <= na; ++t)
    for (int f = 0; f < 4; ++f) {
      const auto& g = ta.gluing(t, f);
      if (g->tet != 0) out.set(t - 1, f, Gluing{g->tet - 1, g->face, g->perm});
    }
  for (int t = 1; t <= nb; ++t)
    for (int f = 0; f < 4; ++f) {
      const auto& g = tb.gluing(t, f);
      if (g->tet != 0) out.set(na + t - 1, f, Gluing{na + g->tet - 1, g->face, g->perm});
    }
  // Identify the two removed tetrahedra's boundaries through phi, chosen so
  // the coherent orientations of both sides match up.
  const bool opposite = ta.orientation()[0] * tb.orientation()[0] < 0;
  const Perm4 phi = opposite ? Perm4() : Perm4::transposition(2, 3);
  for (int f = 0; f < 4; ++f) {
    const auto& ga = ta.gluing(0, f);
    const auto& gb = tb.gluing(0, phi[f]);
    const Perm4 p = gb->perm * phi * ga->perm.inverse();
    out.glue(ga->tet - 1, ga->face, na + gb->tet - 1, p);
  }
  std::vector<std::string> labels;
  for (int t = 1; t <= na; ++t) labels.push_back(ta.labels()[U(t)].empty() ? "A" : ta.labels()[U(t)]);
  for (int t = 1; t <= nb; ++t) labels.push_back(tb.labels()[U(t)].empty() ? "B" : tb.labels()[U(t)]);
  return validate(out, Requirements::closed_orientable(), std::move(labels));
}

namespace {

// Tries a 3-2 move about local edge `e` of tet `t0`; returns false if the
// edge does not have degree three in three distinct tetrahedra.
bool three_two(const GluingTable& table, int t0, int e, GluingTable& result) {
  std::array<int, 3> tets{};
  std::array<std::array<int, 4>, 3> lab{};  // (a, b, c, d) per tet
  const auto [a0, b0] = kEdgeVertices[U(e)];
  int c0 = -1, d0 = -1;
  for (int v = 0; v < 4; ++v)
    if (v != a0 && v != b0) (c0 < 0 ? c0 : d0) = v;
  std::array<int, 4> cur{a0, b0, c0, d0};
  int t = t0;
  for (int k = 0; k < 3; ++k) {
    tets[U(k)] = t;
    lab[U(k)] = cur;
    const auto& g = table.at(t, cur[3]);
    if (!g) return false;
    const Perm4 p = g->perm;
    cur = {p[cur[0]], p[cur[1]], p[cur[3]], p[cur[2]]};
    t = g->tet;
  }
  if (t != t0 || cur != lab[0]) return false;
  if (tets[0] == tets[1] || tets[1] == tets[2] || tets[0] == tets[2]) return false;

  // Equatorial vertices: E_k is vertex c of tet k, and d of tet k is E_{k+2}.
  const int n = table.size();
  std::vector<int> keep;
  for (int i = 0; i < n; ++i)
    if (std::find(tets.begin(), tets.end(), i) == tets.end()) keep.push_back(i);
  std::vector<int> remap(U(n), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) remap[U(keep[i])] = static_cast<int>(i);
  const int A = static_cast<int>(keep.size());
  const int B = A + 1;
  GluingTable out(A + 2);
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (int f = 0; f < 4; ++f) {
      const auto& g = table.at(keep[i], f);
      if (g && remap[U(g->tet)] >= 0) out.set(static_cast<int>(i), f, Gluing{remap[U(g->tet)], g->face, g->perm});
    }
  // New tets: A = (a, E0, E1, E2), B = (b, E0, E1, E2), glued along face 0.
  out.glue(A, 0, B, Perm4());
  for (int k = 0; k < 3; ++k) {
    const auto& L = lab[U(k)];
    for (int side = 0; side < 2; ++side) {
      const int removed = side == 0 ? L[1] : L[0];  // face opposite b keeps a
      const int newtet = side == 0 ? A : B;
      // Map tet k's vertices on this face to the new tet's local vertices.
      std::array<int, 4> img{};
      img[U(side == 0 ? L[0] : L[1])] = 0;
      img[U(L[2])] = 1 + k;
      img[U(L[3])] = 1 + (k + 2) % 3;
      img[U(removed)] = 1 + (k + 1) % 3;
      const Perm4 sigma(img[0], img[1], img[2], img[3]);
      const int newface = sigma[removed];
      const auto& g = table.at(tets[U(k)], removed);
      if (!g) return false;
      int other = g->tet;
      Perm4 q = g->perm * sigma.inverse();
      int otherface = g->face;
      const auto pos = std::find(tets.begin(), tets.end(), other);
      if (pos != tets.end()) {
        // Glued to another of the three: translate into A/B coordinates.
        const int k2 = static_cast<int>(pos - tets.begin());
        const auto& L2 = lab[U(k2)];
        const bool keeps_a = g->face == L2[1];
        if (!keeps_a && g->face != L2[0]) return false;
        std::array<int, 4> img2{};
        img2[U(keeps_a ? L2[0] : L2[1])] = 0;
        img2[U(L2[2])] = 1 + k2;
        img2[U(L2[3])] = 1 + (k2 + 2) % 3;
        img2[U(g->face)] = 1 + (k2 + 1) % 3;
        const Perm4 sigma2(img2[0], img2[1], img2[2], img2[3]);
        q = sigma2 * q;
        other = keeps_a ? A : B;
        otherface = sigma2[g->face];
      } else {
        other = remap[U(other)];
      }
      out.set(newtet, newface, Gluing{other, otherface, q});
      if (std::find(tets.begin(), tets.end(), g->tet) == tets.end())
        out.set(other, otherface, Gluing{newtet, newface, q.inverse()});
    }
  }
  result = std::move(out);
  return true;
}

}  // namespace

Triangulation simplify(const Triangulation& tri) {
  if (!tri.is_closed()) throw Error(ErrorCode::InvalidArgument, "simplify requires a closed triangulation");
  Triangulation cur = tri;
  while (true) {
    const auto& sk = cur.skeleton();
    bool moved = false;
    for (int e = 0; e < sk.num_edges && !moved; ++e) {
      if (sk.edge_degree[U(e)] != 3) continue;
      auto [t, le] = sk.edge_members[U(e)].front();
      GluingTable next;
      if (three_two(cur.table(), t, le, next)) {
        cur = validate(next, {cur.is_closed(), cur.is_orientable()});
        moved = true;
      }
    }
    if (!moved) return cur;
  }
}

}  // namespace kneser
