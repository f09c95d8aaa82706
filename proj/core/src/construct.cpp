#include "kneser/construct.hpp"

#include <algorithm>

#include "kneser/error.hpp"

namespace kneser {

namespace {

std::size_t U(int x) { return static_cast<std::size_t>(x); }

Triangulation from_text(const char* body) {
  return validate(parse_tri(std::string("tri 1\nntet 2\n") + body), Requirements::closed_orientable());
}

}  // namespace

Triangulation boundary_4simplex() {
  GluingTable t(5);
  const auto local = [](int tet, int global) { return global < tet ? global : global - 1; };
  for (int i = 0; i < 5; ++i) {
    std::array<int, 4> verts{};
    for (int x = 0, k = 0; x < 5; ++x)
      if (x != i) verts[U(k++)] = x;
    for (int f = 0; f < 4; ++f) {
      const int g = verts[U(f)];
      std::array<int, 4> img{};
      for (int l = 0; l < 4; ++l) img[U(l)] = l == f ? local(g, i) : local(g, verts[U(l)]);
      const Perm4 p(img[0], img[1], img[2], img[3]);
      t.set(i, f, Gluing{g, p[f], p});
    }
  }
  return validate(t, Requirements::closed_orientable());
}

Triangulation stacked_chain(int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "chain length must be nonnegative");
  GluingTable t(n);
  for (int k = 0; k + 1 < n; ++k) t.glue(k, 0, k + 1, Perm4(3, 0, 1, 2));
  return validate(t);
}

Triangulation projective_space() {
  return from_text("1:0:0132 1:1:0132 1:2:1023 1:3:1023\n0:0:0132 0:1:0132 0:2:1023 0:3:1023\n");
}

Triangulation lens_space_3_1() {
  return from_text("0:1:1023 0:0:1023 1:0:1302 1:2:1302\n0:2:2031 1:3:1302 0:3:2031 1:1:2031\n");
}

Triangulation lens_space_5_2() {
  return from_text("0:1:1230 0:0:3012 1:0:1302 1:1:2031\n0:2:2031 0:3:1302 1:3:1230 1:2:3012\n");
}

GluingTable one_four_move(const GluingTable& table, int tet) {
  if (tet < 0 || tet >= table.size()) throw Error(ErrorCode::InvalidArgument, "tetrahedron index out of range");
  const int n = table.size();
  GluingTable out = table;
  for (int k = 0; k < 3; ++k) out.add_tetrahedron();
  const auto piece = [&](int k) { return k == 0 ? tet : n + k - 1; };
  for (int k = 0; k < 4; ++k) {
    if (const auto& g = table.at(tet, k)) {
      const int target = g->tet == tet ? piece(g->face) : g->tet;
      out.set(piece(k), k, Gluing{target, g->face, g->perm});
      if (g->tet != tet) out.set(g->tet, g->face, Gluing{piece(k), k, g->perm.inverse()});
    } else {
      out.set(piece(k), k, std::nullopt);
    }
    for (int j = 0; j < 4; ++j)
      if (j != k) out.set(piece(k), j, Gluing{piece(j), k, Perm4::transposition(j, k)});
  }
  return out;
}

GluingTable swap_tetrahedra(const GluingTable& table, int a, int b) {
  const auto r = [&](int x) { return x == a ? b : x == b ? a : x; };
  GluingTable out(table.size());
  for (int i = 0; i < table.size(); ++i)
    for (int f = 0; f < 4; ++f)
      if (const auto& g = table.at(i, f)) out.set(r(i), f, Gluing{r(g->tet), g->face, g->perm});
  return out;
}

}  // namespace kneser
