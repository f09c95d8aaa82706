#include "kneser/decomposition.hpp"
#include "kneser/error.hpp"

namespace kneser {

std::vector<Triangulation> crush(const Triangulation& tri, const NormalCoordinates& sphere) {
  if (!sphere.has_quad()) throw Error(ErrorCode::VertexLinkingRejected, "surface has no quadrilaterals");
  if (!sphere.satisfies_quad_constraint())
    throw Error(ErrorCode::InvalidArgument, "surface violates the quadrilateral constraint");
  const int n = tri.size();
  std::vector<int> index(static_cast<std::size_t>(n), -1);
  std::vector<int> survivors;
  for (int t = 0; t < n; ++t)
    if (sphere.quad_type(t) < 0) {
      index[static_cast<std::size_t>(t)] = static_cast<int>(survivors.size());
      survivors.push_back(t);
    }

  GluingTable out(static_cast<int>(survivors.size()));
  for (int t : survivors) {
    for (int f = 0; f < 4; ++f) {
      auto g = tri.gluing(t, f);
      if (!g) throw Error(ErrorCode::NotClosed, "crush requires a closed triangulation");
      Perm4 p = g->perm;
      int cur = g->tet;
      int steps = 0;
      while (index[static_cast<std::size_t>(cur)] < 0) {
        // A quad tetrahedron flattens so that the two faces opposite the
        // vertices of each quad-side pair are identified.
        const int q = sphere.quad_type(cur);
        const int in = p[f];
        const int exit = kQuadPartner[q][in];
        const Perm4 flip = Perm4::transposition(in, exit);
        const auto& next = tri.gluing(cur, exit);
        p = next->perm * flip * p;
        cur = next->tet;
        if (++steps > 8 * n) throw Error(ErrorCode::InvalidAfterCrush, "face chain does not terminate");
      }
      out.set(index[static_cast<std::size_t>(t)], f, Gluing{index[static_cast<std::size_t>(cur)], p[f], p});
    }
  }

  Triangulation crushed;
  try {
    crushed = validate(out, Requirements::closed_orientable());
  } catch (const Error& e) {
    throw Error(ErrorCode::InvalidAfterCrush, e.what());
  }
  auto pieces = split_components(crushed, Requirements::closed_orientable());
  for (const auto& piece : pieces)
    if (!is_closed_manifold(piece))
      throw Error(ErrorCode::InvalidAfterCrush, "crushed component is not a closed 3-manifold");
  return pieces;
}

}  // namespace kneser
