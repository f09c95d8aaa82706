#pragma once

#include <map>
#include <string>
#include <vector>

#include "kneser/triangulation.hpp"

namespace kneser {

/// Finitely generated abelian group Z^rank + Z/t1 + ... + Z/tk with
/// t1 | t2 | ... | tk and every ti > 1.
struct AbelianGroup {
  int rank = 0;
  std::vector<long long> torsion;

  bool trivial() const { return rank == 0 && torsion.empty(); }
  std::string str() const;
  bool operator==(const AbelianGroup&) const = default;
  auto operator<=>(const AbelianGroup&) const = default;
};

/// Prime-power decomposition of the torsion part, sorted.
std::vector<long long> elementary_divisors(const AbelianGroup& g);

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b);

/// Isomorphism test via rank and elementary divisors.
bool isomorphic(const AbelianGroup& a, const AbelianGroup& b);

/// Sparse integer matrix, row-major.
struct SparseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::map<int, long long>> entries;

  SparseMatrix() = default;
  SparseMatrix(int r, int c) : rows(r), cols(c), entries(static_cast<std::size_t>(r)) {}

  void add(int r, int c, long long v);
  long long at(int r, int c) const;
};

/// Nonzero invariant factors of the Smith normal form, ascending.
/// Sparse unit pivots are eliminated first; the leftover block is reduced
/// densely with arbitrary-precision integers.
std::vector<long long> smith_invariants(SparseMatrix m);

/// Cellular boundary map d_k : C_k -> C_{k-1} of the orbit skeleton, as a
/// (#(k-1)-cells) x (#k-cells) matrix, for k = 1, 2, 3.
SparseMatrix boundary_matrix(const Triangulation& tri, int k);

/// H_k for k in {0, 1, 2, 3}.
AbelianGroup homology(const Triangulation& tri, int k);

}  // namespace kneser
