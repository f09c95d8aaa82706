#include "kneser/homology.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdlib>
#include <limits>
#include <set>
#include <sstream>

#include "kneser/error.hpp"

namespace kneser {

using boost::multiprecision::cpp_int;

std::string AbelianGroup::str() const {
  std::ostringstream out;
  bool first = true;
  if (rank > 0) {
    out << "Z";
    if (rank > 1) out << "^" << rank;
    first = false;
  }
  for (long long t : torsion) {
    if (!first) out << " + ";
    out << "Z/" << t;
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

std::vector<long long> elementary_divisors(const AbelianGroup& g) {
  std::vector<long long> out;
  for (long long t : g.torsion) {
    long long n = t;
    for (long long p = 2; p * p <= n; ++p) {
      if (n % p) continue;
      long long q = 1;
      while (n % p == 0) {
        n /= p;
        q *= p;
      }
      out.push_back(q);
    }
    if (n > 1) out.push_back(n);
  }
  std::sort(out.begin(), out.end());
  return out;
}

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b) {
  // Rebuild invariant factors from the combined prime powers.
  AbelianGroup joined{a.rank + b.rank, a.torsion};
  joined.torsion.insert(joined.torsion.end(), b.torsion.begin(), b.torsion.end());
  auto divisors = elementary_divisors(joined);
  std::map<long long, std::vector<long long>> by_prime;
  for (long long q : divisors) {
    long long p = 2;
    while (q % p) ++p;
    by_prime[p].push_back(q);
  }
  std::size_t depth = 0;
  for (auto& [p, powers] : by_prime) {
    std::sort(powers.rbegin(), powers.rend());
    depth = std::max(depth, powers.size());
  }
  std::vector<long long> factors(depth, 1);
  for (auto& [p, powers] : by_prime)
    for (std::size_t i = 0; i < powers.size(); ++i) factors[i] *= powers[i];
  std::sort(factors.begin(), factors.end());
  return {joined.rank, factors};
}

bool isomorphic(const AbelianGroup& a, const AbelianGroup& b) {
  return a.rank == b.rank && elementary_divisors(a) == elementary_divisors(b);
}

void SparseMatrix::add(int r, int c, long long v) {
  if (v == 0) return;
  auto& row = entries[static_cast<std::size_t>(r)];
  auto it = row.find(c);
  if (it == row.end()) {
    row.emplace(c, v);
  } else {
    it->second += v;
    if (it->second == 0) row.erase(it);
  }
}

long long SparseMatrix::at(int r, int c) const {
  const auto& row = entries[static_cast<std::size_t>(r)];
  auto it = row.find(c);
  return it == row.end() ? 0 : it->second;
}

namespace {

std::vector<cpp_int> dense_smith(std::vector<std::vector<cpp_int>> a) {
  const std::size_t m = a.size();
  const std::size_t n = m ? a[0].size() : 0;
  std::vector<cpp_int> diag;
  std::size_t k = 0;
  while (k < m && k < n) {
    // Pivot: smallest nonzero magnitude in the trailing block.
    std::size_t pr = m, pc = n;
    for (std::size_t i = k; i < m; ++i)
      for (std::size_t j = k; j < n; ++j)
        if (a[i][j] != 0 && (pr == m || abs(a[i][j]) < abs(a[pr][pc]))) {
          pr = i;
          pc = j;
        }
    if (pr == m) break;
    std::swap(a[k], a[pr]);
    for (auto& row : a) std::swap(row[k], row[pc]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = k + 1; i < m; ++i) {
        if (a[i][k] == 0) continue;
        cpp_int q = a[i][k] / a[k][k];
        for (std::size_t j = k; j < n; ++j) a[i][j] -= q * a[k][j];
        if (a[i][k] != 0) {
          std::swap(a[k], a[i]);
          clean = false;
        }
      }
      for (std::size_t j = k + 1; j < n; ++j) {
        if (a[k][j] == 0) continue;
        cpp_int q = a[k][j] / a[k][k];
        for (std::size_t i = k; i < m; ++i) a[i][j] -= q * a[i][k];
        if (a[k][j] != 0) {
          for (auto& row : a) std::swap(row[k], row[j]);
          clean = false;
        }
      }
      if (clean) {
        // Divisibility condition on the trailing block.
        for (std::size_t i = k + 1; i < m && clean; ++i)
          for (std::size_t j = k + 1; j < n; ++j)
            if (a[i][j] % a[k][k] != 0) {
              for (std::size_t jj = k; jj < n; ++jj) a[k][jj] += a[i][jj];
              clean = false;
              break;
            }
      }
    }
    diag.push_back(abs(a[k][k]));
    ++k;
  }
  return diag;
}

}  // namespace

std::vector<long long> smith_invariants(SparseMatrix m) {
  std::vector<std::set<int>> col_rows(static_cast<std::size_t>(m.cols));
  for (int r = 0; r < m.rows; ++r)
    for (auto& [c, v] : m.entries[static_cast<std::size_t>(r)]) col_rows[static_cast<std::size_t>(c)].insert(r);
  std::vector<bool> row_alive(static_cast<std::size_t>(m.rows), true);
  std::vector<long long> result;
  const auto safe_sub = [](long long x, long long y) {
    long long out;
    if (__builtin_sub_overflow(x, y, &out)) throw Error(ErrorCode::Overflow, "entry overflow in elimination");
    return out;
  };

  while (true) {
    int best_row = -1, best_col = -1;
    std::size_t best_cost = 0;
    for (int r = 0; r < m.rows; ++r) {
      if (!row_alive[static_cast<std::size_t>(r)]) continue;
      const auto& row = m.entries[static_cast<std::size_t>(r)];
      for (auto& [c, v] : row) {
        if (v != 1 && v != -1) continue;
        std::size_t cost = (row.size() - 1) * (col_rows[static_cast<std::size_t>(c)].size() - 1);
        if (best_row < 0 || cost < best_cost) {
          best_row = r;
          best_col = c;
          best_cost = cost;
        }
      }
      if (best_row >= 0 && best_cost == 0) break;
    }
    if (best_row < 0) break;
    const auto pivot_row = m.entries[static_cast<std::size_t>(best_row)];
    const long long pv = pivot_row.at(best_col);
    std::vector<int> targets;
    for (int r : col_rows[static_cast<std::size_t>(best_col)])
      if (r != best_row) targets.push_back(r);
    for (int r : targets) {
      auto& row = m.entries[static_cast<std::size_t>(r)];
      const long long factor = row.at(best_col) * pv;  // pv = +-1
      for (auto& [c, v] : pivot_row) {
        long long prod;
        if (__builtin_mul_overflow(factor, v, &prod)) throw Error(ErrorCode::Overflow, "entry overflow in elimination");
        auto it = row.find(c);
        long long nv = safe_sub(it == row.end() ? 0 : it->second, prod);
        if (nv == 0) {
          if (it != row.end()) row.erase(it);
          col_rows[static_cast<std::size_t>(c)].erase(r);
        } else if (it == row.end()) {
          row.emplace(c, nv);
          col_rows[static_cast<std::size_t>(c)].insert(r);
        } else {
          it->second = nv;
        }
      }
    }
    for (auto& [c, v] : pivot_row) col_rows[static_cast<std::size_t>(c)].erase(best_row);
    m.entries[static_cast<std::size_t>(best_row)].clear();
    row_alive[static_cast<std::size_t>(best_row)] = false;
    result.push_back(1);
  }

  std::vector<int> live_rows, live_cols;
  for (int r = 0; r < m.rows; ++r)
    if (!m.entries[static_cast<std::size_t>(r)].empty()) live_rows.push_back(r);
  for (int c = 0; c < m.cols; ++c)
    if (!col_rows[static_cast<std::size_t>(c)].empty()) live_cols.push_back(c);
  if (!live_rows.empty()) {
    std::map<int, std::size_t> col_pos;
    for (std::size_t j = 0; j < live_cols.size(); ++j) col_pos[live_cols[j]] = j;
    std::vector<std::vector<cpp_int>> dense(live_rows.size(), std::vector<cpp_int>(live_cols.size()));
    for (std::size_t i = 0; i < live_rows.size(); ++i)
      for (auto& [c, v] : m.entries[static_cast<std::size_t>(live_rows[i])]) dense[i][col_pos[c]] = v;
    for (const auto& d : dense_smith(std::move(dense))) {
      if (d > cpp_int(std::numeric_limits<long long>::max()))
        throw Error(ErrorCode::Overflow, "invariant factor exceeds 64 bits");
      result.push_back(static_cast<long long>(d));
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

SparseMatrix boundary_matrix(const Triangulation& tri, int k) {
  const auto& sk = tri.skeleton();
  const auto U = [](int x) { return static_cast<std::size_t>(x); };
  switch (k) {
    case 1: {
      SparseMatrix d(sk.num_vertices, sk.num_edges);
      for (int e = 0; e < sk.num_edges; ++e) {
        auto [t, le] = sk.edge_members[U(e)].front();
        // Representative is the least member; its sign is +1.
        d.add(sk.vertex_of[U(t)][U(kEdgeVertices[U(le)][1])], e, 1);
        d.add(sk.vertex_of[U(t)][U(kEdgeVertices[U(le)][0])], e, -1);
      }
      return d;
    }
    case 2: {
      SparseMatrix d(sk.num_edges, sk.num_faces);
      for (int f = 0; f < sk.num_faces; ++f) {
        auto [t, lf] = sk.face_members[U(f)].front();
        std::array<int, 3> u{};
        int n = 0;
        for (int v = 0; v < 4; ++v)
          if (v != lf) u[U(n++)] = v;
        const auto term = [&](int a, int b, long long coeff) {
          const int le = edge_index(a, b);
          d.add(sk.edge_of[U(t)][U(le)], f, coeff * sk.edge_sign[U(t)][U(le)]);
        };
        term(u[1], u[2], 1);
        term(u[0], u[2], -1);
        term(u[0], u[1], 1);
      }
      return d;
    }
    case 3: {
      SparseMatrix d(sk.num_faces, tri.size());
      for (int t = 0; t < tri.size(); ++t)
        for (int f = 0; f < 4; ++f)
          d.add(sk.face_of[U(t)][U(f)], t, (f % 2 == 0 ? 1 : -1) * sk.face_sign[U(t)][U(f)]);
      return d;
    }
    default:
      throw Error(ErrorCode::InvalidArgument, "boundary map index must be 1, 2 or 3");
  }
}

AbelianGroup homology(const Triangulation& tri, int k) {
  if (k < 0 || k > 3) throw Error(ErrorCode::InvalidArgument, "homology degree must be in 0..3");
  const auto& sk = tri.skeleton();
  const int dims[4] = {sk.num_vertices, sk.num_edges, sk.num_faces, tri.size()};
  const auto rank_of = [&](int j) -> int {
    if (j < 1 || j > 3) return 0;
    return static_cast<int>(smith_invariants(boundary_matrix(tri, j)).size());
  };
  AbelianGroup g;
  std::vector<long long> inv_next;
  if (k + 1 <= 3) inv_next = smith_invariants(boundary_matrix(tri, k + 1));
  g.rank = dims[k] - rank_of(k) - static_cast<int>(inv_next.size());
  for (long long v : inv_next)
    if (v > 1) g.torsion.push_back(v);
  return g;
}

}  // namespace kneser
