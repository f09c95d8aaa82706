#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <array>
#include <numeric>

#include "kneser/error.hpp"
#include "kneser/normal.hpp"
#include "kneser/parallel.hpp"

namespace kneser {

namespace {

using boost::multiprecision::cpp_int;

constexpr std::size_t kMaxWords = 4;
constexpr std::size_t kMaxColumns = 64 * kMaxWords;

class ZeroSet {
 public:
  void set(std::size_t i) { words_[i / 64] |= 1ULL << (i % 64); }

  ZeroSet operator&(const ZeroSet& o) const {
    ZeroSet out;
    for (std::size_t w = 0; w < kMaxWords; ++w) out.words_[w] = words_[w] & o.words_[w];
    return out;
  }

  bool contains(const ZeroSet& o) const {
    for (std::size_t w = 0; w < kMaxWords; ++w)
      if ((o.words_[w] & ~words_[w]) != 0) return false;
    return true;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }

 private:
  std::array<std::uint64_t, kMaxWords> words_{};
};

struct Ray {
  std::vector<long long> v;
  ZeroSet zeros;
  std::size_t zero_count = 0;
};

Ray make_ray(std::vector<long long> v) {
  Ray r;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] == 0) r.zeros.set(i);
  r.zero_count = r.zeros.count();
  r.v = std::move(v);
  return r;
}

bool quad_compatible(const std::vector<long long>& v) {
  for (std::size_t t = 0; t * kCoordsPerTet < v.size(); ++t) {
    int nonzero = 0;
    for (int q = 0; q < 3; ++q) nonzero += v[t * kCoordsPerTet + 4 + static_cast<std::size_t>(q)] != 0;
    if (nonzero > 1) return false;
  }
  return true;
}

// Incremental exact row echelon form, used to skip matching rows that are
// implied by the ones already processed.
class RankTracker {
 public:
  bool insert(const std::vector<int>& row) {
    std::vector<cpp_int> r(row.begin(), row.end());
    for (const auto& [pivot, basis] : basis_) {
      if (r[pivot] == 0) continue;
      const cpp_int a = basis[pivot];
      const cpp_int b = r[pivot];
      for (std::size_t i = 0; i < r.size(); ++i) r[i] = r[i] * a - basis[i] * b;
      normalize(r);
    }
    for (std::size_t i = 0; i < r.size(); ++i)
      if (r[i] != 0) {
        basis_.emplace_back(i, std::move(r));
        return true;
      }
    return false;
  }

  int rank() const { return static_cast<int>(basis_.size()); }

 private:
  static void normalize(std::vector<cpp_int>& r) {
    cpp_int g = 0;
    for (const auto& x : r) g = gcd(g, abs(x));
    if (g > 1)
      for (auto& x : r) x /= g;
  }

  std::vector<std::pair<std::size_t, std::vector<cpp_int>>> basis_;
};

long long dot(const std::vector<int>& row, const std::vector<long long>& v) {
  __int128 s = 0;
  for (std::size_t i = 0; i < row.size(); ++i)
    if (row[i] != 0) s += static_cast<__int128>(row[i]) * v[i];
  if (s > std::numeric_limits<long long>::max() || s < std::numeric_limits<long long>::min())
    throw Error(ErrorCode::Overflow, "ray evaluation overflow");
  return static_cast<long long>(s);
}

std::vector<long long> combine(const std::vector<long long>& u, long long a,
                               const std::vector<long long>& v, long long b) {
  std::vector<__int128> w(u.size());
  __int128 g = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    w[i] = static_cast<__int128>(a) * v[i] + static_cast<__int128>(b) * u[i];
    g = std::gcd(g, w[i]);
  }
  std::vector<long long> out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    const __int128 x = g > 1 ? w[i] / g : w[i];
    if (x > std::numeric_limits<long long>::max())
      throw Error(ErrorCode::Overflow, "ray coordinate overflow");
    out[i] = static_cast<long long>(x);
  }
  return out;
}

}  // namespace

std::vector<NormalCoordinates> enumerate_vertex_solutions(const Triangulation& tri,
                                                          const EnumerationOptions& options) {
  if (!tri.is_closed()) throw Error(ErrorCode::NotClosed, "enumeration requires a closed triangulation");
  if (tri.size() > options.max_tetrahedra)
    throw Error(ErrorCode::BudgetExceeded, std::to_string(tri.size()) + " tetrahedra exceeds the limit of " +
                                               std::to_string(options.max_tetrahedra));
  const auto sys = matching_system(tri);
  const std::size_t n = static_cast<std::size_t>(sys.columns);

  if (n > kMaxColumns) throw Error(ErrorCode::BudgetExceeded, "too many coordinates for the ray representation");

  std::vector<Ray> rays;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<long long> v(n, 0);
    v[i] = 1;
    rays.push_back(make_ray(std::move(v)));
  }

  // Rows touching only low-index tetrahedra first keeps the intermediate
  // cones small.
  std::vector<std::size_t> order(sys.rows.size());
  std::iota(order.begin(), order.end(), 0);
  const auto span = [&](std::size_t r) {
    const auto& row = sys.rows[r];
    std::size_t lo = row.size(), hi = 0;
    for (std::size_t i = 0; i < row.size(); ++i)
      if (row[i] != 0) {
        lo = std::min(lo, i);
        hi = i;
      }
    return std::pair{hi, lo};
  };
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return span(a) < span(b); });

  RankTracker rank;
  for (std::size_t r : order) {
    const auto& row = sys.rows[r];
    const int processed = rank.rank();
    if (!rank.insert(row)) continue;

    std::vector<long long> value(rays.size());
    std::vector<std::size_t> pos, neg;
    std::vector<Ray> next;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      value[i] = dot(row, rays[i].v);
      if (value[i] > 0)
        pos.push_back(i);
      else if (value[i] < 0)
        neg.push_back(i);
      else
        next.push_back(rays[i]);
    }

    const std::size_t needed = n - static_cast<std::size_t>(processed) - 2;
    std::vector<std::vector<Ray>> found(pos.size());
    parallel_chunks(pos.size(), 16, [&](std::size_t begin, std::size_t end) {
      for (std::size_t pi = begin; pi < end; ++pi) {
        const std::size_t i = pos[pi];
        for (std::size_t j : neg) {
          const ZeroSet common = rays[i].zeros & rays[j].zeros;
          const std::size_t common_count = common.count();
          if (common_count < needed) continue;
          bool compatible = true;
          for (std::size_t t = 0; t * kCoordsPerTet < n && compatible; ++t) {
            int used = 0;
            for (std::size_t q = 4; q < 7; ++q) {
              const std::size_t c = t * kCoordsPerTet + q;
              used += rays[i].v[c] != 0 || rays[j].v[c] != 0;
            }
            compatible = used <= 1;
          }
          if (!compatible) continue;
          bool adjacent = true;
          for (std::size_t k = 0; k < rays.size() && adjacent; ++k)
            if (rays[k].zero_count >= common_count && k != i && k != j && rays[k].zeros.contains(common))
              adjacent = false;
          if (!adjacent) continue;
          found[pi].push_back(make_ray(combine(rays[i].v, value[i], rays[j].v, -value[j])));
        }
      }
    });
    for (auto& batch : found)
      for (auto& ray : batch) next.push_back(std::move(ray));
    if (next.size() > options.max_rays)
      throw Error(ErrorCode::BudgetExceeded, "intermediate ray count exceeds " + std::to_string(options.max_rays));
    rays = std::move(next);
  }

  std::vector<NormalCoordinates> out;
  for (auto& r : rays)
    if (quad_compatible(r.v)) out.emplace_back(std::move(r.v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace kneser
