#include "kneser/metric.hpp"

#include <algorithm>
#include <queue>

#include "kneser/error.hpp"

namespace kneser {

std::vector<int> quasimetric_from(const Triangulation& tri, int source) {
  const auto& sk = tri.skeleton();
  std::vector<int> dist(static_cast<std::size_t>(tri.size()), -1);
  std::vector<bool> vertex_seen(static_cast<std::size_t>(sk.num_vertices), false);
  std::queue<int> q;
  dist[static_cast<std::size_t>(source)] = 0;
  q.push(source);
  while (!q.empty()) {
    const int t = q.front();
    q.pop();
    for (int v = 0; v < 4; ++v) {
      const int orbit = sk.vertex_of[static_cast<std::size_t>(t)][static_cast<std::size_t>(v)];
      if (vertex_seen[static_cast<std::size_t>(orbit)]) continue;
      vertex_seen[static_cast<std::size_t>(orbit)] = true;
      for (auto [u, lv] : sk.vertex_members[static_cast<std::size_t>(orbit)]) {
        if (dist[static_cast<std::size_t>(u)] >= 0) continue;
        dist[static_cast<std::size_t>(u)] = dist[static_cast<std::size_t>(t)] + 1;
        q.push(u);
      }
    }
  }
  return dist;
}

int quasimetric(const Triangulation& tri, int a, int b) {
  if (a < 0 || b < 0 || a >= tri.size() || b >= tri.size())
    throw Error(ErrorCode::InvalidArgument, "tetrahedron index out of range");
  const int d = quasimetric_from(tri, a)[static_cast<std::size_t>(b)];
  if (d < 0)
    throw Error(ErrorCode::Disconnected,
                "no chain of tetrahedra joins " + std::to_string(a) + " and " + std::to_string(b));
  return d;
}

SupportMetrics support_metrics(const Triangulation& tri, std::vector<int> support) {
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  if (support.empty()) throw Error(ErrorCode::EmptySupport, "support is empty");
  SupportMetrics m;
  m.size = static_cast<int>(support.size());
  for (std::size_t i = 0; i < support.size(); ++i) {
    const auto dist = quasimetric_from(tri, support[i]);
    for (std::size_t j = i + 1; j < support.size(); ++j) {
      const int d = dist[static_cast<std::size_t>(support[j])];
      if (d < 0) throw Error(ErrorCode::Disconnected, "support is not contained in one component");
      m.diameter = std::max(m.diameter, d);
    }
  }
  m.support = std::move(support);
  return m;
}

}  // namespace kneser
